#include "phigamma/matrix.hpp"

#include <string>

namespace phigamma {

Mat mat_identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) fail(ErrCode::RankMismatch, "mat_mul shape");
    Mat C(A.rows, B.cols);
    for (int r = 0; r < A.rows; ++r)
        for (int j = 0; j < B.cols; ++j) {
            i128 acc = 0;
            for (int k = 0; k < A.cols; ++k) acc += (i128)A(r, k) * B(k, j);
            C(r, j) = checked_narrow(acc, "mat_mul");
        }
    return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) fail(ErrCode::RankMismatch, "mat_add shape");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = checked_add(A.a[i], B.a[i]);
    return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) fail(ErrCode::RankMismatch, "mat_sub shape");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = checked_add(A.a[i], -B.a[i]);
    return C;
}

Mat mat_neg(const Mat& A) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = -A.a[i];
    return C;
}

Mat mat_hstack(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) fail(ErrCode::RankMismatch, "mat_hstack shape");
    Mat C(A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) C(r, c) = A(r, c);
        for (int c = 0; c < B.cols; ++c) C(r, A.cols + c) = B(r, c);
    }
    return C;
}

Mat mat_diag(const std::vector<i64>& d) {
    Mat C((int)d.size(), (int)d.size());
    for (int i = 0; i < (int)d.size(); ++i) C(i, i) = d[i];
    return C;
}

bool mat_is_zero(const Mat& A) {
    for (i64 v : A.a)
        if (v != 0) return false;
    return true;
}

std::vector<i64> mat_apply(const Mat& A, const std::vector<i64>& x) {
    if ((int)x.size() != A.cols) fail(ErrCode::RankMismatch, "mat_apply shape");
    std::vector<i64> y(A.rows);
    for (int r = 0; r < A.rows; ++r) {
        i128 acc = 0;
        for (int c = 0; c < A.cols; ++c) acc += (i128)A(r, c) * x[c];
        y[r] = checked_narrow(acc, "mat_apply");
    }
    return y;
}

std::string mat_to_string(const Mat& A) {
    std::string s = "[";
    for (int r = 0; r < A.rows; ++r) {
        s += r ? ", [" : "[";
        for (int c = 0; c < A.cols; ++c) s += (c ? "," : "") + std::to_string(A(r, c));
        s += "]";
    }
    return s + "]";
}

}  // namespace phigamma
