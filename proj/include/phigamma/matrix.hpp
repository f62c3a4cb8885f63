#pragma once

#include <vector>

#include "phigamma/intutil.hpp"

namespace phigamma {

/* dense row-major integer matrix */
struct Mat {
    int rows{}, cols{};
    std::vector<i64> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    i64& operator()(int r, int c) { return a[(size_t)r * cols + c]; }
    i64 operator()(int r, int c) const { return a[(size_t)r * cols + c]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_identity(int n);
Mat mat_mul(const Mat& A, const Mat& B);  // overflow-checked integer product
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat mat_neg(const Mat& A);
Mat mat_hstack(const Mat& A, const Mat& B);
Mat mat_diag(const std::vector<i64>& d);
bool mat_is_zero(const Mat& A);
std::vector<i64> mat_apply(const Mat& A, const std::vector<i64>& x);  // A x, checked
std::string mat_to_string(const Mat& A);

}  // namespace phigamma
