#include "phigamma/snf.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "phigamma/intutil.hpp"

namespace phigamma {

namespace {

/*
 * Worker over Z/p^e.  Every entry of the matrix and of all four transform
 * certificates is kept as a canonical representative in [0, Q), so each
 * elementary operation costs one multiply-add per touched entry and nothing
 * ever grows.  Pivoting is by minimal p-adic valuation: over the local ring
 * Z/Q the minimal-valuation entry divides the whole trailing block, so one
 * clearing pass per pivot suffices and the diagonal comes out as p-powers
 * with nondecreasing exponents.
 */
class LocalWorker {
  public:
    LocalWorker(const Mat& A, i64 p, int e) : m(A.rows), n(A.cols), p_(p), e_(e) {
        if (p < 2) fail(ErrCode::NonPrime, "local smith: base must be at least 2");
        if (e < 1) fail(ErrCode::BadLevel, "local smith: exponent must be positive");
        Q = ipow_checked(p, e, "local smith modulus");
        D.assign((size_t)m * n, 0);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) D[(size_t)r * n + c] = umod(A(r, c), Q);
        U = eye(m);
        Uinv = eye(m);
        V = eye(n);
        Vinv = eye(n);
    }

    void run() {
        const int mn = std::min(m, n);
        for (int t = 0; t < mn; ++t) {
            int bi = -1, bj = -1, bv = e_;
            for (int i = t; i < m && bv > 0; ++i)
                for (int j = t; j < n; ++j) {
                    i64 x = d(i, j);
                    if (x == 0) continue;
                    int v = valuation(x, p_, e_);
                    if (v < bv) {
                        bv = v;
                        bi = i;
                        bj = j;
                        if (v == 0) break;
                    }
                }
            if (bi < 0) break; /* trailing block is zero mod Q */
            swap_rows(t, bi);
            swap_cols(t, bj);
            i64 pv = 1;
            for (int k = 0; k < bv; ++k) pv *= p_;
            scale_row(t, invmod(d(t, t) / pv, Q)); /* unit part off: d(t,t) = p^bv */
            for (int i = t + 1; i < m; ++i)
                if (d(i, t) != 0) row_addmul(i, t, -(d(i, t) / pv));
            /* column t now holds the pivot alone, so this pass causes no fill-in */
            for (int j = t + 1; j < n; ++j)
                if (d(t, j) != 0) col_addmul(j, t, -(d(t, j) / pv));
        }
    }

    LocalSmith take() const {
        LocalSmith out;
        out.p = p_;
        out.e = e_;
        out.modulus = Q;
        out.D = to_mat(D, m, n);
        out.U = to_mat(U, m, m);
        out.Uinv = to_mat(Uinv, m, m);
        out.V = to_mat(V, n, n);
        out.Vinv = to_mat(Vinv, n, n);
        out.diag.resize(m);
        const int mn = std::min(m, n);
        for (int i = 0; i < m; ++i) {
            i64 x = i < mn ? D[(size_t)i * n + i] : 0;
            out.diag[i] = x == 0 ? Q : x;
        }
        return out;
    }

  private:
    int m, n;
    i64 p_;
    int e_;
    i64 Q{};
    std::vector<i64> D, U, Uinv, V, Vinv;

    static std::vector<i64> eye(int k) {
        std::vector<i64> a((size_t)k * k, 0);
        for (int i = 0; i < k; ++i) a[(size_t)i * k + i] = 1;
        return a;
    }
    static Mat to_mat(const std::vector<i64>& a, int r, int c) {
        Mat out(r, c);
        out.a = a;
        return out;
    }
    i64& d(int r, int c) { return D[(size_t)r * n + c]; }
    i64 d(int r, int c) const { return D[(size_t)r * n + c]; }
    i64& u(int r, int c) { return U[(size_t)r * m + c]; }
    i64& ui(int r, int c) { return Uinv[(size_t)r * m + c]; }
    i64& v(int r, int c) { return V[(size_t)r * n + c]; }
    i64& vi(int r, int c) { return Vinv[(size_t)r * n + c]; }

    /* x + f*y reduced into [0, Q); f may be negative */
    i64 fma(i64 x, i64 f, i64 y) const {
        i128 t = (i128)x + (i128)f * (i128)y;
        i64 r = (i64)(t % Q);
        return r < 0 ? r + Q : r;
    }

    void row_addmul(int dst, int src, i64 f) {
        for (int c = 0; c < n; ++c) d(dst, c) = fma(d(dst, c), f, d(src, c));
        for (int c = 0; c < m; ++c) u(dst, c) = fma(u(dst, c), f, u(src, c));
        for (int r = 0; r < m; ++r) ui(r, src) = fma(ui(r, src), -f, ui(r, dst));
    }
    void col_addmul(int dst, int src, i64 f) {
        for (int r = 0; r < m; ++r) d(r, dst) = fma(d(r, dst), f, d(r, src));
        for (int r = 0; r < n; ++r) v(r, dst) = fma(v(r, dst), f, v(r, src));
        for (int c = 0; c < n; ++c) vi(src, c) = fma(vi(src, c), -f, vi(dst, c));
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < n; ++c) std::swap(d(a, c), d(b, c));
        for (int c = 0; c < m; ++c) std::swap(u(a, c), u(b, c));
        for (int r = 0; r < m; ++r) std::swap(ui(r, a), ui(r, b));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m; ++r) std::swap(d(r, a), d(r, b));
        for (int r = 0; r < n; ++r) std::swap(v(r, a), v(r, b));
        for (int c = 0; c < n; ++c) std::swap(vi(a, c), vi(b, c));
    }
    void scale_row(int i, i64 s) { /* s a unit mod Q */
        i64 si = invmod(s, Q);
        for (int c = 0; c < n; ++c) d(i, c) = fma(0, s, d(i, c));
        for (int c = 0; c < m; ++c) u(i, c) = fma(0, s, u(i, c));
        for (int r = 0; r < m; ++r) ui(r, i) = fma(0, si, ui(r, i));
    }
};

/*
 * Exact integer worker on arbitrary-precision entries.  Pivoting is by
 * minimal magnitude with remainder swaps, the pivot row is cleared before the
 * pivot column (the second pass then causes no fill-in), and a final sweep
 * enforces the divisibility chain.  Certificates are narrowed to 64 bits at
 * the end; entries outside that range report Overflow.
 */
class ZWorker {
  public:
    explicit ZWorker(const Mat& A) : m(A.rows), n(A.cols) {
        D.resize((size_t)m * n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) D[(size_t)r * n + c] = (long)A(r, c);
        U = eye(m);
        Uinv = eye(m);
        V = eye(n);
        Vinv = eye(n);
    }

    void run() {
        diagonalize(0);
        const int mn = std::min(m, n);
        for (int guard = 0;; ++guard) {
            if (guard > 4 * mn * mn + 16)
                fail(ErrCode::Internal, "smith: divisibility sweep does not converge");
            bool dirty = false;
            for (int i = 0; i + 1 < mn && !dirty; ++i)
                for (int j = i + 1; j < mn && !dirty; ++j) {
                    const mpz_class& a = d(i, i);
                    const mpz_class& b = d(j, j);
                    if (a == 0 && b != 0) {
                        swap_rows(i, j);
                        swap_cols(i, j);
                        dirty = true;
                    } else if (a != 0 && b % a != 0) {
                        col_addmul(i, j, 1); /* pull d(j,j) into column i, then redo */
                        diagonalize(i);
                        dirty = true;
                    }
                }
            if (!dirty) break;
        }
        for (int i = 0; i < mn; ++i)
            if (d(i, i) < 0) negate_row(i);
    }

    Smith take() const {
        Smith out;
        out.D = narrow(D, m, n, "smith result");
        out.U = narrow(U, m, m, "smith row transform");
        out.Uinv = narrow(Uinv, m, m, "smith row transform inverse");
        out.V = narrow(V, n, n, "smith column transform");
        out.Vinv = narrow(Vinv, n, n, "smith column transform inverse");
        const int mn = std::min(m, n);
        out.diag.resize(mn);
        out.rank = 0;
        for (int i = 0; i < mn; ++i) {
            out.diag[i] = out.D(i, i);
            if (out.diag[i] != 0) ++out.rank;
        }
        return out;
    }

  private:
    int m, n;
    std::vector<mpz_class> D, U, Uinv, V, Vinv;

    static std::vector<mpz_class> eye(int k) {
        std::vector<mpz_class> a((size_t)k * k);
        for (int i = 0; i < k; ++i) a[(size_t)i * k + i] = 1;
        return a;
    }
    static Mat narrow(const std::vector<mpz_class>& M, int r, int c, const char* what) {
        Mat out(r, c);
        for (size_t k = 0; k < M.size(); ++k) {
            if (!M[k].fits_slong_p()) fail(ErrCode::Overflow, what);
            out.a[k] = (i64)M[k].get_si();
        }
        return out;
    }
    mpz_class& d(int r, int c) { return D[(size_t)r * n + c]; }
    const mpz_class& d(int r, int c) const { return D[(size_t)r * n + c]; }
    mpz_class& u(int r, int c) { return U[(size_t)r * m + c]; }
    mpz_class& ui(int r, int c) { return Uinv[(size_t)r * m + c]; }
    mpz_class& v(int r, int c) { return V[(size_t)r * n + c]; }
    mpz_class& vi(int r, int c) { return Vinv[(size_t)r * n + c]; }

    /* quotient with remainder in (-|b|/2, |b|/2] */
    static mpz_class balanced_q(const mpz_class& a, const mpz_class& b) {
        mpz_class q = a / b;
        mpz_class r = a - q * b;
        if (2 * abs(r) > abs(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
        return q;
    }

    void row_addmul(int dst, int src, const mpz_class& f) {
        for (int c = 0; c < n; ++c) d(dst, c) += f * d(src, c);
        for (int c = 0; c < m; ++c) u(dst, c) += f * u(src, c);
        for (int r = 0; r < m; ++r) ui(r, src) -= f * ui(r, dst);
    }
    void col_addmul(int dst, int src, const mpz_class& f) {
        for (int r = 0; r < m; ++r) d(r, dst) += f * d(r, src);
        for (int r = 0; r < n; ++r) v(r, dst) += f * v(r, src);
        for (int c = 0; c < n; ++c) vi(src, c) -= f * vi(dst, c);
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < n; ++c) std::swap(d(a, c), d(b, c));
        for (int c = 0; c < m; ++c) std::swap(u(a, c), u(b, c));
        for (int r = 0; r < m; ++r) std::swap(ui(r, a), ui(r, b));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m; ++r) std::swap(d(r, a), d(r, b));
        for (int r = 0; r < n; ++r) std::swap(v(r, a), v(r, b));
        for (int c = 0; c < n; ++c) std::swap(vi(a, c), vi(b, c));
    }
    void negate_row(int i) {
        for (int c = 0; c < n; ++c) d(i, c) = -d(i, c);
        for (int c = 0; c < m; ++c) u(i, c) = -u(i, c);
        for (int r = 0; r < m; ++r) ui(r, i) = -ui(r, i);
    }

    bool pivot_to(int t) {
        int bi = -1, bj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (d(i, j) == 0) continue;
                if (bi < 0 || mpz_cmpabs(d(i, j).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void diagonalize(int t0) {
        const int mn = std::min(m, n);
        for (int t = t0; t < mn; ++t) {
            if (!pivot_to(t)) break;
            while (true) {
                bool again = false;
                for (int i = t + 1; i < m && !again; ++i)
                    if (d(i, t) % d(t, t) != 0) {
                        row_addmul(i, t, -balanced_q(d(i, t), d(t, t)));
                        swap_rows(i, t); /* the remainder is smaller: promote it */
                        again = true;
                    }
                if (again) continue;
                for (int j = t + 1; j < n && !again; ++j)
                    if (d(t, j) % d(t, t) != 0) {
                        col_addmul(j, t, -balanced_q(d(t, j), d(t, t)));
                        swap_cols(j, t);
                        again = true;
                    }
                if (again) continue;
                for (int j = t + 1; j < n; ++j)
                    if (d(t, j) != 0) col_addmul(j, t, -mpz_class(d(t, j) / d(t, t)));
                /* column t is now the only nonzero of row t: no fill-in below */
                for (int i = t + 1; i < m; ++i)
                    if (d(i, t) != 0) row_addmul(i, t, -mpz_class(d(i, t) / d(t, t)));
                break;
            }
        }
    }
};

}  // namespace

Smith smith_normal_form(const Mat& A) {
    ZWorker w(A);
    w.run();
    return w.take();
}

LocalSmith smith_local(const Mat& A, i64 p, int e) {
    LocalWorker w(A, p, e);
    w.run();
    return w.take();
}

}  // namespace phigamma
