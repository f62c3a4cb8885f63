#pragma once

#include "phigamma/matrix.hpp"

namespace phigamma {

/*
 * Smith normal form U A V = D over the integers: U, V unimodular, D diagonal
 * with nonnegative entries, each dividing the next.  Inverse transforms are
 * tracked alongside so callers can change basis in both directions without
 * inverting unimodular matrices separately.  Arbitrary-precision arithmetic
 * is used internally; if a final certificate entry does not fit in 64 bits
 * the routine reports Overflow instead of returning a wrapped value.
 */
struct Smith {
    Mat U, Uinv, V, Vinv, D;
    std::vector<i64> diag;  // length min(rows, cols)
    int rank{};
};

Smith smith_normal_form(const Mat& A);

/*
 * Diagonalisation over Z/p^e (p prime, Q = p^e).  Computes U A V = D mod Q
 * with U, V invertible mod Q (U Uinv = I and V Vinv = I mod Q) and D diagonal;
 * every diagonal entry is a power of p with nondecreasing exponents along the
 * diagonal.  All stored entries are canonical representatives in [0, Q), so
 * no intermediate or final value can grow beyond the modulus.
 *
 * diag records the orders of the cyclic factors of
 * Z^rows / (column span of A + Q Z^rows), so it always has length `rows`;
 * a zero residue on the diagonal of D (or a missing column) is recorded as Q.
 * Every torsion presentation in this library carries its coordinate orders as
 * explicit relation columns, making its column span contain Q Z^rows; for
 * such input diag lists exactly the invariant factors of the presented
 * quotient.
 */
struct LocalSmith {
    Mat U, Uinv, V, Vinv, D;
    std::vector<i64> diag;  // length rows; entries are p-powers dividing Q
    i64 p{}, modulus{};
    int e{};
};

LocalSmith smith_local(const Mat& A, i64 p, int e);

}  // namespace phigamma
