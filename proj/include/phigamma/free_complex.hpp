#pragma once

#include "phigamma/checks.hpp"
#include "phigamma/ring.hpp"

namespace phigamma {

/*
 * Free complex over the truncated group ring R:
 *   R^X(n+1) -> ... -> R^X(1) -> R^X(0),
 * X(i) the size-i subsets of {0..n} in lex order, direction 0 reserved for
 * gamma.  d[i] is stored as an X(i) x X(i+1) matrix of ring elements acting by
 * right multiplication; entry (S,T) is tau_S when T\S = {0}, sign * omega_j
 * when T\S = {j != 0}, zero unless S is contained in T.
 */
struct FreeRingComplex {
    GroupLevelParams gp;
    std::vector<std::vector<std::vector<i64>>> bases;  // bases[i] = X(i)
    std::vector<std::vector<Ring>> d;                  // d[i][si * |X(i+1)| + ti]
};

FreeRingComplex build_c_lambda(const GroupLevelParams& gp);

/* checks every length-two composite is exactly zero; entries named by (i, S, T) */
CheckReport audit_d_squared(const FreeRingComplex& C);

std::string subset_to_string(const std::vector<i64>& S);

}  // namespace phigamma
