#pragma once

#include <vector>

#include "phigamma/params.hpp"

namespace phigamma {

/*
 * Group elements in normal form gamma^a beta_1^c1 ... beta_n^cn with a, c_i in Z/q,
 * addressed by the lexicographic index of (a, c_1, ..., c_n).
 * Multiplication pushes beta past gamma with beta_i gamma = gamma beta_i^(lambda^-1):
 *   (a, c) * (a', c') = (a + a', c * lambda^-a' + c').
 */
using Elem = i64;

struct ElemParts {
    i64 a;
    std::vector<i64> c;  // length n
};

Elem elem_encode(const GroupLevelParams& gp, const ElemParts& parts);
ElemParts elem_decode(const GroupLevelParams& gp, Elem g);

inline Elem elem_identity(const GroupLevelParams&) { return 0; }
Elem elem_gamma(const GroupLevelParams& gp);          // gamma
Elem elem_beta(const GroupLevelParams& gp, i64 i);    // beta_i, 1 <= i <= n
Elem elem_mul(const GroupLevelParams& gp, Elem g, Elem h);
Elem elem_inv(const GroupLevelParams& gp, Elem g);

}  // namespace phigamma
