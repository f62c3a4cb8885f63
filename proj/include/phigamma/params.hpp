#pragma once

#include <vector>

#include "phigamma/intutil.hpp"

namespace phigamma {

/*
 * Parameters of one finite truncation level of the group
 *   G = <gamma> x| <beta_1,...,beta_n>  (semidirect, gamma beta_i gamma^-1 = beta_i^l)
 * truncated so gamma and each beta_i have order q = p^m, with coefficients Z/p^N.
 */
struct GroupLevelParams {
    i64 p{};      // prime
    i64 n{};      // number of beta generators, >= 0
    i64 m{};      // group truncation level, >= 1
    i64 N{};      // coefficient level, >= 1
    i64 l{};      // conjugation unit, positive integer, l = 1 mod p (mod 4 when p = 2)
    i64 q{};      // p^m
    i64 Q{};      // p^N
    i64 lambda{}; // l mod q
    i64 order{};  // q^(n+1), size of the truncated group
    std::vector<i64> lam_pow;      // lambda^j mod q, j in [0,q)
    std::vector<i64> lam_inv_pow;  // lambda^-j mod q, j in [0,q)

    bool same_shape(const GroupLevelParams& o) const {
        return p == o.p && n == o.n && l == o.l;
    }
    bool operator==(const GroupLevelParams& o) const {
        return same_shape(o) && m == o.m && N == o.N;
    }
};

/* validates and caches; throws NonPrime / BadUnit / CongruenceViolation / BadLevel */
GroupLevelParams validate_params(i64 p, i64 n, i64 m, i64 N, i64 l);

}  // namespace phigamma
