#pragma once

#include <vector>

#include "phigamma/checks.hpp"
#include "phigamma/group.hpp"

namespace phigamma {

/*
 * Elements of the truncated group ring (Z/p^N)[G], dense coefficient arrays
 * indexed by group element, entries normalized to [0, Q).
 */
using Ring = std::vector<i64>;

Ring ring_zero(const GroupLevelParams& gp);
Ring ring_one(const GroupLevelParams& gp);
Ring ring_basis(const GroupLevelParams& gp, Elem g);
Ring ring_add(const GroupLevelParams& gp, const Ring& a, const Ring& b);
Ring ring_sub(const GroupLevelParams& gp, const Ring& a, const Ring& b);
Ring ring_neg(const GroupLevelParams& gp, const Ring& a);
Ring ring_scale(const GroupLevelParams& gp, i64 k, const Ring& a);
Ring ring_mul(const GroupLevelParams& gp, const Ring& a, const Ring& b);
Ring ring_mul_reference(const GroupLevelParams& gp, const Ring& a, const Ring& b);
bool ring_eq(const Ring& a, const Ring& b);
bool ring_is_zero(const Ring& a);

/* sum of coefficients mod Q; a ring homomorphism onto Z/Q */
i64 augmentation(const GroupLevelParams& gp, const Ring& a);

Ring omega(const GroupLevelParams& gp, i64 i);   // beta_i - 1
Ring big_w(const GroupLevelParams& gp, i64 i);   // beta_i^lambda - 1

/*
 * u_i = sum_{k=1..l} C(l,k) omega_i^(k-1), the exact binomial expansion of
 * (beta_i^l - 1)/(beta_i - 1); a unit with u_i * omega_i = W_i and
 * augmentation l mod Q.
 */
Ring u_unit(const GroupLevelParams& gp, i64 i);

/* two-sided inverse via linear solve against the right-regular representation */
Ring invert_unit(const GroupLevelParams& gp, const Ring& r);

Ring v_unit(const GroupLevelParams& gp, i64 i);  // u_i^-1

/*
 * tau_S = (prod_{i in S} v_i) * gamma - 1 for S a sorted subset of {1..n};
 * tau_{} = gamma - 1.
 */
Ring tau(const GroupLevelParams& gp, const std::vector<i64>& S);

/*
 * Coefficient/level reduction onto coarser (m,N).  A ring homomorphism carrying
 * omega_i, W_i, u_i, v_i, tau_S to the same-named elements of the target.
 * Throws IncompatibleLevels unless p, n, l agree, m_to <= m_from, N_to <= N_from.
 */
Ring project_level(const GroupLevelParams& from, const GroupLevelParams& to, const Ring& r);

/*
 * Machine-checked relation suite: commutators of omega/W, gamma omega_i = W_i gamma,
 * tau_S omega_i = omega_i tau_{S minus i}, the u/v unit facts, the group-level
 * conjugation law, and omega nilpotency.
 */
CheckReport check_relations(const GroupLevelParams& gp);

}  // namespace phigamma
