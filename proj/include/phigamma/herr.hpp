#pragma once

#include <optional>

#include "phigamma/complex.hpp"
#include "phigamma/free_complex.hpp"
#include "phigamma/module_spec.hpp"

namespace phigamma {

/*
 * Cochain complex of the truncated-group action on M: terms M^X(i) for
 * i = 0..n+1, differential block (T,S) the left action of the free-complex
 * entry (S,T).
 */
CochainComplex build_c_gamma(const ModuleSpec& spec);

/*
 * Same complex assembled the other way around: the Koszul cochain complex on
 * the commuting operators omega_1..omega_n, then the mapping fiber of the
 * degreewise endomorphism theta whose S-component is the action of
 * (prod_{i in S} v_i) gamma, i.e. tau_S + 1.  theta is asserted to be a chain
 * map; the subset orderings are chosen so the result is equal to
 * build_c_gamma as matrices, not merely quasi-isomorphic.
 */
CochainComplex build_c_gamma_via_fiber(const ModuleSpec& spec);

/*
 * Mapping fiber of rho = phi - 1 acting degreewise on build_c_gamma; terms
 * M^C(n+2, i) in degrees 0..n+2.  Requires phi.
 */
CochainComplex build_c_phi_gamma(const ModuleSpec& spec);

/*
 * Closed-form cohomology for modules on which every beta_i acts as the
 * identity: the complex splits into two-term pieces, so
 *   H^i = (+)_{|S|=i} ker(c_S G - 1)  (+)  (+)_{|S|=i-1} coker(c_S G - 1)
 * over subsets S of {1..n}, with c_S the action scalar of prod_{i in S} v_i,
 * i.e. (l^-1 mod p^N)^|S|.  Kernel and cokernel shapes are found by element
 * enumeration, independent of the lattice machinery.
 */
std::vector<FinAbGroup> closed_form_beta_trivial(const ModuleSpec& spec);

/*
 * Compares the generic builders against the hand-written n = 0 and n = 1
 * complexes
 *   d0(x) = (rho x, tau x, omega_1 x)
 *   d1(x,y,z) = (rho y - tau x, rho z - omega_1 x, tau_{1} z - omega_1 y)
 *   d2(x,y,z) = rho z - tau_{1} y + omega_1 x
 * (and their n = 0 truncations), demanding exact matrix equality on a small
 * set of builtin modules.  Any mismatch pinpoints a sign or ordering drift.
 */
CheckReport compare_fixtures(const GroupLevelParams& gp);

struct CohomologyReport {
    GroupLevelParams gp;
    std::string module_name;
    CheckReport checks;
    std::vector<FinAbGroup> cohomology;                     // degrees 0..n+1
    std::optional<std::vector<FinAbGroup>> phi_cohomology;  // degrees 0..n+2
    i64 euler_characteristic{};
    bool constructions_agree{};
    std::optional<bool> etale;  // present iff the module carries phi
    std::string oracle;         // "agree" | "mismatch" | "not_applicable"
};

/*
 * Full pipeline on one module: both constructions of the gamma complex,
 * degreewise comparison, euler characteristic, closed-form oracle when all
 * beta_i act trivially, and (with_phi) the phi complex together with the
 * length identity len H^i(fiber) = len ker(rho|H^i) + len coker(rho|H^(i-1)).
 */
CohomologyReport cohomology_report(const ModuleSpec& spec, bool with_phi);

}  // namespace phigamma
