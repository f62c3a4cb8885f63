#pragma once

#include "phigamma/abgroup.hpp"
#include "phigamma/snf.hpp"

namespace phigamma {

/*
 * Bounded cochain complex of finite abelian p-groups in degrees 0..top.
 * d[i] maps terms[i] to terms[i+1]; d o d = 0 is enforced on construction.
 */
struct CochainComplex {
    std::vector<FinAbGroup> terms;
    std::vector<AbMorphism> d;  // size terms.size() - 1 (empty when single term)

    int top() const { return (int)terms.size() - 1; }
};

CochainComplex make_complex(std::vector<FinAbGroup> terms, std::vector<AbMorphism> diffs);

/* degreewise self-map commuting with the differentials */
struct ChainMap {
    std::vector<AbMorphism> maps;  // one per degree
};

ChainMap make_chain_map(const CochainComplex& C, std::vector<AbMorphism> maps);

/*
 * Cohomology H^i = Z(i)/B(i): Z(i) is the preimage of ker d^i in the term's
 * coordinate representation, B(i) is spanned by im d^(i-1) together with the
 * coordinate orders.  Every term is p-power torsion, so the whole computation
 * runs over Z/p^E with E the largest exponent appearing in the complex —
 * cocycle generators drop out of one local diagonalisation and the quotient
 * by coboundaries out of two more, with every stored entry a residue mod p^E.
 * The presentation keeps the change-of-basis data needed to push elements and
 * endomorphisms down to H-coordinates.
 */
struct CohomPresentation {
    FinAbGroup H;             // canonical (exponents descending)
    i64 modulus{};            // p^E; every matrix entry below is a residue mod this
    Mat Uz;                   // ambient -> cocycle coordinate transform (mod modulus)
    std::vector<i64> dz;      // cocycle diagonal: p-power scale of each coordinate
    Mat Uw;                   // cocycle -> quotient coordinate transform (mod modulus)
    std::vector<i64> orders;  // cyclic order of each kept factor, aligned with H.exps
    std::vector<int> keep;    // quotient coordinates with order > 1, in H order
    Mat lift;                 // ambient representative of each kept generator (d x |keep|)

    /* H-coordinates of an ambient integer vector lying in Z(i) */
    std::vector<i64> coords(const std::vector<i64>& x) const;
};

std::vector<CohomPresentation> cohomology_presentations(const CochainComplex& C);
std::vector<FinAbGroup> cohomology(const CochainComplex& C);

/* matrix of the endomorphism induced on H by an ambient endomorphism R of the term */
Mat induced_endo(const CohomPresentation& pres, const Mat& R);

/*
 * Mapping fiber of a chain self-map: Fib^i = C^(i-1) + C^i (shifted copy
 * listed first), d(u, x) = (f(x) - d u, d x).
 */
CochainComplex mapping_fiber(const CochainComplex& C, const ChainMap& f);

/*
 * Koszul-type cochain complex on pairwise-commuting endomorphisms t_1..t_k of
 * M: terms M^Y(i) over size-i subsets of {1..k} in lex order, component
 * S -> S u {j} carrying (-1)^(number of elements of S that are <= j) t_j.
 */
CochainComplex koszul_cochain(const FinAbGroup& M, const std::vector<AbMorphism>& ops);

i64 euler_characteristic(const std::vector<FinAbGroup>& H);

/* size-k subsets of a sorted universe, in lex order of their sorted element lists */
std::vector<std::vector<i64>> subsets_of_size(const std::vector<i64>& universe, int k);

}  // namespace phigamma
