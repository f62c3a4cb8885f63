#pragma once

#include "phigamma/matrix.hpp"

namespace phigamma {

/*
 * Finite abelian p-group presented as a direct sum of cyclic factors
 * Z/p^e_1 + ... + Z/p^e_d.  Canonical presentations keep e_1 >= ... >= e_d;
 * direct sums built degreewise inside complexes may be unsorted, and the
 * cohomology routines emit canonical groups.
 */
struct FinAbGroup {
    i64 p{};
    std::vector<i64> exps;  // each >= 1

    int rank() const { return (int)exps.size(); }
    i64 length() const {
        i64 s = 0;
        for (i64 e : exps) s += e;
        return s;
    }
    bool canonical() const {
        for (size_t i = 1; i < exps.size(); ++i)
            if (exps[i - 1] < exps[i]) return false;
        return true;
    }
    std::vector<i64> orders() const {  // p^e_j per factor
        std::vector<i64> o(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) o[i] = ipow_checked(p, exps[i], "group order");
        return o;
    }
    bool operator==(const FinAbGroup& o) const { return p == o.p && exps == o.exps; }
};

FinAbGroup group_direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup group_power(const FinAbGroup& a, int copies);
FinAbGroup group_canonical(const FinAbGroup& a);  // exponents sorted descending
std::string group_to_string(const FinAbGroup& a);

/*
 * Morphism of finite abelian p-groups, an integer matrix with rows indexed by
 * target factors and columns by source factors.  Well-definedness demands
 * p^max(0, e_tgt - e_src) divides each entry; entries are kept normalized in
 * [0, p^e_tgt_row).
 */
struct AbMorphism {
    FinAbGroup src, tgt;
    Mat a;  // tgt.rank() x src.rank()
};

AbMorphism make_morphism(const FinAbGroup& src, const FinAbGroup& tgt, Mat a);  // normalizes + validates
void validate_morphism(const AbMorphism& f);  // throws RankMismatch / NotAMorphism
Mat normalize_entries(const FinAbGroup& tgt, Mat a);
AbMorphism morphism_identity(const FinAbGroup& g);
AbMorphism morphism_zero(const FinAbGroup& src, const FinAbGroup& tgt);
AbMorphism morphism_compose(const AbMorphism& g, const AbMorphism& f);  // g after f
AbMorphism morphism_add(const AbMorphism& f, const AbMorphism& g);
AbMorphism morphism_sub(const AbMorphism& f, const AbMorphism& g);
AbMorphism morphism_pow(const AbMorphism& f, i64 exp);  // endomorphism power
bool morphism_is_zero(const AbMorphism& f);
bool morphism_eq(const AbMorphism& f, const AbMorphism& g);
bool morphism_invertible(const AbMorphism& f);  // endomorphism, det mod p != 0

}  // namespace phigamma
