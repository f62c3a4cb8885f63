#include "phigamma/abgroup.hpp"

#include <algorithm>
#include <string>

namespace phigamma {

FinAbGroup group_direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    if (a.p != b.p && a.rank() && b.rank()) fail(ErrCode::RankMismatch, "direct sum over mixed p");
    FinAbGroup g;
    g.p = a.rank() ? a.p : b.p;
    g.exps = a.exps;
    g.exps.insert(g.exps.end(), b.exps.begin(), b.exps.end());
    return g;
}

FinAbGroup group_power(const FinAbGroup& a, int copies) {
    FinAbGroup g;
    g.p = a.p;
    for (int i = 0; i < copies; ++i) g.exps.insert(g.exps.end(), a.exps.begin(), a.exps.end());
    return g;
}

FinAbGroup group_canonical(const FinAbGroup& a) {
    FinAbGroup g = a;
    std::sort(g.exps.begin(), g.exps.end(), std::greater<i64>());
    return g;
}

std::string group_to_string(const FinAbGroup& a) {
    if (a.exps.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < a.exps.size(); ++i) {
        if (i) s += " + ";
        s += "Z/" + std::to_string(ipow_checked(a.p, a.exps[i], "group_to_string"));
    }
    return s;
}

Mat normalize_entries(const FinAbGroup& tgt, Mat a) {
    if (a.rows != tgt.rank())
        fail(ErrCode::RankMismatch, "normalize: " + std::to_string(a.rows) + " rows for rank " +
                                        std::to_string(tgt.rank()));
    std::vector<i64> mods = tgt.orders();
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) a(r, c) = umod(a(r, c), mods[r]);
    return a;
}

void validate_morphism(const AbMorphism& f) {
    if (f.a.rows != f.tgt.rank() || f.a.cols != f.src.rank())
        fail(ErrCode::RankMismatch, "morphism matrix is " + std::to_string(f.a.rows) + "x" +
                                        std::to_string(f.a.cols) + ", expected " +
                                        std::to_string(f.tgt.rank()) + "x" +
                                        std::to_string(f.src.rank()));
    for (int r = 0; r < f.a.rows; ++r)
        for (int c = 0; c < f.a.cols; ++c) {
            i64 gap = f.tgt.exps[r] - f.src.exps[c];
            if (gap <= 0) continue;
            i64 d = ipow_checked(f.tgt.p, gap, "validate_morphism");
            if (umod(f.a(r, c), d) != 0)
                fail(ErrCode::NotAMorphism,
                     "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                         std::to_string(f.a(r, c)) + " not divisible by p^" + std::to_string(gap));
        }
}

AbMorphism make_morphism(const FinAbGroup& src, const FinAbGroup& tgt, Mat a) {
    if (a.rows != tgt.rank() || a.cols != src.rank())
        fail(ErrCode::RankMismatch, "morphism matrix is " + std::to_string(a.rows) + "x" +
                                        std::to_string(a.cols) + ", expected " +
                                        std::to_string(tgt.rank()) + "x" +
                                        std::to_string(src.rank()));
    AbMorphism f;
    f.src = src;
    f.tgt = tgt;
    f.a = normalize_entries(tgt, std::move(a));
    validate_morphism(f);
    return f;
}

AbMorphism morphism_identity(const FinAbGroup& g) {
    return make_morphism(g, g, mat_identity(g.rank()));
}

AbMorphism morphism_zero(const FinAbGroup& src, const FinAbGroup& tgt) {
    return make_morphism(src, tgt, Mat(tgt.rank(), src.rank()));
}

AbMorphism morphism_compose(const AbMorphism& g, const AbMorphism& f) {
    if (!(g.src == f.tgt)) fail(ErrCode::RankMismatch, "compose: middle groups differ");
    return make_morphism(f.src, g.tgt, mat_mul(g.a, f.a));
}

AbMorphism morphism_add(const AbMorphism& f, const AbMorphism& g) {
    if (!(f.src == g.src) || !(f.tgt == g.tgt)) fail(ErrCode::RankMismatch, "add: shape");
    return make_morphism(f.src, f.tgt, mat_add(f.a, g.a));
}

AbMorphism morphism_sub(const AbMorphism& f, const AbMorphism& g) {
    if (!(f.src == g.src) || !(f.tgt == g.tgt)) fail(ErrCode::RankMismatch, "sub: shape");
    return make_morphism(f.src, f.tgt, mat_sub(f.a, g.a));
}

AbMorphism morphism_pow(const AbMorphism& f, i64 exp) {
    if (!(f.src == f.tgt)) fail(ErrCode::RankMismatch, "pow: not an endomorphism");
    AbMorphism acc = morphism_identity(f.src);
    AbMorphism base = f;
    while (exp > 0) {
        if (exp & 1) acc = morphism_compose(acc, base);
        exp >>= 1;
        if (exp) base = morphism_compose(base, base);
    }
    return acc;
}

bool morphism_is_zero(const AbMorphism& f) { return mat_is_zero(f.a); }

bool morphism_eq(const AbMorphism& f, const AbMorphism& g) {
    return f.src == g.src && f.tgt == g.tgt && f.a == g.a;
}

/* invertibility of an endomorphism reduces mod p (Nakayama) */
bool morphism_invertible(const AbMorphism& f) {
    if (!(f.src == f.tgt)) fail(ErrCode::RankMismatch, "invertible: not an endomorphism");
    const i64 p = f.src.p;
    int d = f.a.rows;
    Mat M = f.a;
    for (i64& v : M.a) v = umod(v, p);
    /* Gaussian elimination over F_p */
    int rank = 0;
    for (int c = 0; c < d && rank < d; ++c) {
        int piv = -1;
        for (int r = rank; r < d; ++r)
            if (M(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < d; ++j) std::swap(M(piv, j), M(rank, j));
        i64 inv = invmod(M(rank, c), p);
        for (int j = 0; j < d; ++j) M(rank, j) = (i128)M(rank, j) * inv % p;
        for (int r = 0; r < d; ++r) {
            if (r == rank || M(r, c) == 0) continue;
            i64 fmul = M(r, c);
            for (int j = 0; j < d; ++j) M(r, j) = umod(M(r, j) - (i128)fmul * M(rank, j) % p, p);
        }
        ++rank;
    }
    return rank == d;
}

}  // namespace phigamma
