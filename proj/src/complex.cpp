#include "phigamma/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace phigamma {

CochainComplex make_complex(std::vector<FinAbGroup> terms, std::vector<AbMorphism> diffs) {
    if (terms.empty()) fail(ErrCode::RankMismatch, "complex needs at least one term");
    if (diffs.size() + 1 != terms.size())
        fail(ErrCode::RankMismatch, "expected one differential per adjacent pair");
    for (size_t i = 0; i < diffs.size(); ++i) {
        if (!(diffs[i].src == terms[i]) || !(diffs[i].tgt == terms[i + 1]))
            fail(ErrCode::RankMismatch, "differential " + std::to_string(i) + " endpoints");
        validate_morphism(diffs[i]);
    }
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
        AbMorphism comp = morphism_compose(diffs[i + 1], diffs[i]);
        if (!morphism_is_zero(comp))
            fail(ErrCode::NotAComplex, "d o d != 0 at degree " + std::to_string(i));
    }
    CochainComplex C;
    C.terms = std::move(terms);
    C.d = std::move(diffs);
    return C;
}

ChainMap make_chain_map(const CochainComplex& C, std::vector<AbMorphism> maps) {
    if (maps.size() != C.terms.size())
        fail(ErrCode::RankMismatch, "chain map needs one component per degree");
    for (size_t i = 0; i < maps.size(); ++i) {
        if (!(maps[i].src == C.terms[i]) || !(maps[i].tgt == C.terms[i]))
            fail(ErrCode::RankMismatch, "chain map component " + std::to_string(i));
        validate_morphism(maps[i]);
    }
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
        AbMorphism lhs = morphism_compose(maps[i + 1], C.d[i]);
        AbMorphism rhs = morphism_compose(C.d[i], maps[i]);
        if (!morphism_eq(lhs, rhs))
            fail(ErrCode::NotAChainMap, "fails to commute with d at degree " + std::to_string(i));
    }
    ChainMap f;
    f.maps = std::move(maps);
    return f;
}

std::vector<i64> CohomPresentation::coords(const std::vector<i64>& x) const {
    std::vector<i64> t = mat_apply(Uz, x);
    for (size_t j = 0; j < t.size(); ++j) {
        i64 r = umod(t[j], modulus);
        if (r % dz[j] != 0) fail(ErrCode::Internal, "vector is not in the cocycle lattice");
        t[j] = r / dz[j];
    }
    std::vector<i64> eta = mat_apply(Uw, t);
    std::vector<i64> out(keep.size());
    for (size_t k = 0; k < keep.size(); ++k) out[k] = umod(eta[keep[k]], orders[k]);
    return out;
}

static CohomPresentation present_quotient_lattice(i64 p, int E, const Mat& zgens,
                                                  const Mat& bgens) {
    const int d = zgens.rows;
    const i64 Q = ipow_checked(p, E, "presentation modulus");
    CohomPresentation pres;
    pres.H.p = p;
    pres.modulus = Q;
    if (d == 0) {
        pres.Uz = Mat(0, 0);
        pres.Uw = Mat(0, 0);
        pres.lift = Mat(0, 0);
        return pres;
    }
    LocalSmith sz = smith_local(zgens, p, E);
    /* coordinates of the relation generators in the cocycle basis */
    Mat T = mat_mul(sz.U, bgens);
    const int bw = bgens.cols;
    Mat W(d, bw + d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < bw; ++c) {
            i64 t = umod(T(r, c), Q);
            if (t % sz.diag[r] != 0)
                fail(ErrCode::Internal, "coboundary lattice escapes the cocycle lattice");
            W(r, c) = t / sz.diag[r];
        }
        /* the r-th cocycle coordinate only carries Q / dz[r] distinct values */
        W(r, bw + r) = Q / sz.diag[r];
    }
    LocalSmith sw = smith_local(W, p, E);

    struct Factor {
        i64 order;
        i64 exp;
        int idx;
    };
    std::vector<Factor> kept;
    for (int j = 0; j < d; ++j) {
        i64 f = sw.diag[j];
        if (f == 1) continue;
        i64 e = 0, v = f;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v != 1) fail(ErrCode::Internal, "invariant factor is not a p-power");
        kept.push_back({f, e, j});
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const Factor& a, const Factor& b) { return a.exp > b.exp; });

    pres.Uz = sz.U;
    pres.dz.assign(sz.diag.begin(), sz.diag.begin() + d);
    pres.Uw = sw.U;
    for (const Factor& f : kept) {
        pres.H.exps.push_back(f.exp);
        pres.orders.push_back(f.order);
        pres.keep.push_back(f.idx);
    }
    /* lift = Uz^-1 diag(dz) Uw^-1 restricted to kept columns, mod Q */
    Mat scaled = sz.Uinv;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) scaled(r, c) = (i64)((i128)scaled(r, c) * pres.dz[c] % Q);
    Mat full = mat_mul(scaled, sw.Uinv);
    pres.lift = Mat(d, (int)kept.size());
    for (int r = 0; r < d; ++r)
        for (size_t k = 0; k < kept.size(); ++k)
            pres.lift(r, (int)k) = umod(full(r, kept[k].idx), Q);
    return pres;
}

std::vector<CohomPresentation> cohomology_presentations(const CochainComplex& C) {
    const i64 p = C.terms[0].p;
    int E = 1;
    for (const auto& T : C.terms)
        for (i64 e : T.exps) E = std::max(E, (int)e);
    const i64 Q = ipow_checked(p, E, "presentation modulus");
    const int top = C.top();
    std::vector<CohomPresentation> out;
    for (int i = 0; i <= top; ++i) {
        const int d = C.terms[i].rank();
        Mat zgens;
        if (i == top || C.terms[i + 1].rank() == 0) {
            zgens = mat_identity(d);
        } else {
            /* x with A x in L: x-block of the kernel of [A | diag(orders)] over Z/Q,
               generated by (Q / D(c,c)) * V_c across all columns c */
            Mat M = mat_hstack(C.d[i].a, mat_diag(C.terms[i + 1].orders()));
            LocalSmith s = smith_local(M, p, E);
            const int mn = std::min(M.rows, M.cols);
            std::vector<int> cols;
            std::vector<i64> scale;
            for (int c = 0; c < M.cols; ++c) {
                i64 dv = c < mn ? s.D(c, c) : 0;
                i64 f = dv == 0 ? Q : dv;
                if (f == 1) continue; /* scale Q would give the zero generator */
                cols.push_back(c);
                scale.push_back(Q / f);
            }
            zgens = Mat(d, (int)cols.size());
            for (size_t c = 0; c < cols.size(); ++c)
                for (int r = 0; r < d; ++r)
                    zgens(r, (int)c) = (i64)((i128)s.V(r, cols[c]) * scale[c] % Q);
            /* harmless if redundant, guarantees full coverage: the term lattice itself */
            zgens = mat_hstack(zgens, mat_diag(C.terms[i].orders()));
        }
        Mat bgens = mat_diag(C.terms[i].orders());
        if (i > 0 && C.terms[i - 1].rank() > 0) bgens = mat_hstack(C.d[i - 1].a, bgens);
        out.push_back(present_quotient_lattice(p, E, zgens, bgens));
    }
    return out;
}

std::vector<FinAbGroup> cohomology(const CochainComplex& C) {
    std::vector<FinAbGroup> H;
    for (auto& pres : cohomology_presentations(C)) H.push_back(pres.H);
    return H;
}

Mat induced_endo(const CohomPresentation& pres, const Mat& R) {
    const int t = (int)pres.keep.size();
    Mat out(t, t);
    for (int k = 0; k < t; ++k) {
        std::vector<i64> x(pres.lift.rows);
        for (int r = 0; r < pres.lift.rows; ++r) x[r] = pres.lift(r, k);
        std::vector<i64> c = pres.coords(mat_apply(R, x));
        for (int r = 0; r < t; ++r) out(r, k) = c[r];
    }
    return out;
}

/* assembles a 2x2 block matrix; empty blocks are treated as zero */
static Mat block2x2(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br, int r0, int r1,
                    int c0, int c1) {
    Mat out(r0 + r1, c0 + c1);
    auto put = [&](const Mat& b, int ro, int co) {
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) out(ro + r, co + c) = b(r, c);
    };
    if (tl.rows) put(tl, 0, 0);
    if (tr.rows) put(tr, 0, c0);
    if (bl.rows) put(bl, r0, 0);
    if (br.rows) put(br, r0, c0);
    return out;
}

CochainComplex mapping_fiber(const CochainComplex& C, const ChainMap& f) {
    const int top = C.top();
    FinAbGroup trivial;
    trivial.p = C.terms[0].p;
    auto term_at = [&](int i) -> FinAbGroup {
        return (i < 0 || i > top) ? trivial : C.terms[i];
    };

    std::vector<FinAbGroup> terms;
    for (int i = 0; i <= top + 1; ++i) terms.push_back(group_direct_sum(term_at(i - 1), term_at(i)));

    std::vector<AbMorphism> diffs;
    for (int i = 0; i <= top; ++i) {
        FinAbGroup shifted = term_at(i - 1);  // u lives here
        FinAbGroup plain = term_at(i);        // x lives here
        FinAbGroup tshift = term_at(i);
        FinAbGroup tplain = term_at(i + 1);
        Mat dshift = (i - 1 >= 0 && i - 1 < top) ? mat_neg(C.d[i - 1].a) : Mat(tshift.rank(), shifted.rank());
        Mat fblock = f.maps[i].a;
        Mat dplain = (i < top) ? C.d[i].a : Mat(tplain.rank(), plain.rank());
        Mat zero(tplain.rank(), shifted.rank());
        Mat big = block2x2(dshift, fblock, zero, dplain, tshift.rank(), tplain.rank(),
                           shifted.rank(), plain.rank());
        diffs.push_back(make_morphism(terms[i], terms[i + 1], std::move(big)));
    }
    return make_complex(std::move(terms), std::move(diffs));
}

std::vector<std::vector<i64>> subsets_of_size(const std::vector<i64>& universe, int k) {
    std::vector<std::vector<i64>> out;
    const int n = (int)universe.size();
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<i64> s(k);
        for (int i = 0; i < k; ++i) s[i] = universe[idx[i]];
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/* number of elements of S that are <= j */
static int crossing_count(const std::vector<i64>& S, i64 j) {
    int a = 0;
    for (i64 y : S)
        if (y <= j) ++a;
    return a;
}

CochainComplex koszul_cochain(const FinAbGroup& M, const std::vector<AbMorphism>& ops) {
    const int k = (int)ops.size();
    for (int i = 0; i < k; ++i) {
        if (!(ops[i].src == M) || !(ops[i].tgt == M))
            fail(ErrCode::RankMismatch, "koszul operator endpoints");
        for (int j = i + 1; j < k; ++j) {
            AbMorphism ab = morphism_compose(ops[i], ops[j]);
            AbMorphism ba = morphism_compose(ops[j], ops[i]);
            if (!morphism_eq(ab, ba))
                fail(ErrCode::OperatorsDoNotCommute,
                     "operators " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
    }
    std::vector<i64> universe(k);
    std::iota(universe.begin(), universe.end(), 1);
    const int rk = M.rank();

    std::vector<FinAbGroup> terms;
    std::vector<std::vector<std::vector<i64>>> bases;
    for (int i = 0; i <= k; ++i) {
        bases.push_back(subsets_of_size(universe, i));
        terms.push_back(group_power(M, (int)bases[i].size()));
    }
    std::vector<AbMorphism> diffs;
    for (int i = 0; i < k; ++i) {
        const auto& src = bases[i];
        const auto& tgt = bases[i + 1];
        Mat big((int)tgt.size() * rk, (int)src.size() * rk);
        for (size_t si = 0; si < src.size(); ++si) {
            const auto& S = src[si];
            for (i64 j = 1; j <= k; ++j) {
                if (std::find(S.begin(), S.end(), j) != S.end()) continue;
                std::vector<i64> T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), j), j);
                size_t ti = std::find(tgt.begin(), tgt.end(), T) - tgt.begin();
                int sgn = crossing_count(S, j) % 2 ? -1 : 1;
                const Mat& op = ops[j - 1].a;
                for (int r = 0; r < rk; ++r)
                    for (int c = 0; c < rk; ++c)
                        big((int)ti * rk + r, (int)si * rk + c) = sgn * op(r, c);
            }
        }
        diffs.push_back(make_morphism(terms[i], terms[i + 1], std::move(big)));
    }
    return make_complex(std::move(terms), std::move(diffs));
}

i64 euler_characteristic(const std::vector<FinAbGroup>& H) {
    i64 chi = 0;
    for (size_t i = 0; i < H.size(); ++i) chi += (i % 2 ? -1 : 1) * H[i].length();
    return chi;
}

}  // namespace phigamma
