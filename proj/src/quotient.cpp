#include "phigamma/quotient.hpp"

#include <algorithm>

#include "phigamma/snf.hpp"

namespace phigamma {

QuotientModule present_quotient(const FinAbGroup& ambient, const Mat& rel,
                                const std::vector<Mat>& endos) {
    const int d = ambient.rank();
    const i64 p = ambient.p;
    if (rel.rows != d) fail(ErrCode::RankMismatch, "relation generators have wrong height");
    for (const Mat& T : endos)
        if (T.rows != d || T.cols != d) fail(ErrCode::RankMismatch, "endomorphism shape");

    int E = 1;
    for (i64 e : ambient.exps) E = std::max(E, (int)e);
    Mat W = mat_hstack(rel, mat_diag(ambient.orders()));
    LocalSmith s = smith_local(W, p, E);

    struct Factor {
        i64 order, exp;
        int idx;
    };
    std::vector<Factor> kept;
    for (int j = 0; j < d; ++j) {
        i64 f = s.diag[j];
        if (f == 1) continue;
        i64 e = 0, v = f;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v != 1) fail(ErrCode::Internal, "quotient factor is not a p-power");
        kept.push_back({f, e, j});
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const Factor& a, const Factor& b) { return a.exp > b.exp; });

    QuotientModule out;
    out.group.p = p;
    for (const Factor& f : kept) out.group.exps.push_back(f.exp);

    const int t = (int)kept.size();
    for (const Mat& T : endos) {
        Mat conj = mat_mul(mat_mul(s.U, T), s.Uinv);
        Mat small(t, t);
        for (int r = 0; r < t; ++r)
            for (int c = 0; c < t; ++c)
                small(r, c) = umod(conj(kept[r].idx, kept[c].idx), kept[r].order);
        /* induced map must be well defined on the quotient */
        AbMorphism m = make_morphism(out.group, out.group, std::move(small));
        out.endos.push_back(m.a);
    }
    return out;
}

}  // namespace phigamma
