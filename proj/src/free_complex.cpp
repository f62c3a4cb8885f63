#include "phigamma/free_complex.hpp"

#include <algorithm>
#include <numeric>

#include "phigamma/complex.hpp"

namespace phigamma {

std::string subset_to_string(const std::vector<i64>& S) {
    std::string s = "{";
    for (size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
    return s + "}";
}

/* T\S when S is contained in T with |T| = |S| + 1; empty result otherwise */
static std::vector<i64> single_extension(const std::vector<i64>& S, const std::vector<i64>& T) {
    std::vector<i64> diff;
    size_t si = 0;
    for (i64 t : T) {
        if (si < S.size() && S[si] == t)
            ++si;
        else
            diff.push_back(t);
    }
    if (si != S.size() || diff.size() != 1) return {};
    return diff;
}

static int crossing_count(const std::vector<i64>& S, i64 j) {
    int a = 0;
    for (i64 y : S)
        if (y <= j) ++a;
    return a;
}

FreeRingComplex build_c_lambda(const GroupLevelParams& gp) {
    FreeRingComplex C;
    C.gp = gp;
    std::vector<i64> universe(gp.n + 1);
    std::iota(universe.begin(), universe.end(), 0);
    for (int i = 0; i <= gp.n + 1; ++i) C.bases.push_back(subsets_of_size(universe, i));

    /* tau_S for every subset of {1..n}, keyed by bitmask */
    std::vector<Ring> taus(1 << gp.n);
    for (i64 mask = 0; mask < (1 << gp.n); ++mask) {
        std::vector<i64> S;
        for (i64 i = 1; i <= gp.n; ++i)
            if (mask & (1 << (i - 1))) S.push_back(i);
        taus[mask] = tau(gp, S);
    }
    std::vector<Ring> omegas(gp.n + 1);
    for (i64 i = 1; i <= gp.n; ++i) omegas[i] = omega(gp, i);

    for (int i = 0; i <= gp.n; ++i) {
        const auto& rows = C.bases[i];
        const auto& cols = C.bases[i + 1];
        std::vector<Ring> mat(rows.size() * cols.size(), ring_zero(gp));
        for (size_t si = 0; si < rows.size(); ++si) {
            const auto& S = rows[si];
            for (size_t ti = 0; ti < cols.size(); ++ti) {
                std::vector<i64> ext = single_extension(S, cols[ti]);
                if (ext.empty()) continue;
                i64 j = ext[0];
                if (j == 0) {
                    i64 mask = 0;
                    for (i64 y : S) mask |= 1LL << (y - 1);
                    mat[si * cols.size() + ti] = taus[mask];
                } else {
                    Ring w = omegas[j];
                    if (crossing_count(S, j) % 2) w = ring_neg(gp, w);
                    mat[si * cols.size() + ti] = std::move(w);
                }
            }
        }
        C.d.push_back(std::move(mat));
    }
    return C;
}

CheckReport audit_d_squared(const FreeRingComplex& C) {
    CheckReport rep;
    const GroupLevelParams& gp = C.gp;
    if (C.d.size() < 2) {
        rep.add("d_squared_vacuous", true);
        return rep;
    }
    for (size_t i = 0; i + 1 < C.d.size(); ++i) {
        const auto& rows = C.bases[i];
        const auto& mids = C.bases[i + 1];
        const auto& cols = C.bases[i + 2];
        bool ok = true;
        std::string witness;
        for (size_t si = 0; si < rows.size() && ok; ++si)
            for (size_t ci = 0; ci < cols.size() && ok; ++ci) {
                Ring acc = ring_zero(gp);
                for (size_t ti = 0; ti < mids.size(); ++ti) {
                    const Ring& first = C.d[i + 1][ti * cols.size() + ci];
                    const Ring& second = C.d[i][si * mids.size() + ti];
                    if (ring_is_zero(first) || ring_is_zero(second)) continue;
                    acc = ring_add(gp, acc, ring_mul(gp, first, second));
                }
                if (!ring_is_zero(acc)) {
                    ok = false;
                    witness = "composite (" + std::to_string(i) + ", " +
                              subset_to_string(rows[si]) + ", " + subset_to_string(cols[ci]) +
                              ") is nonzero";
                }
            }
        rep.add("d_squared_" + std::to_string(i), ok, witness);
    }
    return rep;
}

}  // namespace phigamma
