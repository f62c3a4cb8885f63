#include "phigamma/strands.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace phigamma {

namespace {

/* exponent tuples of length k summing to deg, lex order */
void monomials_rec(int k, int deg, std::vector<i64>& cur, std::vector<std::vector<i64>>& out) {
    if ((int)cur.size() == k - 1) {
        cur.push_back(deg);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur.push_back(e);
        monomials_rec(k, deg - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<i64>> monomials(int k, int deg) {
    std::vector<std::vector<i64>> out;
    if (deg < 0) return out;
    if (k == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    std::vector<i64> cur;
    monomials_rec(k, deg, cur, out);
    return out;
}

int crossing_count(const std::vector<i64>& S, i64 j) {
    int a = 0;
    for (i64 y : S)
        if (y <= j) ++a;
    return a;
}

}  // namespace

CheckReport graded_strand_audit(i64 p, i64 N, int k, int maxdeg) {
    CheckReport rep;
    std::vector<i64> universe(k);
    std::iota(universe.begin(), universe.end(), 1);

    for (int d = 0; d <= maxdeg; ++d) {
        /* homological terms K_i, basis (S, monomial of degree d - i) */
        std::vector<std::vector<std::vector<i64>>> setbases(k + 1);
        std::vector<std::vector<std::vector<i64>>> monbases(k + 1);
        std::vector<int> dims(k + 1);
        for (int i = 0; i <= k; ++i) {
            setbases[i] = subsets_of_size(universe, i);
            monbases[i] = monomials(k, d - i);
            dims[i] = (int)(setbases[i].size() * monbases[i].size());
        }
        /* boundary K_i -> K_{i-1}: (S, m) -> sum_j +-(S\j, x_j m) */
        std::vector<Mat> bnd(k + 1);
        for (int i = 1; i <= k; ++i) {
            Mat A(dims[i - 1], dims[i]);
            std::map<std::pair<std::vector<i64>, std::vector<i64>>, int> tindex;
            {
                int c = 0;
                for (const auto& S : setbases[i - 1])
                    for (const auto& mo : monbases[i - 1]) tindex[{S, mo}] = c++;
            }
            int col = 0;
            for (const auto& S : setbases[i])
                for (const auto& mo : monbases[i]) {
                    for (i64 j : S) {
                        std::vector<i64> Sm;
                        for (i64 y : S)
                            if (y != j) Sm.push_back(y);
                        std::vector<i64> m2 = mo;
                        m2[j - 1] += 1;
                        int row = tindex.at({Sm, m2});
                        A(row, col) = crossing_count(Sm, j) % 2 ? -1 : 1;
                    }
                    ++col;
                }
            bnd[i] = std::move(A);
        }
        /* reorient as a cochain complex: C^t = K_{k-t} */
        std::vector<FinAbGroup> terms;
        std::vector<AbMorphism> diffs;
        for (int t = 0; t <= k; ++t) {
            FinAbGroup g;
            g.p = p;
            g.exps.assign(dims[k - t], N);
            terms.push_back(g);
        }
        for (int t = 0; t < k; ++t)
            diffs.push_back(make_morphism(terms[t], terms[t + 1], bnd[k - t]));
        CochainComplex C = make_complex(std::move(terms), std::move(diffs));
        std::vector<FinAbGroup> H = cohomology(C);

        bool ok = true;
        std::string witness;
        for (int t = 0; t <= k; ++t) {
            bool expect_unit = (d == 0 && t == k);
            bool trivial = H[t].exps.empty();
            if (expect_unit) {
                if (!(H[t].exps.size() == 1 && H[t].exps[0] == N)) {
                    ok = false;
                    witness = "degree-0 strand has H = " + group_to_string(H[t]) +
                              " at position " + std::to_string(k - t);
                }
            } else if (!trivial) {
                ok = false;
                witness = "strand d=" + std::to_string(d) + " has H = " + group_to_string(H[t]) +
                          " at position " + std::to_string(k - t);
            }
        }
        rep.add("strand_k" + std::to_string(k) + "_d" + std::to_string(d), ok, witness);
    }
    return rep;
}

}  // namespace phigamma
