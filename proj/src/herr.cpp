#include "phigamma/herr.hpp"

#include <algorithm>
#include <unordered_set>

#include "phigamma/ring.hpp"

namespace phigamma {

namespace {

std::vector<i64> beta_universe(i64 n) {
    std::vector<i64> u;
    for (i64 i = 1; i <= n; ++i) u.push_back(i);
    return u;
}

i64 binom(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (i64 j = 1; j <= k; ++j) r = checked_mul(r, n - k + j, "binomial") / j;
    return r;
}

Mat blockdiag_copies(const Mat& A, int copies) {
    Mat D(A.rows * copies, A.cols * copies);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j) D(c * A.rows + i, c * A.cols + j) = A(i, j);
    return D;
}

void paste_block(Mat& D, int row0, int col0, const Mat& A, i64 sign = 1) {
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) D(row0 + i, col0 + j) = sign * A(i, j);
}

bool acts_trivially(const ModuleSpec& spec, const Mat& B) {
    Mat diff = normalize_entries(spec.group, mat_sub(B, mat_identity(spec.group.rank())));
    return mat_is_zero(diff);
}

bool all_beta_trivial(const ModuleSpec& spec) {
    for (const Mat& B : spec.B)
        if (!acts_trivially(spec, B)) return false;
    return true;
}

/* log_p of an exact p-power, or an internal failure */
i64 plog(i64 v, i64 p, const char* what) {
    if (v <= 0) fail(ErrCode::Internal, std::string(what) + ": expected a positive p-power");
    i64 k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) fail(ErrCode::Internal, std::string(what) + ": count is not a p-power");
    return k;
}

/*
 * Invariant factors of a group known only through the counts
 * t[k] = log_p #{elements killed by p^k}: the number of cyclic parts with
 * exponent >= k is t[k] - t[k-1].
 */
std::vector<i64> exps_from_counts(const std::vector<i64>& t) {
    std::vector<i64> exps;
    const i64 maxe = (i64)t.size() - 1;
    for (i64 k = maxe; k >= 1; --k) {
        i64 rk = t[k] - t[k - 1];
        i64 rk1 = (k == maxe) ? 0 : t[k + 1] - t[k];
        for (i64 c = 0; c < rk - rk1; ++c) exps.push_back(k);
    }
    return exps;
}

struct KerCoker {
    FinAbGroup ker, coker;
};

/*
 * Kernel and cokernel shapes of an endomorphism by element enumeration; the
 * independence from the Smith-form machinery is the point, so keep it naive.
 */
KerCoker ker_coker_enum(const FinAbGroup& M, const Mat& A) {
    const std::vector<i64> ord = M.orders();
    const int d = M.rank();
    i64 total = 1;
    for (i64 o : ord) total = checked_mul(total, o, "enumeration size");
    if (total > 65536) fail(ErrCode::Overflow, "closed-form enumeration capped at module order 65536");
    i64 maxe = 0;
    for (i64 e : M.exps) maxe = std::max(maxe, e);

    std::vector<i64> strides(d, 1);
    for (int j = 1; j < d; ++j) strides[j] = strides[j - 1] * ord[j - 1];
    auto encode = [&](const std::vector<i64>& y) {
        i64 code = 0;
        for (int j = 0; j < d; ++j) code += y[j] * strides[j];
        return code;
    };

    std::vector<i64> tker(maxe + 1, 0), tcok(maxe + 1, 0);
    std::unordered_set<i64> image;
    std::vector<i64> x(d, 0), y(d, 0);
    for (i64 it = 0; it < total; ++it) {
        for (int i = 0; i < d; ++i) {
            i128 s = 0;
            for (int j = 0; j < d; ++j) s += (i128)A(i, j) * x[j];
            y[i] = (i64)umod((i64)(s % ord[i]), ord[i]);
        }
        image.insert(encode(y));
        bool in_ker = true;
        for (int i = 0; i < d; ++i) in_ker = in_ker && y[i] == 0;
        if (in_ker) {
            i64 pk = 1;
            for (i64 k = 0; k <= maxe; ++k) {
                bool killed = true;
                for (int j = 0; j < d; ++j) killed = killed && (pk * x[j]) % ord[j] == 0;
                if (killed) ++tker[k];
                pk *= M.p;
            }
        }
        for (int j = 0; j < d; ++j) {
            if (++x[j] < ord[j]) break;
            x[j] = 0;
        }
    }

    const i64 imsize = (i64)image.size();
    std::vector<i64> z(d, 0);
    std::fill(x.begin(), x.end(), 0);
    for (i64 it = 0; it < total; ++it) {
        i64 pk = 1;
        for (i64 k = 0; k <= maxe; ++k) {
            for (int j = 0; j < d; ++j) z[j] = (pk * x[j]) % ord[j];
            if (image.count(encode(z))) ++tcok[k];
            pk *= M.p;
        }
        for (int j = 0; j < d; ++j) {
            if (++x[j] < ord[j]) break;
            x[j] = 0;
        }
    }

    std::vector<i64> lker(maxe + 1), lcok(maxe + 1);
    for (i64 k = 0; k <= maxe; ++k) {
        lker[k] = plog(tker[k], M.p, "kernel count");
        if (tcok[k] % imsize != 0) fail(ErrCode::Internal, "cokernel count not divisible by image size");
        lcok[k] = plog(tcok[k] / imsize, M.p, "cokernel count");
    }
    KerCoker out;
    out.ker = FinAbGroup{M.p, exps_from_counts(lker)};
    out.coker = FinAbGroup{M.p, exps_from_counts(lcok)};
    return out;
}

/* mapping fiber of rho = phi - 1 acting degreewise on an already-built complex */
CochainComplex phi_fiber_of(const CochainComplex& C, const ModuleSpec& spec) {
    const int r = spec.group.rank();
    std::vector<AbMorphism> maps;
    for (size_t i = 0; i < C.terms.size(); ++i) {
        const int copies = C.terms[i].rank() / r;
        Mat R = blockdiag_copies(*spec.F, copies);
        for (int j = 0; j < R.rows; ++j) R(j, j) -= 1;
        maps.push_back(make_morphism(C.terms[i], C.terms[i], std::move(R)));
    }
    ChainMap rho = make_chain_map(C, std::move(maps));
    return mapping_fiber(C, rho);
}

/* length of the cokernel (= length of the kernel) of an endomorphism in H-coordinates */
i64 endo_coker_length(const FinAbGroup& H, const Mat& R) {
    if (H.rank() == 0) return 0;
    int E = 1;
    for (i64 e : H.exps) E = std::max(E, (int)e);
    LocalSmith s = smith_local(mat_hstack(R, mat_diag(H.orders())), H.p, E);
    i64 len = 0;
    for (i64 f : s.diag) len += plog(f, H.p, "coker diagonal");
    return len;
}

i64 rho_coker_length(const CohomPresentation& pres, const ModuleSpec& spec, int ambient_rank) {
    if (pres.H.rank() == 0) return 0;
    const int r = spec.group.rank();
    Mat R = blockdiag_copies(*spec.F, ambient_rank / r);
    for (int j = 0; j < R.rows; ++j) R(j, j) -= 1;
    return endo_coker_length(pres.H, induced_endo(pres, R));
}

}  // namespace

CochainComplex build_c_gamma(const ModuleSpec& spec) {
    validate_module(spec);
    const GroupLevelParams& gp = spec.gp;
    FreeRingComplex CL = build_c_lambda(gp);
    const int r = spec.group.rank();

    std::vector<FinAbGroup> terms;
    for (const auto& X : CL.bases) terms.push_back(group_power(spec.group, (int)X.size()));

    std::vector<AbMorphism> diffs;
    for (size_t i = 0; i + 1 < CL.bases.size(); ++i) {
        const int ns = (int)CL.bases[i].size(), nt = (int)CL.bases[i + 1].size();
        Mat D(nt * r, ns * r);
        for (int si = 0; si < ns; ++si)
            for (int ti = 0; ti < nt; ++ti) {
                const Ring& e = CL.d[i][(size_t)si * nt + ti];
                if (ring_is_zero(e)) continue;
                paste_block(D, ti * r, si * r, ring_action(spec, e));
            }
        diffs.push_back(make_morphism(terms[i], terms[i + 1], std::move(D)));
    }
    return make_complex(std::move(terms), std::move(diffs));
}

CochainComplex build_c_gamma_via_fiber(const ModuleSpec& spec) {
    validate_module(spec);
    const GroupLevelParams& gp = spec.gp;
    const int r = spec.group.rank();

    std::vector<AbMorphism> ops;
    for (i64 i = 1; i <= gp.n; ++i)
        ops.push_back(make_morphism(spec.group, spec.group, ring_action(spec, omega(gp, i))));
    CochainComplex K = koszul_cochain(spec.group, ops);

    const std::vector<i64> uni = beta_universe(gp.n);
    std::vector<AbMorphism> maps;
    for (int deg = 0; deg <= (int)gp.n; ++deg) {
        const auto subs = subsets_of_size(uni, deg);
        Mat D((int)subs.size() * r, (int)subs.size() * r);
        for (size_t s = 0; s < subs.size(); ++s)
            paste_block(D, (int)s * r, (int)s * r, ring_action(spec, tau(gp, subs[s])));
        maps.push_back(make_morphism(K.terms[deg], K.terms[deg], std::move(D)));
    }
    ChainMap f = make_chain_map(K, std::move(maps));
    return mapping_fiber(K, f);
}

CochainComplex build_c_phi_gamma(const ModuleSpec& spec) {
    validate_module(spec);
    if (!spec.F) fail(ErrCode::BadMatrixShape, "module has no phi");
    return phi_fiber_of(build_c_gamma(spec), spec);
}

std::vector<FinAbGroup> closed_form_beta_trivial(const ModuleSpec& spec) {
    validate_module(spec);
    if (!all_beta_trivial(spec))
        fail(ErrCode::FamilyConstraintViolated, "closed form requires every beta_i to act as the identity");
    const GroupLevelParams& gp = spec.gp;
    const int r = spec.group.rank();
    const std::vector<i64> ord = spec.group.orders();
    const i64 linv = invmod(umod(gp.l, gp.Q), gp.Q);

    std::vector<KerCoker> kc;
    i64 ck = 1;
    for (i64 k = 0; k <= gp.n; ++k) {
        Mat A(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                A(i, j) = umod((i64)(((i128)ck * spec.G(i, j) - (i == j ? 1 : 0)) % ord[i]), ord[i]);
        kc.push_back(ker_coker_enum(spec.group, A));
        ck = (i64)((i128)ck * linv % gp.Q);
    }

    std::vector<FinAbGroup> H;
    for (i64 i = 0; i <= gp.n + 1; ++i) {
        FinAbGroup h{gp.p, {}};
        if (i <= gp.n) h = group_direct_sum(h, group_power(kc[i].ker, (int)binom(gp.n, i)));
        if (i >= 1) h = group_direct_sum(h, group_power(kc[i - 1].coker, (int)binom(gp.n, i - 1)));
        H.push_back(group_canonical(h));
    }
    return H;
}

CheckReport compare_fixtures(const GroupLevelParams& gp) {
    if (gp.n > 1) fail(ErrCode::BadLevel, "fixtures are written out for n = 0 and n = 1 only");
    CheckReport rep;

    std::vector<ModuleSpec> mods;
    mods.push_back(builtin_family(gp, "trivial", 0));
    mods.push_back(builtin_family(gp, "gamma_character(1)", 0));
    {
        /* a module with phi != id so the rho blocks are exercised with nonzero entries */
        ModuleSpec s = builtin_family(gp, "gamma_character(1)", 0);
        s.F = Mat(1, 1);
        (*s.F)(0, 0) = 2;
        s.name = "gamma_character_phi2";
        validate_module(s);
        mods.push_back(s);
    }
    if (gp.n == 1 && gp.m >= gp.N) mods.push_back(builtin_family(gp, "beta_unipotent", 0));
    if (gp.order <= 512) mods.push_back(builtin_family(gp, "cyclic_quotient(7)", 7));

    for (const ModuleSpec& spec : mods) {
        CochainComplex C = build_c_phi_gamma(spec);
        const int r = spec.group.rank();
        Mat Rho = mat_sub(*spec.F, mat_identity(r));
        Mat T0 = ring_action(spec, tau(gp, {}));

        std::vector<Mat> expected;
        if (gp.n == 0) {
            Mat d0(2 * r, r), d1(r, 2 * r);
            paste_block(d0, 0, 0, Rho);
            paste_block(d0, r, 0, T0);
            paste_block(d1, 0, 0, T0, -1);
            paste_block(d1, 0, r, Rho);
            expected = {d0, d1};
        } else {
            Mat Om = ring_action(spec, omega(gp, 1));
            Mat T1 = ring_action(spec, tau(gp, {1}));
            Mat d0(3 * r, r), d1(3 * r, 3 * r), d2(r, 3 * r);
            paste_block(d0, 0, 0, Rho);
            paste_block(d0, r, 0, T0);
            paste_block(d0, 2 * r, 0, Om);
            paste_block(d1, 0, 0, T0, -1);
            paste_block(d1, 0, r, Rho);
            paste_block(d1, r, 0, Om, -1);
            paste_block(d1, r, 2 * r, Rho);
            paste_block(d1, 2 * r, r, Om, -1);
            paste_block(d1, 2 * r, 2 * r, T1);
            paste_block(d2, 0, 0, Om);
            paste_block(d2, 0, r, T1, -1);
            paste_block(d2, 0, 2 * r, Rho);
            expected = {d0, d1, d2};
        }

        bool shape_ok = C.d.size() == expected.size();
        rep.add("fixture_shape_" + spec.name, shape_ok,
                "expected " + std::to_string(expected.size()) + " maps, got " +
                    std::to_string(C.d.size()));
        if (!shape_ok) continue;
        for (size_t i = 0; i < expected.size(); ++i) {
            Mat want = normalize_entries(C.terms[i + 1], std::move(expected[i]));
            bool ok = want == C.d[i].a;
            rep.add("fixture_" + spec.name + "_d" + std::to_string(i), ok,
                    ok ? "" : "expected\n" + mat_to_string(want) + "got\n" + mat_to_string(C.d[i].a));
        }
    }
    return rep;
}

CohomologyReport cohomology_report(const ModuleSpec& spec, bool with_phi) {
    validate_module(spec);
    const GroupLevelParams& gp = spec.gp;
    CohomologyReport rep;
    rep.gp = gp;
    rep.module_name = spec.name;

    CochainComplex C1 = build_c_gamma(spec);
    CochainComplex C2 = build_c_gamma_via_fiber(spec);
    std::vector<CohomPresentation> pres = cohomology_presentations(C1);
    std::vector<FinAbGroup> H1;
    for (const auto& p : pres) H1.push_back(p.H);
    std::vector<FinAbGroup> H2 = cohomology(C2);

    rep.cohomology = H1;
    rep.constructions_agree = true;
    for (size_t i = 0; i < H1.size(); ++i) {
        bool ok = H1[i] == H2[i];
        rep.checks.add("constructions_agree_d" + std::to_string(i), ok,
                       ok ? "" : group_to_string(H1[i]) + " vs " + group_to_string(H2[i]));
        rep.constructions_agree = rep.constructions_agree && ok;
    }

    rep.euler_characteristic = euler_characteristic(H1);
    rep.checks.add("euler_characteristic_zero", rep.euler_characteristic == 0,
                   "chi = " + std::to_string(rep.euler_characteristic));
    rep.checks.add("support_bounds", (i64)H1.size() == gp.n + 2,
                   "expected degrees 0.." + std::to_string(gp.n + 1));

    if (all_beta_trivial(spec)) {
        std::vector<FinAbGroup> Hc = closed_form_beta_trivial(spec);
        bool ok = Hc.size() == H1.size();
        std::string witness;
        for (size_t i = 0; ok && i < H1.size(); ++i)
            if (!(H1[i] == Hc[i])) {
                ok = false;
                witness = "degree " + std::to_string(i) + ": engine " + group_to_string(H1[i]) +
                          ", closed form " + group_to_string(Hc[i]);
            }
        rep.checks.add("closed_form_agrees", ok, witness);
        rep.oracle = ok ? "agree" : "mismatch";
    } else {
        rep.oracle = "not_applicable";
    }

    if (spec.F) rep.etale = is_etale(spec);

    if (with_phi) {
        if (!spec.F) fail(ErrCode::BadMatrixShape, "phi cohomology requested but module has no phi");
        CochainComplex Cphi = phi_fiber_of(C1, spec);
        std::vector<FinAbGroup> Hphi = cohomology(Cphi);
        rep.phi_cohomology = Hphi;
        rep.checks.add("phi_support_bounds", (i64)Hphi.size() == gp.n + 3,
                       "expected degrees 0.." + std::to_string(gp.n + 2));
        for (i64 i = 0; i <= gp.n + 2; ++i) {
            i64 expect = 0;
            if (i <= gp.n + 1)
                expect += rho_coker_length(pres[i], spec, C1.terms[i].rank());
            if (i >= 1) expect += rho_coker_length(pres[i - 1], spec, C1.terms[i - 1].rank());
            const i64 got = Hphi[i].length();
            rep.checks.add("fiber_length_d" + std::to_string(i), got == expect,
                           "length " + std::to_string(got) + ", kernel/cokernel sum " +
                               std::to_string(expect));
        }
    }
    return rep;
}

}  // namespace phigamma
