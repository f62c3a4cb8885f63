#include "phigamma/module_spec.hpp"

#include <random>

#include "phigamma/quotient.hpp"

namespace phigamma {

static AbMorphism as_endo(const ModuleSpec& spec, const Mat& a, const char* what) {
    if (a.rows != spec.group.rank() || a.cols != spec.group.rank())
        fail(ErrCode::BadMatrixShape, std::string(what) + " is " + std::to_string(a.rows) + "x" +
                                          std::to_string(a.cols) + ", rank is " +
                                          std::to_string(spec.group.rank()));
    return make_morphism(spec.group, spec.group, a);
}

void validate_module(const ModuleSpec& spec) {
    if (spec.group.p != spec.gp.p) fail(ErrCode::BadMatrixShape, "group prime differs from p");
    if (!spec.group.canonical())
        fail(ErrCode::BadMatrixShape, "invariant factors must be sorted descending");
    for (i64 e : spec.group.exps)
        if (e < 1 || e > spec.gp.N) fail(ErrCode::BadMatrixShape, "factor exponent out of [1, N]");
    if ((i64)spec.B.size() != spec.gp.n)
        fail(ErrCode::BadMatrixShape, "expected " + std::to_string(spec.gp.n) + " beta matrices");

    AbMorphism G = as_endo(spec, spec.G, "gamma matrix");
    std::vector<AbMorphism> B;
    for (size_t i = 0; i < spec.B.size(); ++i)
        B.push_back(as_endo(spec, spec.B[i], "beta matrix"));

    if (!morphism_invertible(G)) fail(ErrCode::NotInvertible, "gamma action");
    for (size_t i = 0; i < B.size(); ++i)
        if (!morphism_invertible(B[i]))
            fail(ErrCode::NotInvertible, "beta_" + std::to_string(i + 1) + " action");

    AbMorphism id = morphism_identity(spec.group);
    if (!morphism_eq(morphism_pow(G, spec.gp.q), id))
        fail(ErrCode::OrderViolation, "gamma^(p^m) != 1");
    for (size_t i = 0; i < B.size(); ++i)
        if (!morphism_eq(morphism_pow(B[i], spec.gp.q), id))
            fail(ErrCode::OrderViolation, "beta_" + std::to_string(i + 1) + "^(p^m) != 1");

    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j)
            if (!morphism_eq(morphism_compose(B[i], B[j]), morphism_compose(B[j], B[i])))
                fail(ErrCode::NotCommuting,
                     "beta_" + std::to_string(i + 1) + " and beta_" + std::to_string(j + 1));

    for (size_t i = 0; i < B.size(); ++i)
        if (!morphism_eq(morphism_compose(G, B[i]),
                         morphism_compose(morphism_pow(B[i], spec.gp.lambda), G)))
            fail(ErrCode::ConjugationViolation,
                 "gamma beta_" + std::to_string(i + 1) + " != beta_" + std::to_string(i + 1) +
                     "^lambda gamma");

    if (spec.F) {
        AbMorphism F = as_endo(spec, *spec.F, "phi matrix");
        if (!morphism_eq(morphism_compose(F, G), morphism_compose(G, F)))
            fail(ErrCode::PhiDoesNotCommute, "phi and gamma");
        for (size_t i = 0; i < B.size(); ++i)
            if (!morphism_eq(morphism_compose(F, B[i]), morphism_compose(B[i], F)))
                fail(ErrCode::PhiDoesNotCommute, "phi and beta_" + std::to_string(i + 1));
    }
}

bool is_etale(const ModuleSpec& spec) {
    if (!spec.F) fail(ErrCode::BadMatrixShape, "module has no phi");
    return morphism_invertible(make_morphism(spec.group, spec.group, *spec.F));
}

Mat group_element_action(const ModuleSpec& spec, Elem g) {
    ElemParts parts = elem_decode(spec.gp, g);
    AbMorphism acc = morphism_pow(make_morphism(spec.group, spec.group, spec.G), parts.a);
    for (i64 i = 0; i < spec.gp.n; ++i) {
        AbMorphism bi = make_morphism(spec.group, spec.group, spec.B[i]);
        acc = morphism_compose(acc, morphism_pow(bi, parts.c[i]));
    }
    return acc.a;
}

Mat ring_action(const ModuleSpec& spec, const Ring& r) {
    const int d = spec.group.rank();
    Mat acc(d, d);
    std::vector<i64> mods = spec.group.orders();
    for (Elem g = 0; g < spec.gp.order; ++g) {
        if (r[g] == 0) continue;
        Mat ag = group_element_action(spec, g);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                acc(i, j) = umod(acc(i, j) + (i128)r[g] * ag(i, j) % mods[i], mods[i]);
    }
    return acc;
}

/* left multiplication by g on the group ring, as a permutation matrix */
static Mat left_mult_perm(const GroupLevelParams& gp, Elem g) {
    Mat P((int)gp.order, (int)gp.order);
    for (Elem h = 0; h < gp.order; ++h) P(elem_mul(gp, g, h), h) = 1;
    return P;
}

static ModuleSpec family_trivial(const GroupLevelParams& gp) {
    ModuleSpec spec;
    spec.gp = gp;
    spec.group.p = gp.p;
    spec.group.exps = {1};
    Mat one(1, 1);
    one(0, 0) = 1;
    spec.G = one;
    spec.B.assign(gp.n, one);
    spec.F = one;
    spec.name = "trivial";
    return spec;
}

static ModuleSpec family_gamma_character(const GroupLevelParams& gp, i64 k) {
    ModuleSpec spec;
    spec.gp = gp;
    spec.group.p = gp.p;
    spec.group.exps = {gp.N};
    Mat G(1, 1), one(1, 1);
    G(0, 0) = powmod(gp.l, k, gp.Q);
    one(0, 0) = 1;
    spec.G = G;
    spec.B.assign(gp.n, one);
    spec.F = one;
    spec.name = "gamma_character(" + std::to_string(k) + ")";
    return spec;
}

static ModuleSpec family_beta_unipotent(const GroupLevelParams& gp) {
    if (gp.n < 1) fail(ErrCode::FamilyConstraintViolated, "beta_unipotent needs n >= 1");
    ModuleSpec spec;
    spec.gp = gp;
    spec.group.p = gp.p;
    spec.group.exps = {gp.N, gp.N};
    Mat B1 = mat_identity(2), G = mat_identity(2);
    B1(0, 1) = 1;
    G(0, 0) = gp.l % gp.Q;
    spec.G = G;
    spec.B.assign(gp.n, mat_identity(2));
    spec.B[0] = B1;
    spec.F = mat_identity(2);
    spec.name = "beta_unipotent";
    return spec;
}

static ModuleSpec family_regular(const GroupLevelParams& gp) {
    if (gp.order > 2048)
        fail(ErrCode::FamilyConstraintViolated, "regular family capped at group order 2048");
    ModuleSpec spec;
    spec.gp = gp;
    spec.group.p = gp.p;
    spec.group.exps.assign(gp.order, gp.N);
    spec.G = left_mult_perm(gp, elem_gamma(gp));
    for (i64 i = 1; i <= gp.n; ++i) spec.B.push_back(left_mult_perm(gp, elem_beta(gp, i)));
    spec.F = mat_identity((int)gp.order);
    spec.name = "regular";
    return spec;
}

static ModuleSpec family_cyclic_quotient(const GroupLevelParams& gp, i64 seed) {
    if (gp.order > 512)
        fail(ErrCode::FamilyConstraintViolated, "cyclic_quotient family capped at group order 512");
    std::mt19937_64 rng((unsigned long long)seed);
    Ring x(gp.order);
    for (i64 i = 0; i < gp.order; ++i) x[i] = (i64)(rng() % (unsigned long long)gp.Q);
    i64 aug = augmentation(gp, x);
    if (aug % gp.p != 0) {
        /* force x into the augmentation ideal so the quotient is nonzero */
        x[elem_identity(gp)] = umod(x[elem_identity(gp)] - aug, gp.Q);
    }

    FinAbGroup ambient;
    ambient.p = gp.p;
    ambient.exps.assign(gp.order, gp.N);
    Mat rel((int)gp.order, (int)gp.order);
    for (Elem g = 0; g < gp.order; ++g) {
        Elem gi = elem_inv(gp, g);
        for (Elem h = 0; h < gp.order; ++h) rel((int)h, (int)g) = x[elem_mul(gp, gi, h)];
    }
    std::vector<Mat> endos;
    endos.push_back(left_mult_perm(gp, elem_gamma(gp)));
    for (i64 i = 1; i <= gp.n; ++i) endos.push_back(left_mult_perm(gp, elem_beta(gp, i)));
    QuotientModule q = present_quotient(ambient, rel, endos);

    ModuleSpec spec;
    spec.gp = gp;
    spec.group = q.group;
    spec.G = q.endos[0];
    for (i64 i = 1; i <= gp.n; ++i) spec.B.push_back(q.endos[i]);
    spec.F = mat_identity(spec.group.rank());
    spec.name = "cyclic_quotient(" + std::to_string(seed) + ")";
    return spec;
}

std::vector<std::string> builtin_family_names() {
    return {"trivial", "gamma_character", "beta_unipotent", "regular", "cyclic_quotient"};
}

ModuleSpec builtin_family(const GroupLevelParams& gp, const std::string& name, i64 seed) {
    std::string base = name;
    i64 arg = 0;
    bool has_arg = false;
    auto lp = name.find('(');
    if (lp != std::string::npos) {
        if (name.back() != ')') fail(ErrCode::ParseError, "malformed family name " + name);
        base = name.substr(0, lp);
        std::string inner = name.substr(lp + 1, name.size() - lp - 2);
        try {
            size_t pos = 0;
            arg = std::stoll(inner, &pos);
            if (pos != inner.size()) throw std::invalid_argument(inner);
        } catch (const std::exception&) {
            fail(ErrCode::ParseError, "family argument must be an integer: " + name);
        }
        has_arg = true;
    }

    ModuleSpec spec;
    if (base == "trivial")
        spec = family_trivial(gp);
    else if (base == "gamma_character")
        spec = family_gamma_character(gp, has_arg ? arg : 1);
    else if (base == "beta_unipotent")
        spec = family_beta_unipotent(gp);
    else if (base == "regular")
        spec = family_regular(gp);
    else if (base == "cyclic_quotient")
        spec = family_cyclic_quotient(gp, has_arg ? arg : seed);
    else
        fail(ErrCode::ParseError, "unknown family " + name);

    try {
        validate_module(spec);
    } catch (const Error& e) {
        fail(ErrCode::FamilyConstraintViolated,
             spec.name + " is invalid at p=" + std::to_string(gp.p) + " n=" +
                 std::to_string(gp.n) + " m=" + std::to_string(gp.m) + " N=" +
                 std::to_string(gp.N) + " l=" + std::to_string(gp.l) + ": " + e.what());
    }
    return spec;
}

}  // namespace phigamma
