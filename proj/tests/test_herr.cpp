#include <string>
#include <vector>

#include "doctest.h"
#include "grids.hpp"
#include "oracles.hpp"
#include "phigamma/herr.hpp"

using namespace phigamma;

namespace {

template <class F>
ErrCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return ErrCode::Internal;  // sentinel meaning "did not throw"
}

i64 choose(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_same_groups(const std::vector<FinAbGroup>& got,
                       const std::vector<FinAbGroup>& want) {
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) {
        CAPTURE(i);
        CHECK(group_to_string(got[i]) == group_to_string(want[i]));
    }
}

void check_report_passes(const CheckReport& rep) {
    if (const CheckResult* f = rep.first_failure())
        FAIL_CHECK(f->name << ": " << f->witness);
    CHECK(rep.all_pass());
}

}  // namespace

TEST_CASE("trivial module cohomology is mod-p of binomial rank") {
    for (const GroupLevelParams& gp : testgrid::standard()) {
        CAPTURE(gp.p);
        CAPTURE(gp.n);
        ModuleSpec s = builtin_family(gp, "trivial", 0);
        const FinAbGroup modp{gp.p, {1}};

        CochainComplex C = build_c_gamma(s);
        REQUIRE((i64)C.terms.size() == gp.n + 2);
        std::vector<FinAbGroup> H = cohomology(C);
        for (i64 i = 0; i <= gp.n + 1; ++i) {
            CAPTURE(i);
            CHECK(group_to_string(H[(size_t)i]) ==
                  group_to_string(group_power(modp, (int)choose(gp.n + 1, i))));
        }

        CochainComplex Cphi = build_c_phi_gamma(s);
        REQUIRE((i64)Cphi.terms.size() == gp.n + 3);
        std::vector<FinAbGroup> Hphi = cohomology(Cphi);
        for (i64 i = 0; i <= gp.n + 2; ++i) {
            CAPTURE(i);
            CHECK(group_to_string(Hphi[(size_t)i]) ==
                  group_to_string(group_power(modp, (int)choose(gp.n + 2, i))));
        }
    }
}

TEST_CASE("rank-one character instance has the expected cohomology") {
    // p = 3, one beta generator, level (m, N) = (2, 2), unit l = 4, module
    // Z/9 with gamma acting as 4 and beta trivially
    const GroupLevelParams gp = validate_params(3, 1, 2, 2, 4);
    ModuleSpec s = builtin_family(gp, "gamma_character(1)", 0);

    std::vector<FinAbGroup> H = cohomology(build_c_gamma(s));
    check_same_groups(H, {FinAbGroup{3, {1}}, FinAbGroup{3, {2, 1}}, FinAbGroup{3, {2}}});
    CHECK(euler_characteristic(H) == 0);

    // phi is the identity, so the fiber complex splits degreewise
    std::vector<FinAbGroup> Hphi = cohomology(build_c_phi_gamma(s));
    check_same_groups(Hphi, {FinAbGroup{3, {1}}, FinAbGroup{3, {2, 1, 1}},
                             FinAbGroup{3, {2, 2, 1}}, FinAbGroup{3, {2}}});
}

TEST_CASE("closed form oracle matches the engine on beta-trivial modules") {
    for (const GroupLevelParams& gp : testgrid::standard()) {
        for (const char* fam : {"trivial", "gamma_character(1)", "gamma_character(2)"}) {
            CAPTURE(gp.p);
            CAPTURE(gp.n);
            CAPTURE(fam);
            ModuleSpec s = builtin_family(gp, fam, 0);
            check_same_groups(cohomology(build_c_gamma(s)), closed_form_beta_trivial(s));
        }
    }
    // rejected when some beta acts nontrivially
    ModuleSpec u = builtin_family(validate_params(3, 1, 2, 2, 4), "beta_unipotent", 0);
    CHECK(std::string(err_name(code_of([&] { closed_form_beta_trivial(u); }))) ==
          err_name(ErrCode::FamilyConstraintViolated));
}

TEST_CASE("the two assembly routes produce identical matrices") {
    const std::vector<std::pair<GroupLevelParams, std::string>> combos = {
        {validate_params(3, 1, 2, 2, 4), "gamma_character(1)"},
        {validate_params(3, 1, 2, 2, 4), "beta_unipotent"},
        {validate_params(3, 1, 2, 2, 4), "cyclic_quotient(7)"},
        {validate_params(2, 2, 2, 1, 5), "trivial"},
        {validate_params(2, 2, 2, 1, 5), "beta_unipotent"},
        {validate_params(5, 1, 1, 1, 6), "regular"},
    };
    for (const auto& [gp, fam] : combos) {
        CAPTURE(gp.p);
        CAPTURE(gp.n);
        CAPTURE(fam);
        ModuleSpec s = builtin_family(gp, fam, 0);
        CochainComplex A = build_c_gamma(s);
        CochainComplex B = build_c_gamma_via_fiber(s);
        REQUIRE(A.terms.size() == B.terms.size());
        for (size_t i = 0; i < A.terms.size(); ++i) {
            CAPTURE(i);
            CHECK(group_to_string(A.terms[i]) == group_to_string(B.terms[i]));
        }
        REQUIRE(A.d.size() == B.d.size());
        for (size_t i = 0; i < A.d.size(); ++i) {
            CAPTURE(i);
            CHECK(A.d[i].a == B.d[i].a);
        }
    }
}

TEST_CASE("hand-written fixtures match the generic builders") {
    for (const GroupLevelParams& gp :
         {validate_params(2, 0, 2, 2, 5), validate_params(3, 0, 2, 2, 4),
          validate_params(2, 1, 2, 2, 5), validate_params(3, 1, 2, 2, 4),
          validate_params(5, 1, 1, 1, 6)}) {
        CAPTURE(gp.p);
        CAPTURE(gp.n);
        check_report_passes(compare_fixtures(gp));
    }
    CHECK(std::string(err_name(code_of(
              [&] { compare_fixtures(validate_params(2, 2, 2, 1, 5)); }))) ==
          err_name(ErrCode::BadLevel));
}

TEST_CASE("full report pipeline") {
    const GroupLevelParams gp = validate_params(3, 1, 2, 2, 4);

    // phi = 2 on Z/9: invertible, nonzero rho blocks
    {
        ModuleSpec s = builtin_family(gp, "gamma_character(1)", 0);
        s.F = Mat(1, 1);
        (*s.F)(0, 0) = 2;
        s.name = "gamma_character_phi2";
        CohomologyReport rep = cohomology_report(s, true);
        check_report_passes(rep.checks);
        CHECK(rep.constructions_agree);
        CHECK(rep.euler_characteristic == 0);
        CHECK(rep.oracle == "agree");
        REQUIRE(rep.etale.has_value());
        CHECK(*rep.etale);
        REQUIRE(rep.phi_cohomology.has_value());
        CHECK((i64)rep.phi_cohomology->size() == gp.n + 3);
    }

    // phi = 3 on Z/9: valid but not invertible — still fully computable
    {
        ModuleSpec s = builtin_family(gp, "gamma_character(1)", 0);
        s.F = Mat(1, 1);
        (*s.F)(0, 0) = 3;
        s.name = "gamma_character_phi3";
        CohomologyReport rep = cohomology_report(s, true);
        check_report_passes(rep.checks);
        REQUIRE(rep.etale.has_value());
        CHECK_FALSE(*rep.etale);
    }

    // beta acts nontrivially: the closed form does not apply
    {
        ModuleSpec s = builtin_family(validate_params(2, 2, 2, 1, 5), "beta_unipotent", 0);
        CohomologyReport rep = cohomology_report(s, true);
        check_report_passes(rep.checks);
        CHECK(rep.oracle == "not_applicable");
    }

    // a quotient module away from the handwritten families
    {
        ModuleSpec s = builtin_family(validate_params(2, 1, 2, 2, 5), "cyclic_quotient(11)", 0);
        CohomologyReport rep = cohomology_report(s, true);
        check_report_passes(rep.checks);
        CHECK((i64)rep.cohomology.size() == 3);
    }
}

TEST_CASE("phi complex requires phi") {
    ModuleSpec s = builtin_family(validate_params(3, 1, 2, 2, 4), "gamma_character(1)", 0);
    s.F.reset();
    CHECK(std::string(err_name(code_of([&] { build_c_phi_gamma(s); }))) ==
          err_name(ErrCode::BadMatrixShape));
    CHECK(std::string(err_name(code_of([&] { cohomology_report(s, true); }))) ==
          err_name(ErrCode::BadMatrixShape));
    CohomologyReport rep = cohomology_report(s, false);
    check_report_passes(rep.checks);
    CHECK_FALSE(rep.etale.has_value());
    CHECK_FALSE(rep.phi_cohomology.has_value());
}

TEST_CASE("brute force enumeration oracle agrees with the lattice engine") {
    struct Case {
        GroupLevelParams gp;
        const char* fam;
        bool phi;  // check the fiber complex instead of the plain one
    };
    const std::vector<Case> cases = {
        {validate_params(3, 1, 2, 2, 4), "trivial", false},
        {validate_params(3, 1, 2, 2, 4), "trivial", true},       // total order 3^8
        {validate_params(3, 1, 2, 2, 4), "gamma_character(1)", false},  // 3^8
        {validate_params(2, 1, 2, 2, 5), "gamma_character(1)", false},
        {validate_params(2, 2, 2, 1, 5), "trivial", false},
    };
    for (const Case& c : cases) {
        CAPTURE(c.gp.p);
        CAPTURE(c.fam);
        CAPTURE(c.phi);
        ModuleSpec s = builtin_family(c.gp, c.fam, 0);
        CochainComplex C = c.phi ? build_c_phi_gamma(s) : build_c_gamma(s);
        check_same_groups(cohomology(C), testoracle::cohomology_bruteforce(C));
    }

    // the enumeration guard trips on anything bigger
    ModuleSpec big = builtin_family(validate_params(3, 1, 2, 2, 4), "gamma_character(1)", 0);
    CochainComplex Cbig = build_c_phi_gamma(big);  // total order 3^16
    CHECK(std::string(err_name(code_of([&] { testoracle::cohomology_bruteforce(Cbig); }))) ==
          err_name(ErrCode::Overflow));
}

TEST_CASE("identity phi splits the fiber cohomology degreewise") {
    const std::vector<std::pair<GroupLevelParams, std::string>> combos = {
        {validate_params(3, 1, 2, 2, 4), "gamma_character(1)"},
        {validate_params(2, 2, 2, 1, 5), "trivial"},
        {validate_params(5, 1, 1, 1, 6), "beta_unipotent"},
    };
    for (const auto& [gp, fam] : combos) {
        CAPTURE(gp.p);
        CAPTURE(fam);
        ModuleSpec s = builtin_family(gp, fam, 0);
        std::vector<FinAbGroup> H = cohomology(build_c_gamma(s));
        std::vector<FinAbGroup> Hphi = cohomology(build_c_phi_gamma(s));
        const FinAbGroup zero{gp.p, {}};
        REQUIRE(Hphi.size() == H.size() + 1);
        for (size_t i = 0; i < Hphi.size(); ++i) {
            CAPTURE(i);
            FinAbGroup low = (i < H.size()) ? H[i] : zero;
            FinAbGroup high = (i >= 1) ? H[i - 1] : zero;
            CHECK(group_to_string(Hphi[i]) ==
                  group_to_string(group_canonical(group_direct_sum(low, high))));
        }
    }
}
