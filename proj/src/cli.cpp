#include "phigamma/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "phigamma/module_io.hpp"
#include "phigamma/report.hpp"
#include "phigamma/strands.hpp"

namespace phigamma {

namespace {

/* invalid user input (bad params, bad file, bad module data) vs broken mathematics */
bool is_input_error(ErrCode code) {
    switch (code) {
        case ErrCode::NonPrime:
        case ErrCode::BadUnit:
        case ErrCode::CongruenceViolation:
        case ErrCode::BadLevel:
        case ErrCode::BadMatrixShape:
        case ErrCode::NotInvertible:
        case ErrCode::OrderViolation:
        case ErrCode::NotCommuting:
        case ErrCode::ConjugationViolation:
        case ErrCode::PhiDoesNotCommute:
        case ErrCode::NotAMorphism:
        case ErrCode::RankMismatch:
        case ErrCode::FamilyConstraintViolated:
        case ErrCode::ParseError:
            return true;
        default:
            return false;
    }
}

int exit_code_for(const Error& e) { return is_input_error(e.code) ? kExitUsage : kExitMathFailure; }

void write_report(const RunConfig& config, const std::string& text) {
    if (config.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(config.out);
    if (!f) fail(ErrCode::ParseError, "cannot write " + config.out);
    f << text;
}

std::string file_safe(const std::string& name) {
    std::string s;
    for (char c : name) {
        if (c == '(') s += '_';
        else if (c == ')') continue;
        else s += c;
    }
    return s;
}

}  // namespace

std::vector<GroupLevelParams> parse_grid(const std::string& text) {
    std::vector<GroupLevelParams> grid;
    std::stringstream entries(text);
    std::string entry;
    while (std::getline(entries, entry, ';')) {
        if (entry.empty()) continue;
        std::stringstream fields(entry);
        std::string field;
        std::vector<i64> v;
        while (std::getline(fields, field, ',')) {
            try {
                size_t pos = 0;
                v.push_back(std::stoll(field, &pos));
                if (pos != field.size()) throw std::invalid_argument(field);
            } catch (const std::exception&) {
                fail(ErrCode::ParseError, "grid entry \"" + entry + "\": bad integer \"" + field + "\"");
            }
        }
        if (v.size() != 5)
            fail(ErrCode::ParseError, "grid entry \"" + entry + "\" must be p,n,m,N,l");
        grid.push_back(validate_params(v[0], v[1], v[2], v[3], v[4]));
    }
    if (grid.empty()) fail(ErrCode::ParseError, "empty grid");
    return grid;
}

int cmd_audit(const RunConfig& config) {
    try {
        if (config.grid.empty()) fail(ErrCode::ParseError, "audit requires --grid");
        std::vector<AuditReport> reports;
        for (const GroupLevelParams& gp : config.grid) {
            AuditReport r;
            r.gp = gp;
            r.checks.absorb(check_relations(gp), "relations/");
            r.checks.absorb(audit_d_squared(build_c_lambda(gp)), "free_complex/");
            int k = (int)std::min<i64>(gp.n, 3);
            r.checks.absorb(graded_strand_audit(gp.p, gp.N, k, config.max_strand_degree),
                            "strands/");
            reports.push_back(std::move(r));
        }
        bool all = true;
        for (const auto& r : reports) all = all && r.checks.all_pass();
        write_report(config, render_audit(reports, config.format));
        return all ? kExitOk : kExitMathFailure;
    } catch (const Error& e) {
        std::cerr << "audit: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_cohomology(const RunConfig& config) {
    try {
        if (config.module_paths.empty())
            fail(ErrCode::ParseError, "cohomology requires at least one --module");
        std::vector<CohomologyReport> reports;
        for (const std::string& path : config.module_paths) {
            ModuleSpec spec = load_spec(path);
            if (config.with_phi && !spec.F)
                fail(ErrCode::ParseError, path + ": --with-phi given but module has no phi");
            reports.push_back(cohomology_report(spec, spec.F.has_value()));
        }
        bool all = true;
        for (const auto& r : reports) all = all && r.checks.all_pass();
        write_report(config, render_cohomology(reports, config.format));
        return all ? kExitOk : kExitMathFailure;
    } catch (const Error& e) {
        std::cerr << "cohomology: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_examples(const RunConfig& config) {
    try {
        if (config.grid.empty()) fail(ErrCode::ParseError, "examples requires --grid");
        if (config.family.empty()) fail(ErrCode::ParseError, "examples requires a family name");
        for (const GroupLevelParams& gp : config.grid) {
            ModuleSpec spec = builtin_family(gp, config.family, config.seed);
            std::string dir = config.out.empty() ? "." : config.out;
            std::string path = dir + "/" + file_safe(spec.name) + "_p" + std::to_string(gp.p) +
                               "n" + std::to_string(gp.n) + "m" + std::to_string(gp.m) + "N" +
                               std::to_string(gp.N) + "l" + std::to_string(gp.l) + ".json";
            save_spec(spec, path);
            std::cout << path << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "examples: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace phigamma
