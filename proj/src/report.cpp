#include "phigamma/report.hpp"

#include <sstream>

#include "json.hpp"

namespace phigamma {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const GroupLevelParams& gp) {
    ordered_json j;
    j["p"] = gp.p;
    j["n"] = gp.n;
    j["m"] = gp.m;
    j["N"] = gp.N;
    j["l"] = gp.l;
    return j;
}

ordered_json checks_json(const CheckReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json groups_json(const std::vector<FinAbGroup>& H) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < H.size(); ++i) {
        ordered_json e;
        e["degree"] = i;
        e["invariant_factors"] = H[i].exps;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string params_line(const GroupLevelParams& gp) {
    return "p=" + std::to_string(gp.p) + " n=" + std::to_string(gp.n) + " m=" +
           std::to_string(gp.m) + " N=" + std::to_string(gp.N) + " l=" + std::to_string(gp.l);
}

void checks_table(std::ostringstream& out, const CheckReport& rep) {
    int passed = 0;
    for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
    out << "  checks: " << passed << "/" << rep.checks.size() << " pass\n";
    for (const auto& c : rep.checks)
        if (!c.pass) out << "  FAIL " << c.name << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
}

}  // namespace

std::string render_audit(const std::vector<AuditReport>& reports, const std::string& format) {
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "audit";
        ordered_json arr = ordered_json::array();
        bool all = true;
        for (const auto& r : reports) {
            ordered_json e;
            e["params"] = params_json(r.gp);
            e["checks"] = checks_json(r.checks);
            all = all && r.checks.all_pass();
            arr.push_back(std::move(e));
        }
        doc["reports"] = std::move(arr);
        doc["all_pass"] = all;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    for (const auto& r : reports) {
        out << "audit " << params_line(r.gp) << "\n";
        checks_table(out, r.checks);
    }
    return out.str();
}

std::string render_cohomology(const std::vector<CohomologyReport>& reports, const std::string& format) {
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "cohomology";
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json e;
            e["params"] = params_json(r.gp);
            e["module"] = r.module_name;
            e["checks"] = checks_json(r.checks);
            e["cohomology"] = groups_json(r.cohomology);
            e["euler_characteristic"] = r.euler_characteristic;
            e["constructions_agree"] = r.constructions_agree;
            e["oracle"] = r.oracle;
            if (r.etale) e["etale"] = *r.etale;
            if (r.phi_cohomology) e["phi_cohomology"] = groups_json(*r.phi_cohomology);
            arr.push_back(std::move(e));
        }
        doc["reports"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    for (const auto& r : reports) {
        out << "module " << r.module_name << " (" << params_line(r.gp) << ")\n";
        for (size_t i = 0; i < r.cohomology.size(); ++i)
            out << "  H^" << i << " = " << group_to_string(r.cohomology[i]) << "\n";
        if (r.phi_cohomology)
            for (size_t i = 0; i < r.phi_cohomology->size(); ++i)
                out << "  H_phi^" << i << " = " << group_to_string((*r.phi_cohomology)[i]) << "\n";
        out << "  euler_characteristic: " << r.euler_characteristic << "\n";
        out << "  constructions_agree: " << (r.constructions_agree ? "yes" : "no") << "\n";
        out << "  oracle: " << r.oracle << "\n";
        if (r.etale) out << "  etale: " << (*r.etale ? "yes" : "no") << "\n";
        checks_table(out, r.checks);
    }
    return out.str();
}

}  // namespace phigamma
