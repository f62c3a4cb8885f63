#include "phigamma/module_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phigamma/errors.hpp"

namespace phigamma {

namespace {

using ordered_json = nlohmann::ordered_json;

i64 get_int(const ordered_json& j, const char* field) {
    if (!j.contains(field)) fail(ErrCode::ParseError, std::string("missing field \"") + field + "\"");
    const auto& v = j.at(field);
    if (!v.is_number_integer())
        fail(ErrCode::ParseError, std::string("field \"") + field + "\" must be an integer");
    return v.get<i64>();
}

Mat get_matrix(const ordered_json& v, const std::string& where, i64 rank) {
    if (!v.is_array()) fail(ErrCode::ParseError, where + " must be an array of rows");
    Mat out(rank, rank);
    if (static_cast<i64>(v.size()) != rank)
        fail(ErrCode::ParseError, where + " has " + std::to_string(v.size()) + " rows, expected " +
                                      std::to_string(rank));
    for (i64 i = 0; i < rank; ++i) {
        const auto& row = v.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<i64>(row.size()) != rank)
            fail(ErrCode::ParseError,
                 where + " row " + std::to_string(i) + " must have " + std::to_string(rank) + " entries");
        for (i64 jc = 0; jc < rank; ++jc) {
            const auto& e = row.at(static_cast<size_t>(jc));
            if (!e.is_number_integer())
                fail(ErrCode::ParseError, where + " entry (" + std::to_string(i) + "," +
                                              std::to_string(jc) + ") must be an integer");
            out(i, jc) = e.get<i64>();
        }
    }
    return out;
}

ordered_json matrix_json(const Mat& a) {
    ordered_json rows = ordered_json::array();
    for (i64 i = 0; i < a.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (i64 j = 0; j < a.cols; ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Entries reduced mod the order of the target row so that serialization is canonical.
Mat normalized(const Mat& a, const FinAbGroup& g) {
    Mat out = a;
    const std::vector<i64> ord = g.orders();
    for (i64 i = 0; i < out.rows; ++i)
        for (i64 j = 0; j < out.cols; ++j) out(i, j) = umod(out(i, j), ord[static_cast<size_t>(i)]);
    return out;
}

}  // namespace

ModuleSpec parse_spec(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrCode::ParseError, "top level must be a JSON object");

    static const char* known[] = {"p", "n", "m", "N", "l", "invariant_factors", "gamma", "beta", "phi"};
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) ok = true;
        if (!ok) fail(ErrCode::ParseError, "unknown field \"" + item.key() + "\"");
    }

    ModuleSpec spec;
    spec.gp = validate_params(get_int(j, "p"), get_int(j, "n"), get_int(j, "m"), get_int(j, "N"),
                              get_int(j, "l"));

    if (!j.contains("invariant_factors")) fail(ErrCode::ParseError, "missing field \"invariant_factors\"");
    const auto& inv = j.at("invariant_factors");
    if (!inv.is_array()) fail(ErrCode::ParseError, "invariant_factors must be an array");
    std::vector<i64> exps;
    for (const auto& e : inv) {
        if (!e.is_number_integer())
            fail(ErrCode::ParseError, "invariant_factors entries must be integers");
        exps.push_back(e.get<i64>());
    }
    spec.group = FinAbGroup{spec.gp.p, exps};

    if (!j.contains("gamma")) fail(ErrCode::ParseError, "missing field \"gamma\"");
    spec.G = get_matrix(j.at("gamma"), "gamma", spec.group.rank());

    if (!j.contains("beta")) fail(ErrCode::ParseError, "missing field \"beta\"");
    const auto& betas = j.at("beta");
    if (!betas.is_array() || static_cast<i64>(betas.size()) != spec.gp.n)
        fail(ErrCode::ParseError,
             "beta must be an array of " + std::to_string(spec.gp.n) + " matrices");
    for (i64 i = 0; i < spec.gp.n; ++i)
        spec.B.push_back(get_matrix(betas.at(static_cast<size_t>(i)),
                                    "beta[" + std::to_string(i) + "]", spec.group.rank()));

    if (j.contains("phi")) spec.F = get_matrix(j.at("phi"), "phi", spec.group.rank());

    spec.name = "module";
    return spec;
}

std::string serialize_spec(const ModuleSpec& spec) {
    ordered_json j;
    j["p"] = spec.gp.p;
    j["n"] = spec.gp.n;
    j["m"] = spec.gp.m;
    j["N"] = spec.gp.N;
    j["l"] = spec.gp.l;
    j["invariant_factors"] = spec.group.exps;
    j["gamma"] = matrix_json(normalized(spec.G, spec.group));
    ordered_json betas = ordered_json::array();
    for (const auto& b : spec.B) betas.push_back(matrix_json(normalized(b, spec.group)));
    j["beta"] = std::move(betas);
    if (spec.F) j["phi"] = matrix_json(normalized(*spec.F, spec.group));
    return j.dump(2) + "\n";
}

ModuleSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    ModuleSpec spec = parse_spec(ss.str());
    auto slash = path.find_last_of('/');
    spec.name = (slash == std::string::npos) ? path : path.substr(slash + 1);
    return spec;
}

void save_spec(const ModuleSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrCode::ParseError, "cannot write " + path);
    out << serialize_spec(spec);
}

}  // namespace phigamma
