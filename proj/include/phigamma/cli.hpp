#pragma once

#include <string>
#include <vector>

#include "phigamma/params.hpp"

namespace phigamma {

/*
 * Exit code contract: 0 all checks pass, 1 mathematical failure (a relation,
 * audit, or oracle check failed), 2 usage or input error (bad flags, bad grid,
 * unparseable or invalid module file).
 */
constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::vector<GroupLevelParams> grid;
    std::vector<std::string> module_paths;
    std::string out;            // report or output directory; empty = stdout / cwd
    std::string format = "json";
    int max_strand_degree = 6;
    i64 seed = 0;
    bool with_phi = false;
    std::string family;  // examples only
};

/* "p,n,m,N,l[;p,n,m,N,l...]" -> validated params; throws on malformed input */
std::vector<GroupLevelParams> parse_grid(const std::string& text);

int cmd_audit(const RunConfig& config);
int cmd_cohomology(const RunConfig& config);
int cmd_examples(const RunConfig& config);

}  // namespace phigamma
