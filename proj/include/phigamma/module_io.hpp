#pragma once

#include <string>

#include "phigamma/module_spec.hpp"

namespace phigamma {

/*
 * Interchange format: a single JSON object with integer fields p, n, m, N, l,
 * "invariant_factors" (descending exponents), "gamma" (row-major matrix),
 * "beta" (array of n matrices), optional "phi".  Unknown fields are rejected.
 * serialize o parse is the identity on normalized specs.
 */
ModuleSpec parse_spec(const std::string& text);
std::string serialize_spec(const ModuleSpec& spec);

ModuleSpec load_spec(const std::string& path);
void save_spec(const ModuleSpec& spec, const std::string& path);

}  // namespace phigamma
