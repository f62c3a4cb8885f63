#pragma once

#include <string>
#include <vector>

#include "phigamma/herr.hpp"

namespace phigamma {

/* one audit bundle per grid point */
struct AuditReport {
    GroupLevelParams gp;
    CheckReport checks;
};

/*
 * Report documents are deterministic: field order fixed, no timestamps, so
 * identical inputs give byte-identical output.  Invariant factors are listed
 * as the exponents e of the cyclic parts Z/p^e, largest first.
 */
std::string render_audit(const std::vector<AuditReport>& reports, const std::string& format);
std::string render_cohomology(const std::vector<CohomologyReport>& reports, const std::string& format);

}  // namespace phigamma
