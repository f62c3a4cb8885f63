#pragma once

#include "phigamma/checks.hpp"
#include "phigamma/complex.hpp"

namespace phigamma {

/*
 * Audit of the Koszul resolution over (Z/p^N)[x_1..x_k]: for each total degree
 * d <= maxdeg, the degree-d strand of the complex on the regular sequence
 * x_1..x_k must be exact, except that the d = 0 strand contributes a single
 * Z/p^N at homological degree zero.  Reports one check per strand.
 */
CheckReport graded_strand_audit(i64 p, i64 N, int k, int maxdeg);

}  // namespace phigamma
