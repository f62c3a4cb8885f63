#pragma once

#include "phigamma/abgroup.hpp"

namespace phigamma {

/*
 * Present the quotient of an ambient sum of cyclic p-groups by the subgroup
 * generated by the columns of rel, together with the endomorphisms induced by
 * ambient endomorphisms that preserve the subgroup.
 */
struct QuotientModule {
    FinAbGroup group;        // canonical
    std::vector<Mat> endos;  // induced matrices, normalized mod p^e_row
};

QuotientModule present_quotient(const FinAbGroup& ambient, const Mat& rel,
                                const std::vector<Mat>& endos);

}  // namespace phigamma
