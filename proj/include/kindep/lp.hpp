#pragma once

#include <span>
#include <vector>

namespace kindep::lp {

struct Solution {
    std::vector<double> x;
    double objective = 0.0;
    int pivots = 0;
};

// maximize c.x  subject to  rows[i].x <= rhs[i],  x free.
//
// Dense tableau simplex with Bland's rule. Needs rhs >= 0 so that the
// origin is a feasible starting vertex. Throws Error{LPNumericalFailure}
// when the problem is unbounded or the pivot cap is hit.
Solution maximize_free(std::span<const double> c, const std::vector<std::vector<double>>& rows, std::span<const double> rhs);

} // namespace kindep::lp
