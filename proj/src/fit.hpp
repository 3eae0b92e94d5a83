#pragma once

/*
 * Least-squares exponent fitting on (log B, log count) pairs, for comparing
 * measured growth against the predicted powers of B.
 */

#include <vector>

#include "arith.hpp"

namespace bhc {

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // sum of squared residuals in log space
    size_t points = 0;    // points with count > 0 actually used
};

/// Fit log(count) = slope * log(B) + intercept over the points with
/// count > 0. Requires at least two such points.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& series);

}  // namespace bhc
