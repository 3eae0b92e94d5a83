#include "fit.hpp"

#include <cmath>

namespace bhc {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& series) {
    std::vector<std::pair<double, double>> logs;
    for (const auto& [b, c] : series) {
        if (b <= 0) throw input_error("fit_exponent: heights must be positive");
        if (c > 0) logs.emplace_back(std::log(b), std::log(c));
    }
    if (logs.size() < 2) throw input_error("fit_exponent needs at least two positive counts");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : logs) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(logs.size());
    double det = n * sxx - sx * sx;
    if (det == 0) throw input_error("fit_exponent: degenerate abscissae");
    FitResult r;
    r.slope = (n * sxy - sx * sy) / det;
    r.intercept = (sy * sxx - sx * sxy) / det;
    r.points = logs.size();
    for (const auto& [x, y] : logs) {
        double e = y - (r.slope * x + r.intercept);
        r.residual += e * e;
    }
    return r;
}

}  // namespace bhc
