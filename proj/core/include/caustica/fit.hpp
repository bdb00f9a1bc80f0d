#pragma once

#include <utility>
#include <vector>

namespace caustica {

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Least squares line through (log u, log v). Needs at least three points, all positive.
LogLogFit fit_loglog_slope(const std::vector<std::pair<double, double>>& pairs);
LogLogFit fit_loglog_slope(const std::vector<double>& u, const std::vector<double>& v);

}  // namespace caustica
