#include "caustica/fit.hpp"

#include <cmath>

#include "caustica/coverage.hpp"
#include "caustica/error.hpp"

namespace caustica {

LogLogFit fit_loglog_slope(const std::vector<std::pair<double, double>>& pairs)
{
    coverage::mark(coverage::Op::fit_loglog_slope);
    CAUSTICA_REQUIRE(pairs.size() >= 3, ErrorKind::invalid_input, "slope fit needs at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = static_cast<double>(pairs.size());
    for (const auto& [u, v] : pairs) {
        CAUSTICA_REQUIRE(u > 0.0 && v > 0.0 && std::isfinite(u) && std::isfinite(v),
                         ErrorKind::invalid_input, "slope fit needs positive finite values");
        const double x = std::log(u), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double vx = sxx - sx * sx / n;
    const double vy = syy - sy * sy / n;
    const double cxy = sxy - sx * sy / n;
    CAUSTICA_REQUIRE(vx > 0.0, ErrorKind::invalid_input, "slope fit needs distinct abscissae");
    LogLogFit f;
    f.slope = cxy / vx;
    f.intercept = (sy - f.slope * sx) / n;
    f.r2 = vy > 0.0 ? cxy * cxy / (vx * vy) : 1.0;
    return f;
}

LogLogFit fit_loglog_slope(const std::vector<double>& u, const std::vector<double>& v)
{
    CAUSTICA_REQUIRE(u.size() == v.size(), ErrorKind::invalid_input, "slope fit needs paired data");
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < u.size(); ++i) pairs.emplace_back(u[i], v[i]);
    return fit_loglog_slope(pairs);
}

}  // namespace caustica
