#include "caustica/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "caustica/coverage.hpp"
#include "caustica/error.hpp"
#include "caustica/fit.hpp"

namespace caustica {

using numerics::pi;
using numerics::two_pi;

double InscribedPolygon::max_movable_residual() const
{
    double m = 0.0;
    for (std::size_t k = 1; k < residuals.size(); ++k) m = std::max(m, std::abs(residuals[k]));
    return m;
}

namespace {

std::vector<CurveJet> jets(const Boundary& omega, const std::vector<double>& t)
{
    std::vector<CurveJet> out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) out[k] = omega.jet(t[k]);
    return out;
}

bool ordered(const std::vector<double>& t)
{
    for (std::size_t k = 1; k < t.size(); ++k)
        if (!(t[k] > t[k - 1])) return false;
    return t.back() < t.front() + two_pi;
}

double perimeter_of(const std::vector<Vec2>& p)
{
    double L = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) L += norm(p[(k + 1) % p.size()] - p[k]);
    return L;
}

std::vector<double> residuals_of(const std::vector<CurveJet>& J)
{
    const std::size_t q = J.size();
    std::vector<double> r(q);
    for (std::size_t k = 0; k < q; ++k) {
        const CurveJet& v = J[k];
        const Vec2 T = v.tangent();
        const Vec2 Nout = v.outward_normal();
        const Vec2 din = normalized(v.p - J[(k + q - 1) % q].p);
        const Vec2 dout = normalized(J[(k + 1) % q].p - v.p);
        const double phi_in = std::atan2(dot(din, Nout), dot(din, T));
        const double phi_out = std::atan2(dot(dout, rot90(T)), dot(dout, T));
        r[k] = phi_in - phi_out;
    }
    return r;
}

// Solves the tridiagonal system (sub, diag, sup) x = rhs in place (Thomas algorithm).
bool thomas(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup, std::vector<double>& rhs)
{
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) return false;
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * sup[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) return false;
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
    return true;
}

std::vector<double> chart_orbit(const AAChart& chart, double theta)
{
    const int q = chart.q();
    std::vector<double> t(q);
    for (int k = 0; k < q; ++k) t[k] = chart.t_of_theta(theta + static_cast<double>(k) / q);
    return t;
}

ChartOptions unvalidated()
{
    ChartOptions o;
    o.validate = false;
    return o;
}

}  // namespace

double polygon_perimeter(const Boundary& omega, const std::vector<double>& t)
{
    std::vector<Vec2> p(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) p[k] = omega.position(t[k]);
    return perimeter_of(p);
}

std::vector<double> reflection_residuals(const Boundary& omega, const std::vector<double>& t)
{
    return residuals_of(jets(omega, t));
}

InscribedPolygon max_perimeter_polygon_t(const Boundary& omega, int q, double t0,
                                         const std::optional<std::vector<double>>& init,
                                         const PolygonOptions& opt)
{
    coverage::mark(coverage::Op::max_perimeter_polygon);
    CAUSTICA_REQUIRE(q > 2, ErrorKind::invalid_input, "polygons need q > 2");
    std::vector<double> t;
    if (init) {
        CAUSTICA_REQUIRE(static_cast<int>(init->size()) == q, ErrorKind::invalid_input, "initial polygon has wrong size");
        t = *init;
        const double shift = t0 - t[0];
        for (double& v : t) v += shift;
    } else {
        const AAChart chart = build_chart(omega.base(), q, unvalidated());
        t = chart_orbit(chart, chart.theta_of_t(t0));
        const double shift = t0 - t[0];
        for (double& v : t) v += shift;
    }
    t[0] = t0;
    CAUSTICA_REQUIRE(ordered(t), ErrorKind::invalid_input, "initial polygon is not cyclically ordered");

    const std::size_t m = static_cast<std::size_t>(q - 1);
    InscribedPolygon poly;
    poly.q = q;
    int it = 0;
    for (;; ++it) {
        const std::vector<CurveJet> J = jets(omega, t);
        const std::vector<double> res = residuals_of(J);
        double worst = 0.0;
        for (std::size_t k = 1; k < res.size(); ++k) worst = std::max(worst, std::abs(res[k]));
        if (worst < opt.tolerance) break;
        CAUSTICA_REQUIRE(it < opt.max_steps, ErrorKind::convergence, "polygon optimizer exceeded its step budget");

        // edges k -> k+1 (cyclic)
        std::vector<Vec2> u(q);
        std::vector<double> l(q);
        for (int k = 0; k < q; ++k) {
            const Vec2 d = J[(k + 1) % q].p - J[k].p;
            l[k] = norm(d);
            u[k] = d / l[k];
        }
        std::vector<double> g(m), diag(m), sub(m, 0.0), sup(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const int j = static_cast<int>(i) + 1;
            const Vec2& d1 = J[j].d1;
            const Vec2& d2 = J[j].d2;
            const double s2 = dot(d1, d1);
            const double a = dot(u[j - 1], d1), b = dot(u[j], d1);
            g[i] = a - b;
            diag[i] = dot(u[j - 1], d2) + (s2 - a * a) / l[j - 1] - dot(u[j], d2) + (s2 - b * b) / l[j];
            if (i + 1 < m) {
                const Vec2& e1 = J[j + 1].d1;
                const double off = -(dot(d1, e1) - dot(u[j], d1) * dot(u[j], e1)) / l[j];
                sup[i] = off;
                sub[i + 1] = off;
            }
        }
        std::vector<double> step(m);
        for (std::size_t i = 0; i < m; ++i) step[i] = -g[i];
        bool newton = thomas(sub, diag, sup, step);
        double ascent = 0.0;
        for (std::size_t i = 0; i < m; ++i) ascent += step[i] * g[i];
        if (!newton || !(ascent > 0.0)) {
            // fall back to a diagonally scaled gradient step
            for (std::size_t i = 0; i < m; ++i)
                step[i] = g[i] / std::max(std::abs(diag[i]), 1e-3 * omega.perimeter());
        }

        const double L0 = perimeter_of([&] {
            std::vector<Vec2> p(q);
            for (int k = 0; k < q; ++k) p[k] = J[k].p;
            return p;
        }());
        double alpha = 1.0;
        bool accepted = false;
        std::vector<double> trial(t);
        for (int h = 0; h <= opt.max_halvings; ++h, alpha *= 0.5) {
            for (std::size_t i = 0; i < m; ++i) trial[i + 1] = t[i + 1] + alpha * step[i];
            if (!ordered(trial)) continue;
            const double L1 = polygon_perimeter(omega, trial);
            if (L1 >= L0 - 4.0 * std::numeric_limits<double>::epsilon() * L0) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            CAUSTICA_REQUIRE(ordered(trial), ErrorKind::convergence, "line search could not keep the vertices ordered");
            if (worst < opt.stagnation_tolerance) break;
            throw Error(ErrorKind::convergence, "polygon line search stagnated above tolerance");
        }
        t = trial;
    }

    poly.t = t;
    poly.iterations = it;
    poly.s.resize(q);
    const LazutkinChart& ch = omega.chart();
    for (int k = 0; k < q; ++k) poly.s[k] = ch.s_of_t(t[k]);
    poly.perimeter = polygon_perimeter(omega, t);
    poly.residuals = reflection_residuals(omega, t);
    return poly;
}

InscribedPolygon max_perimeter_polygon(const Boundary& omega, int q, double s0, const PolygonOptions& opt)
{
    const double t0 = omega.chart().t_of_s(numerics::wrap(s0, omega.perimeter()));
    return max_perimeter_polygon_t(omega, q, t0, std::nullopt, opt);
}

std::vector<double> default_theta_grid(int nodes) { return numerics::uniform_grid(nodes, 1.0); }

PerimeterFunctions perimeter_functions(const AAChart& chart, const Boundary& omega,
                                       const std::vector<double>& theta)
{
    coverage::mark(coverage::Op::perimeter_functions);
    const EllipsePose& E = chart.pose();
    const EllipsePose& B = omega.base();
    CAUSTICA_REQUIRE(E.e == B.e && E.scale == B.scale && E.tilt == B.tilt && E.center.x == B.center.x &&
                         E.center.y == B.center.y,
                     ErrorKind::invalid_input, "perturbed boundary must be based on the chart's ellipse");
    const Boundary& ellipse = chart.boundary();
    PerimeterFunctions out;
    out.q = chart.q();
    out.theta = theta;
    for (double th : theta) {
        const std::vector<double> t = chart_orbit(chart, th);
        out.L0.push_back(polygon_perimeter(ellipse, t));
        const InscribedPolygon p = max_perimeter_polygon_t(omega, chart.q(), t[0], t);
        out.L1.push_back(p.perimeter);
        out.closure.push_back(p.closure_residual());
    }
    return out;
}

PerimeterFunctions perimeter_functions(const EllipsePose& base, const Boundary& omega, int q,
                                       const std::vector<double>& theta)
{
    return perimeter_functions(build_chart(base, q), omega, theta);
}

double deformation_function(const PerturbationSeries& n, const AAChart& chart, double theta)
{
    coverage::mark(coverage::Op::deformation_function);
    const int q = chart.q();
    const LazutkinChart& lc = chart.boundary().chart();
    double D = 0.0;
    for (int k = 1; k <= q; ++k) {
        const double t = chart.t_of_theta(theta + static_cast<double>(k) / q);
        D += n(lc.x_of_t(t)) * std::sin(chart.Phi_of_t(t));
    }
    return 2.0 * D;
}

std::vector<double> deformation_function(const PerturbationSeries& n, const AAChart& chart,
                                         const std::vector<double>& theta)
{
    std::vector<double> out;
    out.reserve(theta.size());
    for (double th : theta) out.push_back(deformation_function(n, chart, th));
    return out;
}

DefectSweep perimeter_defect(const EllipsePose& base, const PerturbationSeries& v, int q,
                             const std::vector<double>& scales, const std::vector<double>& theta)
{
    coverage::mark(coverage::Op::perimeter_defect);
    CAUSTICA_REQUIRE(!scales.empty() && !theta.empty(), ErrorKind::invalid_input, "defect sweep needs scales and a grid");
    const AAChart chart = build_chart(base, q);
    DefectSweep sweep;
    std::vector<double> eps, def;
    bool positive = true;
    for (double scale : scales) {
        DefectReport r;
        r.e = base.e;
        r.q = q;
        r.scale = scale;
        const PerturbationSeries n = v.scaled(scale);
        r.epsilon = n.c1_norm();
        const Boundary omega(BoundarySpec{base, n});
        const PerimeterFunctions pf = perimeter_functions(chart, omega, theta);
        r.theta = theta;
        r.L0 = pf.L0;
        r.L1 = pf.L1;
        r.D = deformation_function(n, chart, theta);
        for (std::size_t i = 0; i < theta.size(); ++i)
            r.defect = std::max(r.defect, std::abs(r.L1[i] - r.L0[i] - r.D[i]));
        eps.push_back(r.epsilon);
        def.push_back(r.defect);
        positive = positive && r.defect > 0.0 && r.epsilon > 0.0;
        sweep.reports.push_back(std::move(r));
    }
    sweep.slope = (positive && scales.size() >= 3) ? fit_loglog_slope(eps, def).slope
                                                   : std::numeric_limits<double>::quiet_NaN();
    return sweep;
}

PseudoOrbit pseudo_orbit_diagnostics(const AAChart& chart, const Boundary& omega,
                                     const InscribedPolygon& polygon, double theta)
{
    coverage::mark(coverage::Op::pseudo_orbit_diagnostics);
    const int q = chart.q();
    CAUSTICA_REQUIRE(polygon.q == q, ErrorKind::invalid_input, "polygon and chart disagree on q");
    const Boundary& ellipse = chart.boundary();
    const EllipsePose& pose = chart.pose();
    const double reach = pose.min_rho();

    std::vector<double> tbar(q);
    std::vector<Vec2> pbar(q);
    PseudoOrbit out;
    out.vertices.resize(q);
    for (int k = 0; k < q; ++k) {
        const Vec2 Q = omega.position(polygon.t[k]);
        // orthogonal projection onto the ellipse, Newton from the tubular foot point
        double tau = polygon.t[k];
        for (int it = 0; it < 50; ++it) {
            const CurveJet j = ellipse.jet(tau);
            const double f = dot(Q - j.p, j.d1);
            const double df = -dot(j.d1, j.d1) + dot(Q - j.p, j.d2);
            const double step = f / df;
            tau -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const CurveJet foot = ellipse.jet(tau);
        CAUSTICA_REQUIRE(norm(Q - foot.p) < reach, ErrorKind::reach, "vertex outside the tubular reach");
        tbar[k] = tau;
        pbar[k] = foot.p;

        const double t_k = chart.t_of_theta(theta + static_cast<double>(k) / q);
        const CurveJet base = ellipse.jet(t_k);
        const Vec2 dv = Q - base.p;
        PseudoVertex& pv = out.vertices[k];
        pv.v = norm(dv);
        pv.alpha = pv.v > 0.0 ? std::atan2(dot(dv, base.outward_normal()), dot(dv, base.tangent())) : 0.0;
        pv.theta_bar = chart.theta_of_t(tau);
    }
    double lmin = std::numeric_limits<double>::infinity(), lmax = 0.0;
    for (int k = 0; k < q; ++k) {
        const CurveJet j = ellipse.jet(tbar[k]);
        const Vec2 T = j.tangent();
        const Vec2 dout = normalized(pbar[(k + 1) % q] - pbar[k]);
        const Vec2 din = normalized(pbar[k] - pbar[(k + q - 1) % q]);
        PseudoVertex& pv = out.vertices[k];
        pv.phi_plus = std::atan2(dot(dout, rot90(T)), dot(dout, T));
        pv.phi_minus = std::atan2(dot(din, j.outward_normal()), dot(din, T));
        pv.I_plus = first_integral(pose, tbar[k], pv.phi_plus);
        pv.I_minus = first_integral(pose, tbar[k], pv.phi_minus);
        const double l = norm(omega.position(polygon.t[(k + 1) % q]) - omega.position(polygon.t[k]));
        lmin = std::min(lmin, l);
        lmax = std::max(lmax, l);
    }
    const double t0 = chart.t_of_theta(theta);
    out.I_star = first_integral(pose, t0, chart.Phi_of_t(t0));
    out.xi = std::max(q * lmax, 1.0 / (q * lmin));
    return out;
}

IntegrabilityScan integrability_scan(const Boundary& omega, int q, const std::vector<double>& theta)
{
    coverage::mark(coverage::Op::integrability_scan);
    CAUSTICA_REQUIRE(!theta.empty(), ErrorKind::invalid_input, "scan needs a grid");
    const AAChart chart = build_chart(omega.base(), q, unvalidated());
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    IntegrabilityScan out;
    for (double th : theta) {
        const std::vector<double> init = chart_orbit(chart, th);
        const InscribedPolygon p = max_perimeter_polygon_t(omega, q, init[0], init);
        lo = std::min(lo, p.perimeter);
        hi = std::max(hi, p.perimeter);
        out.closure_residual = std::max(out.closure_residual, p.closure_residual());
    }
    out.perimeter_variation = hi - lo;
    return out;
}

}  // namespace caustica
