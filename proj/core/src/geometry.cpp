#include "caustica/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "caustica/coverage.hpp"
#include "caustica/elliptic.hpp"
#include "caustica/error.hpp"

namespace caustica {

using numerics::pi;
using numerics::two_pi;

// ---------------------------------------------------------------- EllipsePose

void EllipsePose::validate() const
{
    CAUSTICA_REQUIRE(std::isfinite(e) && e >= 0.0 && e < 1.0, ErrorKind::invalid_input,
                     "eccentricity must lie in [0,1)");
    CAUSTICA_REQUIRE(std::isfinite(scale) && scale > 0.0, ErrorKind::invalid_input,
                     "scale must be positive");
    CAUSTICA_REQUIRE(std::isfinite(center.x) && std::isfinite(center.y) && std::isfinite(tilt),
                     ErrorKind::invalid_input, "pose must be finite");
}

double EllipsePose::semi_major() const
{
    return scale / (4.0 * elliptic_integral(EllipticKind::E, e));
}

double EllipsePose::semi_minor() const
{
    return semi_major() * std::sqrt(1.0 - e * e);
}

double EllipsePose::min_rho() const
{
    const double a = semi_major();
    const double b = a * std::sqrt(1.0 - e * e);
    return b * b / a;
}

Vec2 EllipsePose::to_world(Vec2 local) const { return center + rotate(local, tilt); }

Vec2 EllipsePose::to_local(Vec2 world) const { return rotate(world - center, -tilt); }

// --------------------------------------------------------- PerturbationSeries

PerturbationSeries::PerturbationSeries(std::vector<double> cos, std::vector<double> sin, int grid)
    : grid_(grid)
{
    CAUSTICA_REQUIRE(grid_ >= 8, ErrorKind::invalid_input, "norm grid too small");
    for (double v : cos) CAUSTICA_REQUIRE(std::isfinite(v), ErrorKind::invalid_input, "non-finite coefficient");
    for (double v : sin) CAUSTICA_REQUIRE(std::isfinite(v), ErrorKind::invalid_input, "non-finite coefficient");
    std::vector<double> s(1, 0.0);
    s.insert(s.end(), sin.begin(), sin.end());
    series_ = numerics::TrigSeries(std::move(cos), std::move(s), 1.0);
}

PerturbationSeries PerturbationSeries::from_series(const numerics::TrigSeries& series, int grid)
{
    CAUSTICA_REQUIRE(std::abs(series.period() - 1.0) < 1e-15, ErrorKind::invalid_input,
                     "perturbations live on the unit Lazutkin circle");
    PerturbationSeries p;
    p.series_ = series;
    p.grid_ = grid;
    return p;
}

PerturbationSeries PerturbationSeries::harmonic(int j, bool sine, double amplitude, int grid)
{
    CAUSTICA_REQUIRE(j >= 0 && !(sine && j == 0), ErrorKind::invalid_input, "bad harmonic index");
    std::vector<double> c(j + 1, 0.0), s(std::max(j, 0), 0.0);
    if (sine)
        s[j - 1] = amplitude;
    else
        c[j] = amplitude;
    return PerturbationSeries(std::move(c), std::move(s), grid);
}

std::vector<double> PerturbationSeries::cos_coeffs() const { return series_.cos_coeffs(); }

std::vector<double> PerturbationSeries::sin_coeffs() const
{
    const auto& s = series_.sin_coeffs();
    return {s.begin() + 1, s.end()};
}

bool PerturbationSeries::is_zero() const
{
    for (double v : series_.cos_coeffs())
        if (v != 0.0) return false;
    for (double v : series_.sin_coeffs())
        if (v != 0.0) return false;
    return true;
}

double PerturbationSeries::c0_norm() const
{
    double m = 0.0;
    for (int j = 0; j < grid_; ++j) m = std::max(m, std::abs(series_(static_cast<double>(j) / grid_)));
    return m;
}

double PerturbationSeries::c1_norm() const
{
    double m0 = 0.0, m1 = 0.0;
    for (int j = 0; j < grid_; ++j) {
        const Jet v = series_.jet(static_cast<double>(j) / grid_);
        m0 = std::max(m0, std::abs(v.v));
        m1 = std::max(m1, std::abs(v.d1));
    }
    return m0 + m1;
}

PerturbationSeries PerturbationSeries::scaled(double factor) const
{
    return from_series(series_.scaled(factor), grid_);
}

namespace {

PerturbationSeries combine(const PerturbationSeries& a, const PerturbationSeries& b, double sign)
{
    const auto& ac = a.series().cos_coeffs();
    const auto& as = a.series().sin_coeffs();
    const auto& bc = b.series().cos_coeffs();
    const auto& bs = b.series().sin_coeffs();
    const std::size_t n = std::max(ac.size(), bc.size());
    std::vector<double> c(n, 0.0), s(n, 0.0);
    for (std::size_t k = 0; k < ac.size(); ++k) {
        c[k] += ac[k];
        s[k] += as[k];
    }
    for (std::size_t k = 0; k < bc.size(); ++k) {
        c[k] += sign * bc[k];
        s[k] += sign * bs[k];
    }
    return PerturbationSeries::from_series(numerics::TrigSeries(std::move(c), std::move(s), 1.0),
                                           std::max(a.grid(), b.grid()));
}

}  // namespace

PerturbationSeries operator+(const PerturbationSeries& a, const PerturbationSeries& b)
{
    return combine(a, b, 1.0);
}

PerturbationSeries operator-(const PerturbationSeries& a, const PerturbationSeries& b)
{
    return combine(a, b, -1.0);
}

// ------------------------------------------------------------------ CurveJet

double CurveJet::rho() const
{
    const double v = norm(d1);
    return v * v * v / cross(d1, d2);
}

Vec2 CurveJet::outward_normal() const
{
    const Vec2 t = normalized(d1);
    return {t.y, -t.x};
}

// ---------------------------------------------------------------- CurveModel

namespace detail {

class CurveModel {
public:
    CurveModel(const EllipsePose& pose, std::optional<PerturbationSeries> n)
        : pose_(pose), n_(std::move(n))
    {
        a_ = pose.semi_major();
        b_ = pose.semi_minor();
        e_ = pose.e;
        K_ = elliptic_integral(EllipticKind::K, e_);
        ct_ = std::cos(pose.tilt);
        st_ = std::sin(pose.tilt);
    }

    double base_x(double t) const
    {
        return (elliptic_integral(EllipticKind::F, e_, t - 0.5 * pi) + K_) / (4.0 * K_);
    }

    Jet base_x(const Jet& t) const
    {
        const double c = std::cos(t.v), s = std::sin(t.v);
        const double w = 1.0 - e_ * e_ * c * c;
        const double sw = std::sqrt(w);
        const double d1 = 1.0 / (4.0 * K_ * sw);
        const double d2 = -e_ * e_ * c * s / (4.0 * K_ * w * sw);
        return compose(t, base_x(t.v), d1, d2);
    }

    template <class T>
    BasicVec2<T> local_point(const T& t) const
    {
        using std::cos;
        using std::sin;
        using std::sqrt;
        const T c = cos(t), s = sin(t);
        BasicVec2<T> p{a_ * c, b_ * s};
        if (!n_) return p;
        const T dx = -a_ * s, dy = b_ * c;
        const T sp = sqrt(dx * dx + dy * dy);
        const T nv = (*n_)(base_x(t));
        p.x += nv * dy / sp;
        p.y -= nv * dx / sp;
        return p;
    }

    Vec2 position(double t) const
    {
        const Vec2 l = local_point(t);
        return {pose_.center.x + ct_ * l.x - st_ * l.y, pose_.center.y + st_ * l.x + ct_ * l.y};
    }

    CurveJet jet(double t) const
    {
        CurveJet out;
        if (!n_) {
            const double c = std::cos(t), s = std::sin(t);
            out.p = {a_ * c, b_ * s};
            out.d1 = {-a_ * s, b_ * c};
            out.d2 = {-a_ * c, -b_ * s};
        } else {
            const auto l = local_point(Jet::variable(t));
            out.p = {l.x.v, l.y.v};
            out.d1 = {l.x.d1, l.y.d1};
            out.d2 = {l.x.d2, l.y.d2};
        }
        out.p = pose_.to_world(out.p);
        out.d1 = rotate(out.d1, pose_.tilt);
        out.d2 = rotate(out.d2, pose_.tilt);
        return out;
    }

    const EllipsePose& pose() const { return pose_; }
    double a() const { return a_; }
    double K() const { return K_; }

private:
    EllipsePose pose_;
    std::optional<PerturbationSeries> n_;
    double a_ = 0.0, b_ = 0.0, e_ = 0.0, K_ = 0.0;
    double ct_ = 1.0, st_ = 0.0;
};

}  // namespace detail

// ------------------------------------------------------------- LazutkinChart


double LazutkinChart::s_of_t(double t) const
{
    if (analytic_) return a_ * (elliptic_integral(EllipticKind::E_inc, e_, t - 0.5 * pi) + E_);
    return arc_(t);
}

double LazutkinChart::x_of_t(double t) const
{
    if (analytic_) return (elliptic_integral(EllipticKind::F, e_, t - 0.5 * pi) + K_) / (4.0 * K_);
    return C_ * laz_(t);
}

Jet LazutkinChart::x_of_t(const Jet& t) const
{
    if (analytic_) {
        const double c = std::cos(t.v), s = std::sin(t.v);
        const double w = 1.0 - e_ * e_ * c * c;
        const double sw = std::sqrt(w);
        return compose(t, x_of_t(t.v), 1.0 / (4.0 * K_ * sw), -e_ * e_ * c * s / (4.0 * K_ * w * sw));
    }
    const Jet j = laz_(t);
    return {C_ * j.v, C_ * j.d1, C_ * j.d2};
}

double LazutkinChart::t_of_s(double s) const
{
    if (!analytic_) return arc_.inverse(s);
    return numerics::lifted_inverse([this](double u) { return s_of_t(u); },
                                    [this](double u) { return curve_->jet(u).speed(); }, two_pi,
                                    perimeter_, s);
}

double LazutkinChart::t_of_x(double x) const
{
    if (!analytic_) return laz_.inverse(x / C_);
    return numerics::lifted_inverse([this](double u) { return x_of_t(u); },
                                    [this](double u) {
                                        const double c = std::cos(u);
                                        return 1.0 / (4.0 * K_ * std::sqrt(1.0 - e_ * e_ * c * c));
                                    },
                                    two_pi, 1.0, x);
}

double LazutkinChart::rho_of_t(double t) const { return curve_->jet(t).rho(); }

double LazutkinChart::mu_of_t(double t) const
{
    return 1.0 / (2.0 * C_ * std::cbrt(rho_of_t(t)));
}

CurveSample LazutkinChart::sample(double t) const
{
    const double tw = numerics::wrap(t, two_pi);
    const CurveJet j = curve_->jet(tw);
    CurveSample out;
    out.t = tw;
    out.s = numerics::wrap(s_of_t(tw), perimeter_);
    out.x = numerics::wrap(x_of_t(tw), 1.0);
    out.position = j.p;
    out.tangent = j.tangent();
    out.normal = j.outward_normal();
    out.rho = j.rho();
    return out;
}

// ------------------------------------------------------------------ Boundary

Boundary::Boundary(const EllipsePose& pose) : Boundary(BoundarySpec{pose, std::nullopt}) {}

Boundary::Boundary(BoundarySpec spec) : spec_(std::move(spec))
{
    const EllipsePose& pose = spec_.base;
    pose.validate();

    auto base_curve = std::make_shared<const detail::CurveModel>(pose, std::nullopt);
    base_chart_.curve_ = base_curve;
    base_chart_.analytic_ = true;
    base_chart_.a_ = pose.semi_major();
    base_chart_.e_ = pose.e;
    base_chart_.K_ = elliptic_integral(EllipticKind::K, pose.e);
    base_chart_.E_ = elliptic_integral(EllipticKind::E, pose.e);
    base_chart_.perimeter_ = pose.scale;
    {
        const double a = pose.semi_major(), b = pose.semi_minor();
        base_chart_.C_ = std::cbrt(a) / (4.0 * base_chart_.K_ * std::cbrt(b * b));
    }

    perturbed_ = spec_.perturbation.has_value() && !spec_.perturbation->is_zero();
    if (!perturbed_) {
        curve_ = base_curve;
        chart_ = base_chart_;
        min_rho_ = pose.min_rho();
        return;
    }

    const PerturbationSeries& n = *spec_.perturbation;
    CAUSTICA_REQUIRE(n.c0_norm() <= 0.5 * pose.min_rho(), ErrorKind::reach,
                     "perturbation exceeds half the tubular reach of the base ellipse");
    curve_ = std::make_shared<const detail::CurveModel>(pose, n);

    const int grid = std::max(2048, n.grid());
    min_rho_ = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid; ++j) {
        const CurveJet cj = curve_->jet(two_pi * j / grid);
        const double k = cross(cj.d1, cj.d2);
        CAUSTICA_REQUIRE(k > 0.0, ErrorKind::convexity, "realized curve is not strictly convex");
        min_rho_ = std::min(min_rho_, cj.rho());
    }

    const auto curve = curve_;
    chart_.curve_ = curve_;
    chart_.analytic_ = false;
    chart_.arc_ = numerics::PeriodicPrimitive::build([&](double t) { return curve->jet(t).speed(); },
                                                     two_pi, 1024);
    chart_.laz_ = numerics::PeriodicPrimitive::build(
        [&](double t) {
            const CurveJet cj = curve->jet(t);
            return std::cbrt(cross(cj.d1, cj.d2) * cross(cj.d1, cj.d2)) / cj.speed();
        },
        two_pi, 1024);
    chart_.perimeter_ = chart_.arc_.total();
    chart_.C_ = 1.0 / chart_.laz_.total();
}

Vec2 Boundary::position(double t) const { return curve_->position(t); }

CurveJet Boundary::jet(double t) const { return curve_->jet(t); }

// ---------------------------------------------------------------- operations

CurveSample ellipse_geometry(const EllipsePose& pose, double t)
{
    coverage::mark(coverage::Op::ellipse_geometry);
    pose.validate();
    const double a = pose.semi_major(), b = pose.semi_minor(), e = pose.e;
    const double c = std::cos(t), s = std::sin(t);
    const double v = std::sqrt(a * a * s * s + b * b * c * c);
    const Vec2 d1{-a * s, b * c};
    CurveSample out;
    out.t = t;
    out.position = pose.to_world({a * c, b * s});
    out.tangent = rotate(d1 / v, pose.tilt);
    out.normal = {out.tangent.y, -out.tangent.x};
    out.rho = v * v * v / (a * b);
    out.s = a * (elliptic_integral(EllipticKind::E_inc, e, t - 0.5 * pi) +
                 elliptic_integral(EllipticKind::E, e));
    const double K = elliptic_integral(EllipticKind::K, e);
    out.x = (elliptic_integral(EllipticKind::F, e, t - 0.5 * pi) + K) / (4.0 * K);
    return out;
}

const LazutkinChart& lazutkin_chart(const Boundary& omega)
{
    coverage::mark(coverage::Op::lazutkin_chart);
    return omega.chart();
}

CurveSample boundary_point(const Boundary& omega, double x)
{
    coverage::mark(coverage::Op::boundary_point);
    return omega.sample(omega.base_chart().t_of_x(x));
}

ReexpressResult reexpress_detailed(const Boundary& omega, const EllipsePose& target,
                                   const ReexpressOptions& opt)
{
    coverage::mark(coverage::Op::reexpress);
    const Boundary ebar(target);
    const LazutkinChart& ch = ebar.chart();
    const double reach = target.min_rho();
    const int M = opt.grid;
    CAUSTICA_REQUIRE(M >= 16, ErrorKind::invalid_input, "reexpress grid too small");
    int degree = opt.degree;
    if (degree < 0) {
        const int J = omega.spec().perturbation ? omega.spec().perturbation->degree() : 0;
        degree = std::max(J, 32) + 8;
    }
    CAUSTICA_REQUIRE(2 * degree < M, ErrorKind::invalid_input, "reexpress degree too high for grid");

    ReexpressResult out;
    out.x_grid = numerics::uniform_grid(M, 1.0);
    out.offsets.resize(M);

    double tau = 0.0;
    double t_prev = 0.0;
    for (int j = 0; j < M; ++j) {
        const double tb = ch.t_of_x(out.x_grid[j]);
        const CurveJet ej = ebar.jet(tb);
        const Vec2 P = ej.p;
        const Vec2 N = ej.outward_normal();
        const auto g = [&](double u) { return cross(N, omega.position(u) - P); };
        const auto dg = [&](double u) { return cross(N, omega.jet(u).d1); };

        bool ok = false;
        if (j > 0) {
            double u = tau + (tb - t_prev);
            for (int it = 0; it < 60; ++it) {
                const double du = g(u) / dg(u);
                u -= du;
                if (std::abs(du) < 1e-15) {
                    ok = dg(u) > 0.0;
                    break;
                }
            }
            if (ok) tau = u;
        }
        if (!ok) {
            // global scan: pick the transversal crossing closest to P; the window is centred
            // on tb so the near crossing never sits on its ends
            const int nscan = 512;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < nscan; ++i) {
                const double u0 = tb - pi + two_pi * i / nscan, u1 = tb - pi + two_pi * (i + 1) / nscan;
                const double g0 = g(u0), g1 = g(u1);
                double u;
                if (g0 == 0.0 && dg(u0) > 0.0)
                    u = u0;
                else if (g0 < 0.0 && g1 >= 0.0)
                    u = numerics::solve_bracketed(g, dg, u0, u1, 1e-15);
                else
                    continue;
                const double d = std::abs(dot(omega.position(u) - P, N));
                if (d < best) {
                    best = d;
                    tau = u;
                    ok = true;
                }
            }
            CAUSTICA_REQUIRE(ok, ErrorKind::reach, "normal line misses the boundary");
        }
        const double sigma = dot(omega.position(tau) - P, N);
        CAUSTICA_REQUIRE(std::abs(sigma) < reach, ErrorKind::reach,
                         "boundary point outside the tubular reach of the target ellipse");
        out.offsets[j] = sigma;
        t_prev = tb;
    }

    const auto series = numerics::TrigSeries::fit(out.offsets, degree, 1.0);
    double resid = 0.0, scale = 0.0;
    for (int j = 0; j < M; ++j) {
        resid = std::max(resid, std::abs(series(out.x_grid[j]) - out.offsets[j]));
        scale = std::max(scale, std::abs(out.offsets[j]));
    }
    out.fit_residual = resid;
    CAUSTICA_REQUIRE(resid <= opt.rel_tol * scale + opt.abs_tol, ErrorKind::convergence,
                     "re-expressed offset is not resolved by the trigonometric fit");
    out.n = PerturbationSeries::from_series(series, 2048);
    return out;
}

PerturbationSeries reexpress(const Boundary& omega, const EllipsePose& target, const ReexpressOptions& opt)
{
    return reexpress_detailed(omega, target, opt).n;
}

}  // namespace caustica
