#include "caustica/action_angle.hpp"

#include <cmath>
#include <complex>

#include <boost/math/tools/roots.hpp>

#include "caustica/coverage.hpp"
#include "caustica/error.hpp"

namespace caustica {

using numerics::pi;
using numerics::two_pi;

EllipticCoordsPoint elliptical_coords(const EllipsePose& pose, Vec2 point)
{
    coverage::mark(coverage::Op::elliptical_coords);
    pose.validate();
    CAUSTICA_REQUIRE(pose.e > 0.0, ErrorKind::invalid_input, "elliptical coordinates need distinct foci");
    const double h = pose.semi_major() * pose.e;
    const Vec2 l = pose.to_local(point);
    CAUSTICA_REQUIRE(!(l.y == 0.0 && std::abs(l.x) < h), ErrorKind::invalid_input,
                     "point lies strictly inside the focal segment");
    const std::complex<double> w = std::acosh(std::complex<double>(l.x, l.y) / h);
    return {std::abs(w.real()), numerics::wrap(w.real() < 0.0 ? -w.imag() : w.imag(), two_pi)};
}

Vec2 from_elliptical_coords(const EllipsePose& pose, const EllipticCoordsPoint& c)
{
    coverage::mark(coverage::Op::elliptical_coords);
    const double h = pose.semi_major() * pose.e;
    return pose.to_world({h * std::cosh(c.mu) * std::cos(c.psi), h * std::sinh(c.mu) * std::sin(c.psi)});
}

double first_integral(const EllipsePose& pose, double psi, double phi)
{
    coverage::mark(coverage::Op::first_integral);
    const double cp = std::cos(phi), sp = std::sin(phi), cs = std::cos(psi);
    return cp * cp + pose.e * pose.e * cs * cs * sp * sp;
}

namespace {

struct Axes {
    double a, b;
};

Axes axes(const EllipsePose& pose) { return {pose.semi_major(), pose.semi_minor()}; }

// Angle variable of the caustic Z as a lifted function of t, up to the 1/(4K) factor.
double angle_variable(double k, double Kk, double t)
{
    return (elliptic_integral(EllipticKind::F, k, t - 0.5 * pi) + Kk) / (4.0 * Kk);
}

double caustic_modulus(const Axes& ax, double Z)
{
    return std::sqrt((ax.a * ax.a - ax.b * ax.b) / (ax.a * ax.a - Z));
}

// Rotation number as a function of u = sin(Phi) at the major vertex, u in [0, 1].
double rotation_of_u(const Axes& ax, double u)
{
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 0.5;
    const double Z = ax.b * ax.b * u * u;
    const double c = std::sqrt(1.0 - u * u);
    const double lam = (2.0 * u / ax.a) / (u * u / (ax.a * ax.a) + c * c / (ax.b * ax.b));
    const double X = ax.a - lam * u, Y = lam * c;
    const double t1 = std::atan2(Y / ax.b, X / ax.a);
    const double k = caustic_modulus(ax, Z);
    return angle_variable(k, elliptic_integral(EllipticKind::K, k), t1);
}

}  // namespace

double caustic_rotation_number(const EllipsePose& pose, double Z)
{
    const Axes ax = axes(pose);
    CAUSTICA_REQUIRE(Z >= 0.0 && Z <= ax.b * ax.b, ErrorKind::invalid_input, "caustic parameter outside [0, b^2]");
    return rotation_of_u(ax, std::sqrt(Z) / ax.b);
}

ConfocalCaustic caustic_from_rotation_number(const EllipsePose& pose, double omega)
{
    coverage::mark(coverage::Op::caustic_from_rotation_number);
    pose.validate();
    CAUSTICA_REQUIRE(omega > 0.0 && omega <= 0.5, ErrorKind::bracket, "rotation number outside (0, 1/2]");
    const Axes ax = axes(pose);
    if (omega == 0.5) return {ax.b * ax.b};  // degenerate: the focal segment
    const auto f = [&](double u) { return rotation_of_u(ax, u) - omega; };
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, 0.0, 1.0, -omega, 0.5 - omega,
                                                     boost::math::tools::eps_tolerance<double>(52), iters);
    const double u = 0.5 * (r.first + r.second);
    CAUSTICA_REQUIRE(std::abs(f(u)) < 1e-12, ErrorKind::convergence, "caustic root find did not converge");
    return {ax.b * ax.b * u * u};
}

// ---------------------------------------------------------------- AAChart

double AAChart::theta_of_t(double t) const
{
    if (method_ == ChartMethod::density) return angle_variable(k_, Kk_, t);
    return t / two_pi + periodic_angle_(t);
}

double AAChart::dtheta_dt(double t) const
{
    if (method_ == ChartMethod::density) {
        const double c = std::cos(t);
        return 1.0 / (4.0 * Kk_ * std::sqrt(1.0 - k_ * k_ * c * c));
    }
    return 1.0 / two_pi + periodic_angle_d_(t);
}

double AAChart::t_of_theta(double theta) const
{
    return numerics::lifted_inverse([this](double t) { return theta_of_t(t); },
                                    [this](double t) { return dtheta_dt(t); }, two_pi, 1.0, theta);
}

double AAChart::S(double theta) const { return boundary_.chart().s_of_t(t_of_theta(theta)); }

double AAChart::Phi_of_t(double t) const
{
    const double v = boundary_.jet(t).speed();
    return std::asin(std::sqrt(caustic_.Z) / v);
}

double AAChart::Phi(double theta) const { return Phi_of_t(t_of_theta(theta)); }

double AAChart::Xq(double theta) const { return boundary_.chart().x_of_t(t_of_theta(theta)); }

double AAChart::Yq(double theta) const
{
    const double t = t_of_theta(theta);
    const LazutkinChart& ch = boundary_.chart();
    return 4.0 * ch.C() * std::cbrt(ch.rho_of_t(t)) * std::sin(0.5 * Phi_of_t(t));
}

double AAChart::dXq(double theta) const
{
    const double t = t_of_theta(theta);
    return boundary_.chart().x_of_t(Jet::variable(t)).d1 / dtheta_dt(t);
}

double AAChart::Xq_inv(double x) const { return theta_of_t(boundary_.chart().t_of_x(x)); }

double AAChart::dtheta_dx(double x) const
{
    const double t = boundary_.chart().t_of_x(x);
    return dtheta_dt(t) / boundary_.chart().x_of_t(Jet::variable(t)).d1;
}

double AAChart::eta(double x) const { return std::sin(Phi_of_t(boundary_.chart().t_of_x(x))); }

std::vector<ChartRow> AAChart::table(int nodes) const
{
    CAUSTICA_REQUIRE(nodes > 0, ErrorKind::invalid_input, "chart table needs nodes");
    std::vector<ChartRow> rows(nodes);
    for (int j = 0; j < nodes; ++j) {
        const double th = static_cast<double>(j) / nodes;
        rows[j] = {th, S(th), Phi(th), Xq(th), Yq(th), dXq(th)};
    }
    return rows;
}

namespace {

// Boundary map induced by tangency to the chart's caustic.
double caustic_map(const AAChart& ch, double t)
{
    return billiard_step_t(ch.boundary(), {t, ch.Phi_of_t(t)}).t;
}

void validate(AAChart& ch, int samples, double& invariance, double& conjugacy)
{
    invariance = 0.0;
    conjugacy = 0.0;
    const double h = 1e-3;
    const LazutkinChart& lc = ch.boundary().chart();
    for (int j = 0; j < samples; ++j) {
        const double t = two_pi * (j + 0.5) / samples;
        const double Ft = caustic_map(ch, t);
        const double dF = (-caustic_map(ch, t + 2 * h) + 8 * caustic_map(ch, t + h) -
                           8 * caustic_map(ch, t - h) + caustic_map(ch, t - 2 * h)) /
                          (12 * h);
        const double lhs = ch.dtheta_dt(Ft) * dF;
        const double rhs = ch.dtheta_dt(t);
        invariance = std::max(invariance, std::abs(lhs - rhs) / rhs);
        const double th = ch.theta_of_t(t);
        conjugacy = std::max(conjugacy, std::abs(lc.s_of_t(Ft) - ch.S(th + ch.omega())));
    }
}

}  // namespace

AAChart build_chart(const EllipsePose& pose, int q, const ChartOptions& opt)
{
    coverage::mark(coverage::Op::build_chart);
    pose.validate();
    CAUSTICA_REQUIRE(q > 2, ErrorKind::invalid_input, "charts need q > 2");
    CAUSTICA_REQUIRE(pose.e < 0.9, ErrorKind::invalid_input, "charts need e < 0.9");
    AAChart ch;
    ch.boundary_ = Boundary(pose);
    ch.q_ = q;
    ch.caustic_ = caustic_from_rotation_number(pose, 1.0 / q);
    const Axes ax = axes(pose);
    ch.k_ = caustic_modulus(ax, ch.caustic_.Z);
    ch.Kk_ = elliptic_integral(EllipticKind::K, ch.k_);
    ch.method_ = opt.method;

    if (ch.method_ == ChartMethod::density && opt.validate) {
        validate(ch, opt.validation_samples, ch.invariance_residual_, ch.conjugacy_residual_);
        if (ch.invariance_residual_ < opt.tolerance && ch.conjugacy_residual_ < opt.tolerance) return ch;
        ch.method_ = ChartMethod::orbit_average;
    }
    if (ch.method_ == ChartMethod::density) return ch;

    // Orbit averaging: theta(t) = (1/q) sum_k [t_k / 2 pi - k / q] along the tangent orbit
    // t_0 = t, t_{k+1} = F(t_k). Exactly conjugates F to the rotation by 1/q.
    const int n = opt.orbit_average_nodes;
    std::vector<double> periodic(n);
    for (int i = 0; i < n; ++i) {
        double t = two_pi * i / n;
        double acc = 0.0;
        for (int k = 0; k < q; ++k) {
            acc += t / two_pi - static_cast<double>(k) / q;
            if (k + 1 < q) t = caustic_map(ch, t);
        }
        periodic[i] = acc / q - static_cast<double>(i) / n;
    }
    const double p0 = periodic[0];
    for (double& v : periodic) v -= p0;
    ch.periodic_angle_ = numerics::TrigSeries::fit(periodic, n / 2 - 1, two_pi);
    ch.periodic_angle_.trim(1e-17);
    ch.periodic_angle_d_ = ch.periodic_angle_.derivative();
    if (opt.validate) {
        validate(ch, opt.validation_samples, ch.invariance_residual_, ch.conjugacy_residual_);
        CAUSTICA_REQUIRE(ch.invariance_residual_ < opt.tolerance && ch.conjugacy_residual_ < opt.tolerance,
                         ErrorKind::convergence, "action-angle chart failed the conjugacy check");
    }
    return ch;
}

}  // namespace caustica
