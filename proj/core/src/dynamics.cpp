#include "caustica/dynamics.hpp"

#include <cmath>

#include "caustica/action_angle.hpp"
#include "caustica/coverage.hpp"
#include "caustica/error.hpp"

namespace caustica {

using numerics::pi;
using numerics::two_pi;

TState billiard_step_t(const Boundary& omega, const TState& p, const CurveJet& start, const StepOptions& opt)
{
    CAUSTICA_REQUIRE(p.phi > opt.phi_min && p.phi < pi - opt.phi_min, ErrorKind::tangency,
                     "reflection angle inside the tangency guard");
    const Vec2 T = start.tangent();
    const Vec2 d = std::cos(p.phi) * T + std::sin(p.phi) * rot90(T);
    const Vec2 P0 = start.p;
    const double t0 = p.t;

    // Signed distance of the boundary point from the ray's line; negative just after t0
    // and positive just before t0 + 2 pi.
    const auto g = [&](double delta) { return cross(d, omega.position(t0 + delta) - P0); };
    const auto dg = [&](double delta) { return cross(d, omega.jet(t0 + delta).d1); };

    const int nb = opt.brackets;
    double lo = 0.0, hi = two_pi;
    bool found = false;
    for (int i = 1; i < nb; ++i) {
        const double delta = two_pi * i / nb;
        if (g(delta) >= 0.0) {
            hi = delta;
            found = true;
            break;
        }
        lo = delta;
    }
    if (!found) hi = two_pi;
    // On the bracket ends that touch the start point the distance vanishes; use the
    // one-sided sign instead of evaluating there.
    const auto g_safe = [&](double delta) {
        if (delta <= 0.0) return -1.0;
        if (delta >= two_pi) return 1.0;
        return g(delta);
    };
    double delta = numerics::solve_bracketed(g_safe, dg, lo, hi, 1e-15);
    const double tol = opt.residual_tol * omega.perimeter();
    for (int it = 0; it < 4 && std::abs(g(delta)) > tol; ++it) delta -= g(delta) / dg(delta);
    CAUSTICA_REQUIRE(std::abs(g(delta)) <= tol, ErrorKind::convergence,
                     "ray/boundary intersection residual above tolerance");
    CAUSTICA_REQUIRE(delta > 0.0 && delta < two_pi, ErrorKind::bracket, "intersection left the bracket");

    const CurveJet end = omega.jet(t0 + delta);
    const Vec2 T1 = end.tangent();
    const Vec2 N1 = end.outward_normal();
    return {t0 + delta, std::atan2(dot(d, N1), dot(d, T1))};
}

TState billiard_step_t(const Boundary& omega, const TState& p, const StepOptions& opt)
{
    return billiard_step_t(omega, p, omega.jet(p.t), opt);
}

PhasePoint billiard_step(const Boundary& omega, const PhasePoint& p, const StepOptions& opt)
{
    coverage::mark(coverage::Op::billiard_step);
    const LazutkinChart& ch = omega.chart();
    const double t0 = ch.t_of_s(numerics::wrap(p.s, ch.perimeter()));
    const TState next = billiard_step_t(omega, {t0, p.phi}, opt);
    return {numerics::wrap(ch.s_of_t(next.t), ch.perimeter()), next.phi};
}

LazPoint to_lazutkin(const Boundary& omega, const PhasePoint& p)
{
    coverage::mark(coverage::Op::to_lazutkin);
    CAUSTICA_REQUIRE(p.phi > 0.0 && p.phi < pi, ErrorKind::invalid_input, "phi must lie in (0, pi)");
    const LazutkinChart& ch = omega.chart();
    const double t = ch.t_of_s(numerics::wrap(p.s, ch.perimeter()));
    const double x = numerics::wrap(ch.x_of_t(t), 1.0);
    return {x, 4.0 * ch.C() * std::cbrt(ch.rho_of_t(t)) * std::sin(0.5 * p.phi)};
}

PhasePoint from_lazutkin(const Boundary& omega, const LazPoint& q)
{
    coverage::mark(coverage::Op::from_lazutkin);
    const LazutkinChart& ch = omega.chart();
    const double t = ch.t_of_x(numerics::wrap(q.x, 1.0));
    const double r = q.y / (4.0 * ch.C() * std::cbrt(ch.rho_of_t(t)));
    CAUSTICA_REQUIRE(q.y > 0.0 && r < 1.0, ErrorKind::invalid_input, "y outside the Lazutkin chart");
    return {numerics::wrap(ch.s_of_t(t), ch.perimeter()), 2.0 * std::asin(r)};
}

LazPoint lazutkin_step(const Boundary& omega, const LazPoint& q, const StepOptions& opt)
{
    coverage::mark(coverage::Op::lazutkin_step);
    const PhasePoint p = from_lazutkin(omega, q);
    const LazutkinChart& ch = omega.chart();
    const double t0 = ch.t_of_x(numerics::wrap(q.x, 1.0));
    const TState next = billiard_step_t(omega, {t0, p.phi}, opt);
    const double advance = ch.x_of_t(next.t) - ch.x_of_t(t0);
    const double y = 4.0 * ch.C() * std::cbrt(ch.rho_of_t(next.t)) * std::sin(0.5 * next.phi);
    return {q.x + advance, y};
}

double rotation_number(const Boundary& omega, const PhasePoint& p0, int iterations, const StepOptions& opt)
{
    coverage::mark(coverage::Op::rotation_number);
    CAUSTICA_REQUIRE(iterations >= 100, ErrorKind::invalid_input, "rotation number needs at least 100 iterations");
    const LazutkinChart& ch = omega.chart();
    const double t0 = ch.t_of_s(numerics::wrap(p0.s, ch.perimeter()));
    TState st{t0, p0.phi};
    long turns = 0;  // explicit winding keeps t small without aliasing the lift
    for (int i = 0; i < iterations; ++i) {
        st = billiard_step_t(omega, st, opt);
        if (st.t >= two_pi) {
            st.t -= two_pi;
            ++turns;
        }
    }
    const double lifted = ch.s_of_t(st.t) + static_cast<double>(turns) * ch.perimeter();
    return (lifted - ch.s_of_t(t0)) / (ch.perimeter() * iterations);
}

std::vector<OrbitRow> orbit(const Boundary& omega, const PhasePoint& p0, int steps, const StepOptions& opt)
{
    CAUSTICA_REQUIRE(steps >= 0, ErrorKind::invalid_input, "negative step count");
    const LazutkinChart& ch = omega.chart();
    TState st{ch.t_of_s(numerics::wrap(p0.s, ch.perimeter())), p0.phi};
    std::vector<OrbitRow> rows;
    rows.reserve(steps + 1);
    for (int i = 0;; ++i) {
        OrbitRow r;
        r.step = i;
        r.s = numerics::wrap(ch.s_of_t(st.t), ch.perimeter());
        r.phi = st.phi;
        r.x = numerics::wrap(ch.x_of_t(st.t), 1.0);
        r.y = 4.0 * ch.C() * std::cbrt(ch.rho_of_t(st.t)) * std::sin(0.5 * st.phi);
        if (omega.is_ellipse()) r.I = first_integral(omega.base(), st.t, st.phi);
        rows.push_back(r);
        if (i == steps) break;
        st = billiard_step_t(omega, st, opt);
        if (st.t >= two_pi) st.t -= two_pi;
    }
    return rows;
}

}  // namespace caustica
