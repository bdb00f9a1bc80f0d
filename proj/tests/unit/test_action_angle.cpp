#include <gtest/gtest.h>

#include <cmath>

#include "caustica/action_angle.hpp"
#include "caustica/error.hpp"
#include "caustica/fit.hpp"
#include "caustica/modes.hpp"

using namespace caustica;
using numerics::pi;
using numerics::two_pi;

namespace {

TEST(EllipticalCoords, SpecialPointsAndRoundTrip)
{
    const EllipsePose E{0.4};
    const double a = E.semi_major(), h = a * E.e;
    const auto focus = elliptical_coords(E, {h, 0.0});
    EXPECT_NEAR(focus.mu, 0.0, 1e-7);
    EXPECT_NEAR(focus.psi, 0.0, 1e-12);
    const auto vertex = elliptical_coords(E, {a, 0.0});
    EXPECT_NEAR(std::cosh(vertex.mu), 1.0 / E.e, 1e-12);
    EXPECT_NEAR(vertex.psi, 0.0, 1e-12);
    for (double t : {0.3, 1.9, 4.0}) {
        const CurveSample c = ellipse_geometry(E, t);
        const auto ec = elliptical_coords(E, c.position);
        EXPECT_NEAR(std::cosh(ec.mu), 1.0 / E.e, 1e-12);
        EXPECT_NEAR(ec.psi, t, 1e-12);
    }
    for (Vec2 p : {Vec2{0.01, 0.02}, Vec2{-0.1, 0.05}, Vec2{0.3, -0.2}}) {
        const auto ec = elliptical_coords(E, p);
        EXPECT_NEAR(h * std::cosh(ec.mu) * std::cos(ec.psi), p.x, 1e-12);
        EXPECT_NEAR(h * std::sinh(ec.mu) * std::sin(ec.psi), p.y, 1e-12);
        const Vec2 back = from_elliptical_coords(E, ec);
        EXPECT_NEAR(back.x, p.x, 1e-12);
        EXPECT_NEAR(back.y, p.y, 1e-12);
    }
}

TEST(EllipticalCoords, PosedEllipseUsesOwnFrame)
{
    const EllipsePose E{0.3, {0.2, -0.4}, 0.9, 1.5};
    const CurveSample c = ellipse_geometry(E, 1.1);
    const auto ec = elliptical_coords(E, c.position);
    EXPECT_NEAR(std::cosh(ec.mu), 1.0 / E.e, 1e-12);
    EXPECT_NEAR(ec.psi, 1.1, 1e-12);
}

TEST(EllipticalCoords, CircleLimit)
{
    const EllipsePose E{1e-6};
    const double h = E.semi_major() * E.e;
    const auto v = elliptical_coords(E, {E.semi_major(), 0.0});
    EXPECT_NEAR(h * std::cosh(v.mu), 1.0 / two_pi, 1e-10);
    EXPECT_NEAR(h * std::sinh(v.mu), 1.0 / two_pi, 1e-10);
    EXPECT_THROW(elliptical_coords(EllipsePose{0.0}, {0.1, 0.0}), Error);
}

TEST(FirstIntegral, ClosedForms)
{
    const EllipsePose E{0.5};
    EXPECT_NEAR(first_integral(E, 0.7, 0.0), 1.0, 1e-15);
    EXPECT_NEAR(first_integral(E, pi / 2, pi / 2), 0.0, 1e-15);
    for (double phi : {0.3, 1.2})
        EXPECT_NEAR(first_integral(EllipsePose{0.0}, 0.4, phi), std::pow(std::cos(phi), 2), 1e-15);
}

TEST(Caustic, CircleRegularPolygon)
{
    const EllipsePose E{0.0};
    const double b = E.semi_minor();
    for (int q = 3; q <= 9; ++q) {
        const double Z = caustic_from_rotation_number(E, 1.0 / q).Z;
        EXPECT_NEAR(Z, b * b * std::pow(std::sin(pi / q), 2), 1e-14) << q;
        EXPECT_NEAR(caustic_rotation_number(E, Z), 1.0 / q, 1e-10);
    }
}

TEST(Caustic, RangeMonotoneAndGlancing)
{
    const EllipsePose E{0.6};
    const double b2 = E.semi_minor() * E.semi_minor();
    double prev = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double w = caustic_rotation_number(E, b2 * i / 41.0);
        EXPECT_GT(w, prev);
        prev = w;
    }
    EXPECT_LT(caustic_rotation_number(E, 1e-12 * b2), 1e-5);
    for (int q = 3; q <= 12; ++q) {
        const double Z = caustic_from_rotation_number(E, 1.0 / q).Z;
        EXPECT_GT(Z, 0.0);
        EXPECT_LT(Z, b2);
        EXPECT_NEAR(caustic_rotation_number(E, Z), 1.0 / q, 1e-10);
    }
    EXPECT_THROW(caustic_from_rotation_number(E, 0.7), Error);
    EXPECT_THROW(caustic_from_rotation_number(E, 0.0), Error);
}

TEST(Caustic, PonceletClosure)
{
    const EllipsePose E{0.25};
    const double Z = caustic_from_rotation_number(E, 1.0 / 3).Z;
    const Boundary omega(E);
    for (double t0 : {0.0, 0.8, 2.0}) {
        const double sp = norm(omega.jet(t0).d1);
        TState st{t0, std::asin(std::sqrt(Z) / sp)};
        for (int k = 0; k < 3; ++k) st = billiard_step_t(omega, st);
        const double gap = std::abs(omega.chart().s_of_t(st.t) - omega.chart().s_of_t(t0) - 1.0);
        EXPECT_LT(gap, 1e-8);
    }
}

TEST(Chart, CircleIsIdentity)
{
    for (int q : {3, 5, 8}) {
        const AAChart ch = build_chart(EllipsePose{0.0}, q);
        for (double th : {0.0, 0.17, 0.5, 0.9}) {
            EXPECT_NEAR(ch.S(th), th, 1e-12);
            EXPECT_NEAR(ch.Phi(th), pi / q, 1e-12);
        }
    }
}

TEST(Chart, NormalizationMonotonicityAndConjugacy)
{
    for (double e : {0.1, 0.4}) {
        for (int q : {3, 7, 15}) {
            const AAChart ch = build_chart(EllipsePose{e}, q);
            EXPECT_NEAR(ch.S(0.0), 0.0, 1e-14);
            EXPECT_LT(ch.conjugacy_residual(), 1e-8);
            EXPECT_LT(ch.invariance_residual(), 1e-8);
            double pS = -1.0, pX = -1.0;
            for (int i = 0; i <= 128; ++i) {
                const double th = i / 128.0;
                EXPECT_GT(ch.S(th), pS);
                EXPECT_GT(ch.Xq(th), pX);
                EXPECT_GT(ch.Yq(th), 0.0);
                EXPECT_GT(ch.Phi(th), 0.0);
                EXPECT_LE(ch.Phi(th), pi / 2);
                pS = ch.S(th);
                pX = ch.Xq(th);
            }
            EXPECT_NEAR(ch.S(1.0), 1.0, 1e-12);
            EXPECT_NEAR(ch.Xq(1.0) - ch.Xq(0.0), 1.0, 1e-12);
            // direct conjugacy check through the billiard map
            const Boundary& omega = ch.boundary();
            for (double th : {0.05, 0.4, 0.77}) {
                const PhasePoint n = billiard_step(omega, {ch.S(th), ch.Phi(th)});
                EXPECT_LT(std::abs(numerics::wrap_centered(n.s - ch.S(th + 1.0 / q), 1.0)), 1e-8);
                EXPECT_NEAR(n.phi, ch.Phi(th + 1.0 / q), 1e-8);
            }
        }
    }
}

TEST(Chart, OrbitAverageAgreesWithDensity)
{
    ChartOptions opt;
    opt.method = ChartMethod::orbit_average;
    const AAChart a = build_chart(EllipsePose{0.3}, 5, opt);
    const AAChart b = build_chart(EllipsePose{0.3}, 5);
    EXPECT_EQ(a.method(), ChartMethod::orbit_average);
    for (double th : {0.1, 0.45, 0.8}) EXPECT_NEAR(a.S(th), b.S(th), 1e-8);
}

TEST(Chart, FirstIntegralConstantOnChartOrbit)
{
    const EllipsePose E{0.3};
    const AAChart ch = build_chart(E, 6);
    const double I0 = first_integral_t(E, ch.t_of_theta(0.1), ch.Phi(0.1));
    for (int k = 1; k <= 12; ++k) {
        const double th = 0.1 + k / 6.0;
        EXPECT_NEAR(first_integral_t(E, ch.t_of_theta(th), ch.Phi(th)), I0, 1e-9);
    }
}

TEST(Chart, XqApproachesIdentityLikeInverseSquare)
{
    // q = 3..5 are pre-asymptotic: q^2 * deviation settles only from q ~ 6 on
    std::vector<double> qs, dev, ddev;
    double bound = 0.0;
    for (int q = 3; q <= 20; ++q) {
        const AAChart ch = build_chart(EllipsePose{0.2}, q);
        double m0 = 0.0, m1 = 0.0;
        for (int i = 0; i < 256; ++i) {
            const double th = i / 256.0;
            m0 = std::max(m0, std::abs(ch.Xq(th) - th));
            m1 = std::max(m1, std::abs(ch.dXq(th) - 1.0));
        }
        bound = std::max(bound, q * q * std::max(m0, m1));
        if (q < 6) continue;
        qs.push_back(q);
        dev.push_back(m0);
        ddev.push_back(m1);
    }
    EXPECT_LT(bound, 0.5);
    EXPECT_NEAR(fit_loglog_slope(qs, dev).slope, -2.0, 0.3);
    EXPECT_NEAR(fit_loglog_slope(qs, ddev).slope, -2.0, 0.3);
}

TEST(Chart, YqCloseToOneOverQ)
{
    double worst = 0.0;
    for (int q = 3; q <= 30; q += 3) {
        const AAChart ch = build_chart(EllipsePose{0.2}, q);
        double m = 0.0;
        for (int i = 0; i < 128; ++i) m = std::max(m, std::abs(ch.Yq(i / 128.0) - 1.0 / q));
        worst = std::max(worst, m * q * q * q);
    }
    EXPECT_LT(worst, 1.0);
}

TEST(Chart, EtaAgainstDensity)
{
    // q eta / (w_q mu) -> 1 with an O(1/q^2) deviation
    const EllipsePose E{0.2};
    const LazutkinChart& lz = lazutkin_chart(Boundary(E));
    std::vector<double> qs, dev;
    for (int q : {4, 8, 16, 32}) {
        const AAChart ch = build_chart(E, q);
        double m = 0.0;
        for (int i = 0; i < 128; ++i) {
            const double x = i / 128.0;
            EXPECT_GT(ch.eta(x), 0.0);
            m = std::max(m, std::abs(q * ch.eta(x) / (mode_prefactor(q) * lz.mu(x)) - 1.0));
        }
        qs.push_back(q);
        dev.push_back(m);
    }
    EXPECT_NEAR(fit_loglog_slope(qs, dev).slope, -2.0, 0.3);
}

TEST(Chart, InverseAndTable)
{
    const AAChart ch = build_chart(EllipsePose{0.3}, 4);
    for (double th : {0.0, 0.3, 0.95}) {
        EXPECT_NEAR(ch.Xq_inv(ch.Xq(th)), th, 1e-12);
        EXPECT_NEAR(ch.t_of_theta(ch.theta_of_t(1.0 + th)), 1.0 + th, 1e-12);
        EXPECT_NEAR(ch.dtheta_dx(ch.Xq(th)), 1.0 / ch.dXq(th), 1e-10);
    }
    const auto rows = ch.table(32);
    ASSERT_EQ(rows.size(), 32u);
    EXPECT_NEAR(rows[8].theta, 0.25, 1e-15);
    EXPECT_NEAR(rows[8].S, ch.S(0.25), 1e-15);
    EXPECT_THROW(build_chart(EllipsePose{0.3}, 2), Error);
    EXPECT_THROW(build_chart(EllipsePose{0.95}, 3), Error);
}

TEST(Chart, EdgeLengthsUniform)
{
    const EllipsePose E{0.2};
    const Boundary omega(E);
    for (int q : {5, 20, 50}) {
        const AAChart ch = build_chart(E, q);
        double lo = 1e9, hi = 0.0;
        for (int k = 0; k < q; ++k) {
            const double l = norm(omega.position(ch.t_of_theta(double(k + 1) / q)) -
                                  omega.position(ch.t_of_theta(double(k) / q)));
            lo = std::min(lo, l * q);
            hi = std::max(hi, l * q);
        }
        EXPECT_LT(std::max(hi, 1.0 / lo), 3.0);
    }
}

}  // namespace
