#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "caustica/error.hpp"
#include "caustica/modes.hpp"
#include "caustica/variational.hpp"

using namespace caustica;
using numerics::pi;
using numerics::two_pi;

namespace {

PerturbationSeries series_of(const std::vector<double>& samples, int degree = 96)
{
    return PerturbationSeries::from_series(numerics::TrigSeries::fit(samples, degree, 1.0));
}

double spread(const std::vector<double>& v)
{
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

TEST(MaxPolygon, CircleTriangle)
{
    const Boundary circle(EllipsePose{0.0});
    const InscribedPolygon p = max_perimeter_polygon(circle, 3, 0.0);
    ASSERT_EQ(p.s.size(), 3u);
    EXPECT_NEAR(p.s[0], 0.0, 1e-15);
    EXPECT_NEAR(p.s[1], 1.0 / 3, 1e-10);
    EXPECT_NEAR(p.s[2], 2.0 / 3, 1e-10);
    EXPECT_NEAR(p.perimeter, 0.82699334313268807, 1e-12);  // frozen 3 sin(pi/3) / pi
    EXPECT_LT(p.max_movable_residual(), 1e-10);
}

TEST(MaxPolygon, CirclePerimeterIsPrefactor)
{
    const Boundary circle(EllipsePose{0.0});
    for (int q = 3; q <= 12; ++q)
        for (double s0 : {0.0, 0.37}) {
            const InscribedPolygon p = max_perimeter_polygon(circle, q, s0);
            EXPECT_NEAR(p.perimeter, q * std::sin(pi / q) / pi, 1e-10);
            EXPECT_NEAR(p.perimeter, mode_prefactor(q), 1e-10);
            EXPECT_NEAR(p.s[0], s0, 1e-15);
        }
}

TEST(MaxPolygon, EllipsePerimeterIndependentOfStart)
{
    const Boundary omega(EllipsePose{0.25});
    std::vector<double> L;
    for (int i = 0; i < 64; ++i) {
        const InscribedPolygon p = max_perimeter_polygon(omega, 5, i / 64.0);
        L.push_back(p.perimeter);
        EXPECT_LT(p.max_movable_residual(), 1e-10);
        EXPECT_LT(p.closure_residual(), 1e-9);
        for (int k = 1; k < 5; ++k) EXPECT_GT(p.t[k], p.t[k - 1]);
        EXPECT_LT(p.t[4] - p.t[0], two_pi);
    }
    EXPECT_LT(spread(L), 1e-9);
}

TEST(MaxPolygon, PerimeterInvariances)
{
    const Boundary omega(BoundarySpec{EllipsePose{0.3}, PerturbationSeries::harmonic(3, false, 2e-4)});
    const InscribedPolygon p = max_perimeter_polygon(omega, 6, 0.2);
    EXPECT_NEAR(polygon_perimeter(omega, p.t), p.perimeter, 1e-14);
    std::vector<double> rotated(p.t.begin() + 2, p.t.end());
    for (int k = 0; k < 2; ++k) rotated.push_back(p.t[k] + two_pi);
    EXPECT_NEAR(polygon_perimeter(omega, rotated), p.perimeter, 1e-14);
    double reversed = 0.0;  // traversed backwards
    for (int k = 6; k > 0; --k) reversed += norm(omega.position(p.t[k - 1]) - omega.position(p.t[k % 6]));
    EXPECT_NEAR(reversed, p.perimeter, 1e-14);
    const auto res = reflection_residuals(omega, p.t);
    for (int k = 1; k < 6; ++k) EXPECT_LT(std::abs(res[k]), 1e-10);
}

TEST(MaxPolygon, EdgeSpreadBoundedOnEllipses)
{
    const Boundary omega(EllipsePose{0.3});
    double worst = 0.0;
    for (int q : {4, 8, 16}) {
        const InscribedPolygon p = max_perimeter_polygon(omega, q, 0.0);
        std::vector<double> chords;
        for (int k = 0; k < q; ++k)
            chords.push_back(norm(omega.position(p.t[(k + 1) % q]) - omega.position(p.t[k])));
        double mean = 0.0;
        for (double c : chords) mean += c / q;
        for (double c : chords) worst = std::max(worst, std::abs(c - mean) * q);
    }
    EXPECT_LT(worst, 1.0);
}

TEST(MaxPolygon, RejectsBadInput)
{
    const Boundary omega(EllipsePose{0.2});
    EXPECT_THROW(max_perimeter_polygon(omega, 2, 0.0), Error);
    EXPECT_THROW(max_perimeter_polygon_t(omega, 3, 0.0, std::vector<double>{0.0, 3.0, 1.0}), Error);
}

TEST(PerimeterFunctions, UnperturbedAgree)
{
    const EllipsePose E{0.2};
    const auto pf = perimeter_functions(E, Boundary(E), 4, default_theta_grid(16));
    ASSERT_EQ(pf.theta.size(), 16u);
    for (std::size_t i = 0; i < pf.theta.size(); ++i) EXPECT_NEAR(pf.L1[i], pf.L0[i], 1e-10);
    EXPECT_LT(spread(pf.L0), 1e-10);
}

TEST(PerimeterFunctions, ConcentricCircle)
{
    const double c = 1e-4;
    const EllipsePose E{0.0};
    const auto pf = perimeter_functions(E, Boundary(BoundarySpec{E, PerturbationSeries({c})}), 5, default_theta_grid(8));
    for (std::size_t i = 0; i < pf.theta.size(); ++i)
        EXPECT_NEAR(pf.L1[i] - pf.L0[i], two_pi * c * mode_prefactor(5), 1e-12);
}

TEST(PerimeterFunctions, NonIntegrableDirectionVaries)
{
    const double eps = 1e-4;
    const EllipsePose E{0.1};
    const auto pf = perimeter_functions(E, Boundary(BoundarySpec{E, PerturbationSeries::harmonic(3, false, eps)}), 3,
                                        default_theta_grid(32));
    // first order: the spread of D, 4 q sin(pi/q) eps on the circle
    EXPECT_NEAR(spread(pf.L1) / (4 * 3 * std::sin(pi / 3) * eps), 1.0, 0.1);
}

TEST(DeformationFunction, CircleConstant)
{
    const double c = 2e-3;
    const AAChart ch = build_chart(EllipsePose{0.0}, 6);
    for (double th : {0.0, 0.3, 0.71})
        EXPECT_NEAR(deformation_function(PerturbationSeries({c}), ch, th), 2 * c * 6 * std::sin(pi / 6), 1e-14);
}

TEST(DeformationFunction, Linearity)
{
    const AAChart ch = build_chart(EllipsePose{0.3}, 5);
    const PerturbationSeries n({1e-3, 0.0, 2e-3}, {0.0, 0.0, 0.0, -1e-3});
    const auto th = default_theta_grid(16);
    const auto d1 = deformation_function(n, ch, th);
    const auto d2 = deformation_function(n.scaled(2.0), ch, th);
    for (std::size_t i = 0; i < th.size(); ++i) EXPECT_NEAR(d2[i], 2.0 * d1[i], 1e-17);
}

TEST(DeformationFunction, HomothetyModeIsConstant)
{
    const EllipsePose E{0.1};
    const auto base = base_modes(E);
    const AAChart ch = build_chart(E, 4);
    const auto D = deformation_function(series_of(base[0].values), ch, default_theta_grid(32));
    const double size = *std::max_element(D.begin(), D.end());
    EXPECT_GT(size, 0.0);
    EXPECT_LT(spread(D), 1e-6 * size);
}

TEST(PerimeterDefect, ZeroDirection)
{
    const auto sweep =
        perimeter_defect(EllipsePose{0.1}, PerturbationSeries({0.0}), 3, {1e-4, 1e-3}, default_theta_grid(8));
    for (const auto& r : sweep.reports) EXPECT_EQ(r.defect, 0.0);
    EXPECT_TRUE(std::isnan(sweep.slope));
}

TEST(PerimeterDefect, QuadraticSlope)
{
    const auto sweep = perimeter_defect(EllipsePose{0.1}, PerturbationSeries::harmonic(5, false, 1.0), 3,
                                        {1e-3, 3e-4, 1e-4, 3e-5}, default_theta_grid(32));
    EXPECT_NEAR(sweep.slope, 2.0, 0.15);
    double lo = 1e300, hi = 0.0;
    for (const auto& r : sweep.reports) {
        EXPECT_GE(r.defect, 0.0);
        EXPECT_EQ(r.theta.size(), r.D.size());
        EXPECT_EQ(r.L0.size(), r.L1.size());
        EXPECT_NEAR(r.epsilon, r.scale * PerturbationSeries::harmonic(5, false, 1.0).c1_norm(), 1e-15);
        const double ratio = r.defect / (r.epsilon * r.epsilon);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    EXPECT_GT(lo, 1e-3 * hi);
}

TEST(PerimeterDefect, TranslationLikeOnCircleBounded)
{
    const auto sweep = perimeter_defect(EllipsePose{0.0}, PerturbationSeries::harmonic(1, false, 1.0), 4,
                                        {1e-3, 3e-4, 1e-4, 3e-5}, default_theta_grid(16));
    double hi = 0.0;
    for (const auto& r : sweep.reports) hi = std::max(hi, r.defect / (r.epsilon * r.epsilon));
    EXPECT_LT(hi, 10.0);
}

TEST(PseudoOrbit, UnperturbedIsExact)
{
    const EllipsePose E{0.2};
    const Boundary omega(E);
    const AAChart ch = build_chart(E, 5);
    const auto poly = max_perimeter_polygon_t(omega, 5, ch.t_of_theta(0.3));
    const PseudoOrbit po = pseudo_orbit_diagnostics(ch, omega, poly, 0.3);
    ASSERT_EQ(po.vertices.size(), 5u);
    for (const auto& v : po.vertices) {
        EXPECT_LT(v.v, 1e-14);
        EXPECT_NEAR(v.phi_plus, v.phi_minus, 1e-9);
        EXPECT_NEAR(v.I_plus, po.I_star, 1e-9);
    }
}

TEST(PseudoOrbit, TranslationModeDeviatedAngles)
{
    const double eps = 1e-4;
    const EllipsePose E{0.1};
    const auto base = base_modes(E);
    const AAChart ch = build_chart(E, 5);
    const PerturbationSeries n = series_of(base[1].values).scaled(eps);
    const Boundary omega(BoundarySpec{E, n});
    const auto poly = max_perimeter_polygon_t(omega, 5, ch.t_of_theta(0.0));
    const PseudoOrbit po = pseudo_orbit_diagnostics(ch, omega, poly, 0.0);
    const double c1 = n.c1_norm();
    for (std::size_t k = 0; k < po.vertices.size(); ++k) {
        const auto& v = po.vertices[k];
        EXPECT_LE(std::abs(v.phi_plus - v.phi_minus), 5.0 * po.xi * 5 * c1);
        const double dI = std::max(std::abs(v.I_plus - po.I_star), std::abs(v.I_minus - po.I_star));
        EXPECT_LE(dI, 50.0 * (k + 1) * c1);
    }
    EXPECT_GT(po.xi, 1.0);
    EXPECT_LT(po.xi, 3.0);
}

TEST(IntegrabilityScan, ExactEllipse)
{
    const Boundary omega(EllipsePose{0.3});
    for (int q = 3; q <= 10; ++q) {
        const auto s = integrability_scan(omega, q, default_theta_grid(16));
        EXPECT_LE(s.perimeter_variation, 1e-9) << q;
        EXPECT_LE(s.closure_residual, 1e-9) << q;
    }
}

TEST(IntegrabilityScan, RamirezRosSeparation)
{
    const double eps = 1e-3;
    const Boundary omega(BoundarySpec{EllipsePose{0.0}, PerturbationSeries::harmonic(3, false, eps)});
    EXPECT_GT(integrability_scan(omega, 3, default_theta_grid(32)).perimeter_variation, 1e-5);
    EXPECT_LT(integrability_scan(omega, 4, default_theta_grid(32)).perimeter_variation, 1e-2 * eps);
}

}  // namespace
