// The oracles are checked against values computed once and frozen here, so a change in
// an oracle cannot silently move the reference the library is tested against.
#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

TEST(Oracle, CompleteEllipticIntegrals)
{
    EXPECT_NEAR(oracle::complete_E(0.0), oracle::pi / 2, 1e-15);
    EXPECT_NEAR(oracle::complete_E(0.5), 1.4674622093394272, 1e-14);
    EXPECT_NEAR(oracle::complete_K(0.5), 1.6857503548125961, 1e-14);
    EXPECT_NEAR(oracle::complete_K(0.0), oracle::pi / 2, 1e-15);
}

TEST(Oracle, UnitPerimeterAxes)
{
    const auto [a, b] = oracle::unit_perimeter_axes(0.5);
    EXPECT_NEAR(a, 0.17036213839710163, 1e-12);
    EXPECT_NEAR(oracle::ellipse_perimeter(a, b), 1.0, 1e-13);
    EXPECT_NEAR(a, 1.0 / (4.0 * oracle::complete_E(0.5)), 1e-12);
}

TEST(Oracle, EllipseStepOnCircle)
{
    const double r = 1.0 / (2 * oracle::pi);
    const auto [t1, phi1] = oracle::ellipse_step(r, r, 0.3, 0.7);
    EXPECT_NEAR(t1, 0.3 + 1.4, 1e-13);
    EXPECT_NEAR(phi1, 0.7, 1e-13);
}

TEST(Oracle, FiniteDifferenceRadius)
{
    const double r = 0.25;
    auto circle = [r](double u) { return oracle::Point{r * std::cos(u), r * std::sin(u)}; };
    EXPECT_NEAR(oracle::fd_radius(circle, 0.4, 1e-3), r, 1e-9);
}

}  // namespace
