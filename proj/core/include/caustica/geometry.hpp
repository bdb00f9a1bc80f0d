#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "caustica/jet.hpp"
#include "caustica/numerics.hpp"
#include "caustica/vec2.hpp"

namespace caustica {

/// Ellipse of eccentricity e, perimeter `scale`, centered at `center` and with its
/// major axis at angle `tilt`. scale = 1 is the canonical perimeter-1 ellipse.
struct EllipsePose {
    double e = 0.0;
    Vec2 center{};
    double tilt = 0.0;
    double scale = 1.0;

    void validate() const;
    double semi_major() const;
    double semi_minor() const;
    double perimeter() const { return scale; }
    /// Minimal radius of curvature b^2/a (the reach used for tubular coordinates).
    double min_rho() const;

    Vec2 to_world(Vec2 local) const;
    Vec2 to_local(Vec2 world) const;
};

/// n(x) = a0 + sum_j a_j cos 2 pi j x + b_j sin 2 pi j x on the Lazutkin circle.
class PerturbationSeries {
public:
    PerturbationSeries() = default;
    /// cos: a0..aJ, sin: b1..bJ (the shorter list is zero-padded).
    PerturbationSeries(std::vector<double> cos, std::vector<double> sin = {}, int grid = 2048);
    static PerturbationSeries from_series(const numerics::TrigSeries& series, int grid = 2048);
    /// amplitude * cos(2 pi j x) (or sin when `sine`).
    static PerturbationSeries harmonic(int j, bool sine, double amplitude, int grid = 2048);

    int degree() const { return series_.degree(); }
    int grid() const { return grid_; }
    std::vector<double> cos_coeffs() const;
    /// b1..bJ.
    std::vector<double> sin_coeffs() const;
    const numerics::TrigSeries& series() const { return series_; }
    bool is_zero() const;

    double operator()(double x) const { return series_(x); }
    Jet operator()(const Jet& x) const { return series_(x); }
    double derivative(double x) const { return series_.jet(x).d1; }

    /// Grid suprema on `grid()` uniform samples.
    double c0_norm() const;
    double c1_norm() const;

    PerturbationSeries scaled(double factor) const;
    friend PerturbationSeries operator+(const PerturbationSeries& a, const PerturbationSeries& b);
    friend PerturbationSeries operator-(const PerturbationSeries& a, const PerturbationSeries& b);

private:
    numerics::TrigSeries series_;
    int grid_ = 2048;
};

struct BoundarySpec {
    EllipsePose base;
    std::optional<PerturbationSeries> perturbation;
};

struct CurveSample {
    double t = 0.0;
    double s = 0.0;
    double x = 0.0;
    Vec2 position{};
    Vec2 tangent{};
    Vec2 normal{};  // outward
    double rho = 0.0;
};

/// Position and first two derivatives with respect to the internal parameter t.
struct CurveJet {
    Vec2 p{};
    Vec2 d1{};
    Vec2 d2{};

    double speed() const { return norm(d1); }
    double rho() const;
    Vec2 tangent() const { return normalized(d1); }
    Vec2 outward_normal() const;
};

namespace detail {
class CurveModel;
}

/// Arc length and Lazutkin parameter of a closed convex curve as lifted functions of
/// the internal parameter t (period 2 pi), with inverses. Immutable; cheap to copy.
class LazutkinChart {
public:
    LazutkinChart() = default;

    double perimeter() const { return perimeter_; }
    /// Normalizing constant making x(perimeter) = 1.
    double C() const { return C_; }

    double s_of_t(double t) const;
    double x_of_t(double t) const;
    Jet x_of_t(const Jet& t) const;
    double t_of_s(double s) const;
    double t_of_x(double x) const;
    double x_of_s(double s) const { return x_of_t(t_of_s(s)); }
    double s_of_x(double x) const { return s_of_t(t_of_x(x)); }

    double rho_of_t(double t) const;
    double rho_of_x(double x) const { return rho_of_t(t_of_x(x)); }
    /// Lazutkin density 1 / (2 C rho^{1/3}).
    double mu_of_t(double t) const;
    double mu(double x) const { return mu_of_t(t_of_x(x)); }

    CurveSample sample(double t) const;

private:
    friend class Boundary;
    std::shared_ptr<const detail::CurveModel> curve_;
    bool analytic_ = false;
    // analytic ellipse data
    double a_ = 0.0, e_ = 0.0, K_ = 0.0, E_ = 0.0;
    // spectral data for perturbed curves
    numerics::PeriodicPrimitive arc_;
    numerics::PeriodicPrimitive laz_;
    double perimeter_ = 0.0;
    double C_ = 0.0;
};

/// A realized billiard table: an ellipse, optionally lifted along its outward
/// normal by a perturbation n written in the ellipse's Lazutkin parameter.
/// The internal parameter t is the base ellipse's angle parameter.
class Boundary {
public:
    Boundary() : Boundary(EllipsePose{}) {}
    explicit Boundary(const EllipsePose& pose);
    explicit Boundary(BoundarySpec spec);

    const BoundarySpec& spec() const { return spec_; }
    const EllipsePose& base() const { return spec_.base; }
    bool perturbed() const { return perturbed_; }
    bool is_ellipse() const { return !perturbed_; }

    const LazutkinChart& chart() const { return chart_; }
    const LazutkinChart& base_chart() const { return base_chart_; }

    double perimeter() const { return chart_.perimeter(); }
    Vec2 position(double t) const;
    CurveJet jet(double t) const;
    CurveSample sample(double t) const { return chart_.sample(t); }
    /// Minimal curvature radius over a dense grid of the realized curve.
    double min_rho() const { return min_rho_; }

private:
    BoundarySpec spec_;
    bool perturbed_ = false;
    std::shared_ptr<const detail::CurveModel> curve_;
    LazutkinChart chart_;
    LazutkinChart base_chart_;
    double min_rho_ = 0.0;
};

CurveSample ellipse_geometry(const EllipsePose& pose, double t);

const LazutkinChart& lazutkin_chart(const Boundary& omega);

/// Point of the lifted curve above the base ellipse's Lazutkin parameter x. The returned
/// sample's s and x fields are the realized curve's own arc length and Lazutkin parameter.
CurveSample boundary_point(const Boundary& omega, double x);

struct ReexpressOptions {
    int grid = 2048;
    int degree = -1;  // < 0: max(input degree, 32) + 8
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
};

struct ReexpressResult {
    PerturbationSeries n;
    std::vector<double> x_grid;
    std::vector<double> offsets;
    double fit_residual = 0.0;
};

/// Writes the realized curve of `omega` as a normal graph over `target`.
ReexpressResult reexpress_detailed(const Boundary& omega, const EllipsePose& target,
                                   const ReexpressOptions& opt = {});
PerturbationSeries reexpress(const Boundary& omega, const EllipsePose& target,
                             const ReexpressOptions& opt = {});

}  // namespace caustica
