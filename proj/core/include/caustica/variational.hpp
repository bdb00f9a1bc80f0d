#pragma once

#include <optional>
#include <vector>

#include "caustica/action_angle.hpp"
#include "caustica/geometry.hpp"

namespace caustica {

struct InscribedPolygon {
    int q = 0;
    std::vector<double> s;  // arc-length lifts, s[0] fixed
    std::vector<double> t;  // internal-parameter lifts, strictly increasing
    double perimeter = 0.0;
    /// Incidence minus reflection angle per vertex; entry 0 is the closure residual
    /// at the fixed vertex, the rest are zero at a converged maximum.
    std::vector<double> residuals;
    int iterations = 0;

    double max_movable_residual() const;
    double closure_residual() const { return residuals.empty() ? 0.0 : std::abs(residuals[0]); }
};

struct PolygonOptions {
    int max_steps = 200;
    int max_halvings = 60;
    double tolerance = 1e-12;
    /// Accepted when the line search stagnates at round-off.
    double stagnation_tolerance = 1e-10;
};

/// Maximal-perimeter inscribed q-gon with vertex 0 pinned at internal parameter t0.
/// `init` (q values, init[0] == t0) defaults to the base ellipse's chart orbit.
InscribedPolygon max_perimeter_polygon_t(const Boundary& omega, int q, double t0,
                                         const std::optional<std::vector<double>>& init = std::nullopt,
                                         const PolygonOptions& opt = {});

InscribedPolygon max_perimeter_polygon(const Boundary& omega, int q, double s0,
                                       const PolygonOptions& opt = {});

/// Incidence minus reflection angle at each vertex of a closed polygon on omega.
std::vector<double> reflection_residuals(const Boundary& omega, const std::vector<double>& t);

double polygon_perimeter(const Boundary& omega, const std::vector<double>& t);

std::vector<double> default_theta_grid(int nodes = 64);

struct PerimeterFunctions {
    int q = 0;
    std::vector<double> theta;
    std::vector<double> L0;
    std::vector<double> L1;
    std::vector<double> closure;  // closure residual of each L1 polygon
};

/// L0 from the chart orbit of `base`, L1 from the maximal polygon on omega pinned at
/// the tubular lift of the chart orbit's first vertex.
PerimeterFunctions perimeter_functions(const EllipsePose& base, const Boundary& omega, int q,
                                       const std::vector<double>& theta);
PerimeterFunctions perimeter_functions(const AAChart& chart, const Boundary& omega,
                                       const std::vector<double>& theta);

double deformation_function(const PerturbationSeries& n, const AAChart& chart, double theta);
std::vector<double> deformation_function(const PerturbationSeries& n, const AAChart& chart,
                                         const std::vector<double>& theta);

struct DefectReport {
    double e = 0.0;
    int q = 0;
    double scale = 0.0;    // multiplier of the direction v
    double epsilon = 0.0;  // C1 norm of the perturbation
    std::vector<double> theta;
    std::vector<double> L0;
    std::vector<double> L1;
    std::vector<double> D;
    double defect = 0.0;
};

struct DefectSweep {
    std::vector<DefectReport> reports;
    /// Log-log slope of defect against epsilon; NaN if any defect vanishes.
    double slope = 0.0;
};

DefectSweep perimeter_defect(const EllipsePose& base, const PerturbationSeries& v, int q,
                             const std::vector<double>& scales, const std::vector<double>& theta);

struct PseudoVertex {
    double v = 0.0;          // |P'_k - P_k|
    double alpha = 0.0;      // angle of P'_k - P_k with the positive tangent at P_k
    double theta_bar = 0.0;  // angle coordinate of the projection of P'_k onto the ellipse
    double phi_plus = 0.0;
    double phi_minus = 0.0;
    double I_plus = 0.0;
    double I_minus = 0.0;
};

struct PseudoOrbit {
    std::vector<PseudoVertex> vertices;
    double I_star = 0.0;
    /// Smallest Xi with every edge length in [1/(Xi q), Xi/q].
    double xi = 0.0;
};

/// `polygon` must be a converged maximal polygon on omega pinned at the lift of the
/// chart orbit vertex with angle theta.
PseudoOrbit pseudo_orbit_diagnostics(const AAChart& chart, const Boundary& omega,
                                     const InscribedPolygon& polygon, double theta);

struct IntegrabilityScan {
    double perimeter_variation = 0.0;
    double closure_residual = 0.0;
};

IntegrabilityScan integrability_scan(const Boundary& omega, int q, const std::vector<double>& theta);

}  // namespace caustica
