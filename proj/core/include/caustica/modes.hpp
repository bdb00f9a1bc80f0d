#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "caustica/geometry.hpp"

namespace caustica {

/// Uniform Lazutkin grid x_i = i / M of an ellipse with the per-node data every mode needs.
class ModeGrid {
public:
    explicit ModeGrid(const EllipsePose& pose, int nodes = 2048);

    const EllipsePose& pose() const { return pose_; }
    int nodes() const { return static_cast<int>(x_.size()); }
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& t() const { return t_; }
    const std::vector<double>& mu() const { return mu_; }
    /// dx/dt of the ellipse's Lazutkin parameter at each node.
    const std::vector<double>& dx_dt() const { return dxdt_; }

private:
    EllipsePose pose_;
    std::vector<double> x_, t_, mu_, dxdt_;
};

enum class ModeProvenance { base, dynamical, fourier };

/// Samples of c_q or s_q on a ModeGrid. `weight` turns them into the basis element:
/// e_j = weight * values, with e_0 from c_0, e_{2q-1} from s_q and e_{2q} from c_q.
struct ModeTable {
    int index = 0;
    int q = 0;
    bool sine = false;
    ModeProvenance provenance = ModeProvenance::base;
    double weight = 1.0;
    std::vector<double> values;

    std::vector<double> basis_values() const;
};

/// w_q = q sin(pi/q) / pi, the perimeter of the regular q-gon inscribed in the unit-perimeter circle.
double mode_prefactor(int q);

/// 1 / sqrt(1 + pi^2/3): the bound C*(e) must stay below for the operator gap argument.
double smallness_threshold();

std::pair<ModeTable, ModeTable> deformed_mode(const ModeGrid& grid, int q);
std::pair<ModeTable, ModeTable> deformed_mode(const EllipsePose& pose, int q, int nodes = 2048);

/// (c0, c1, s1, c2, s2) in the ellipse's own frame.
std::array<ModeTable, 5> base_modes(const ModeGrid& grid);
std::array<ModeTable, 5> base_modes(const EllipsePose& pose, int nodes = 2048);

/// Basis element e_j (base modes for j <= 4, dynamical modes above).
ModeTable basis_mode(const ModeGrid& grid, int j);

/// e^F_j sampled on M uniform nodes: 1, sqrt2 sin 2 pi x, sqrt2 cos 2 pi x, sqrt2 sin 4 pi x, ...
std::vector<double> fourier_mode(int j, int nodes);

/// e_0 .. e_{count-1} on one grid; dynamical modes are built in parallel over q.
std::vector<std::vector<double>> basis_modes(const ModeGrid& grid, int count);

/// Trapezoid rule for integral_0^1 f g w dx on a uniform periodic grid.
double weighted_inner_product(std::span<const double> f, std::span<const double> g,
                              std::span<const double> w);
double weighted_inner_product(const ModeTable& f, const ModeTable& g, std::span<const double> mu);
double weighted_inner_product(const PerturbationSeries& f, const ModeTable& g, const ModeGrid& grid);

std::vector<double> sample_on(const PerturbationSeries& n, const ModeGrid& grid);

struct TildeCoefficients {
    std::vector<double> values;  // n~_j for j = 0..Q
    /// q_j |n~_j| with q_j = ceil(j/2): bounded when n is smooth.
    std::vector<double> scaled;
    double decay_constant = 0.0;  // max of `scaled` over j >= 1
    double l2_squared = 0.0;      // ||n||^2 in L2(dx)
};

TildeCoefficients tilde_coefficients(const PerturbationSeries& n, const EllipsePose& pose, int Q,
                                     int nodes = 2048);
TildeCoefficients tilde_coefficients(std::span<const double> n, const ModeGrid& grid, int Q);

struct GramReport {
    double e = 0.0;
    int N = 0;
    /// Row-major N x N, entry (j, k) = <e^F_j, e_k>.
    std::vector<double> matrix;
    /// Row-major N x N, entry (j, k) = <e^F_j, mu e_k>.
    std::vector<double> weighted;
    double gap = 0.0;   // ||L_N - Id||_2
    double tail = 0.0;  // bound on the columns beyond N from the 1/q decay
    double c_star = 0.0;
    double rhs = 0.0;   // c_star * sqrt(1 + pi^2/3)
    bool below_rhs = false;
    bool smallness = false;  // c_star < smallness_threshold()
    double weighted_sigma_min = 0.0;
    /// 1 / sigma_min(L_mu)^2: the constant in ||n||^2 <= C sum n~_q^2 on the truncation.
    double parseval_constant = 0.0;

    double at(int j, int k) const { return matrix[static_cast<std::size_t>(j) * N + k]; }
};

GramReport operator_report(const EllipsePose& pose, int N, int nodes = 2048);

/// Max over 1 <= q <= q_max of q sup|c_q - cos 2 pi q x| and likewise for s_q, using the
/// normalized modes (e_j / sqrt2) so base and dynamical modes compare alike.
double empirical_c_star(const ModeGrid& grid, int q_max);

struct EllipseCoeffs {
    double a0 = 0.0, a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;

    double norm() const;
    std::array<double, 5> as_array() const { return {a0, a1, b1, a2, b2}; }
    static EllipseCoeffs from_array(const std::array<double, 5>& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
};

struct Projection {
    std::array<double, 5> basis_coeffs{};  // weights of e_0 .. e_4
    EllipseCoeffs coeffs;                  // weights of c0, c1, s1, c2, s2
    std::vector<double> n5;
    std::vector<double> n_perp;
    double condition = 0.0;
    double orthogonality = 0.0;  // max_i |<n_perp, mu e_i>|
};

Projection five_mode_projection(std::span<const double> n, const ModeGrid& grid);
Projection five_mode_projection(const PerturbationSeries& n, const EllipsePose& pose, int nodes = 2048);

/// Homothety by exp(a0), then translation by (a1, b1), then the hyperbolic rotation
/// exp[[a2, b2], [b2, -a2]], all in the local frame of `pose`.
EllipsePose ellipse_from_coeffs(const EllipsePose& pose, const EllipseCoeffs& c);

struct FitOptions {
    int max_iters = 20;
    double tolerance = 1e-12;
    bool polish = false;
    int polish_evals = 300;
    int grid = 2048;
    ReexpressOptions reexpress{};
};

struct FitStep {
    int iteration = 0;
    double coeff_norm = 0.0;
    double residual_c0 = 0.0;
    double residual_c1 = 0.0;
};

struct FitResult {
    /// Sum of the per-step coefficients: the first-order total displacement from E0.
    EllipseCoeffs coefficients;
    EllipsePose pose;
    PerturbationSeries residual;
    double residual_c0 = 0.0;
    double residual_c1 = 0.0;
    /// max_i |<n, mu e_i>| of the residual against the fitted ellipse's base modes.
    double orthogonality = 0.0;
    std::vector<FitStep> trace;
    bool converged = false;
    bool diverged = false;
    std::string message;
};

FitResult fit_ellipse(const Boundary& omega, const EllipsePose& start, const FitOptions& opt = {});

}  // namespace caustica
