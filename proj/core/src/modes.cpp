#include "caustica/modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <boost/math/special_functions/trigamma.hpp>

#include "caustica/action_angle.hpp"
#include "caustica/coverage.hpp"
#include "caustica/elliptic.hpp"
#include "caustica/error.hpp"

namespace caustica {

using numerics::pi;
using numerics::two_pi;

namespace {

const double kSqrt2 = std::sqrt(2.0);

int harmonic_of(int j) { return (j + 1) / 2; }

}  // namespace

ModeGrid::ModeGrid(const EllipsePose& pose, int nodes) : pose_(pose)
{
    pose.validate();
    CAUSTICA_REQUIRE(nodes >= 16, ErrorKind::invalid_input, "mode grid needs at least 16 nodes");
    const Boundary b(pose);
    const LazutkinChart& ch = b.chart();
    x_ = numerics::uniform_grid(nodes);
    t_.resize(nodes);
    mu_.resize(nodes);
    dxdt_.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        t_[i] = ch.t_of_x(x_[i]);
        mu_[i] = ch.mu_of_t(t_[i]);
        dxdt_[i] = ch.x_of_t(Jet::variable(t_[i])).d1;
    }
}

std::vector<double> ModeTable::basis_values() const
{
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = weight * values[i];
    return out;
}

double mode_prefactor(int q)
{
    CAUSTICA_REQUIRE(q > 0, ErrorKind::invalid_input, "mode prefactor needs q > 0");
    return q * std::sin(pi / q) / pi;
}

double smallness_threshold() { return 1.0 / std::sqrt(1.0 + pi * pi / 3.0); }

std::pair<ModeTable, ModeTable> deformed_mode(const ModeGrid& grid, int q)
{
    coverage::mark(coverage::Op::deformed_mode);
    CAUSTICA_REQUIRE(q > 2, ErrorKind::invalid_input, "dynamical modes need q > 2");
    const AAChart chart = build_chart(grid.pose(), q);
    const double w = mode_prefactor(q);
    const double sqz = std::sqrt(chart.caustic().Z);
    const int M = grid.nodes();
    ModeTable c{2 * q, q, false, ModeProvenance::dynamical, kSqrt2, std::vector<double>(M)};
    ModeTable s{2 * q - 1, q, true, ModeProvenance::dynamical, kSqrt2, std::vector<double>(M)};
    const Boundary& b = chart.boundary();
    for (int i = 0; i < M; ++i) {
        const double t = grid.t()[i];
        const double eta = sqz / b.jet(t).speed();
        const double dth_dx = chart.dtheta_dt(t) / grid.dx_dt()[i];
        const double pref = q * eta / (w * grid.mu()[i]) * dth_dx;
        const double arg = two_pi * q * chart.theta_of_t(t);
        c.values[i] = pref * std::cos(arg);
        s.values[i] = pref * std::sin(arg);
    }
    return {std::move(c), std::move(s)};
}

std::pair<ModeTable, ModeTable> deformed_mode(const EllipsePose& pose, int q, int nodes)
{
    return deformed_mode(ModeGrid(pose, nodes), q);
}

std::array<ModeTable, 5> base_modes(const ModeGrid& grid)
{
    coverage::mark(coverage::Op::base_modes);
    const int M = grid.nodes();
    const double a = grid.pose().semi_major(), b = grid.pose().semi_minor();
    const double unit = two_pi / grid.pose().scale;  // makes c0 and c2 dimensionless
    std::array<ModeTable, 5> m{
        ModeTable{0, 0, false, ModeProvenance::base, unit, std::vector<double>(M)},
        ModeTable{2, 1, false, ModeProvenance::base, kSqrt2, std::vector<double>(M)},
        ModeTable{1, 1, true, ModeProvenance::base, kSqrt2, std::vector<double>(M)},
        ModeTable{4, 2, false, ModeProvenance::base, kSqrt2 * unit, std::vector<double>(M)},
        ModeTable{3, 2, true, ModeProvenance::base, kSqrt2 * unit, std::vector<double>(M)},
    };
    for (int i = 0; i < M; ++i) {
        const double t = grid.t()[i];
        const double X = a * std::cos(t), Y = b * std::sin(t);
        const double r = std::hypot(X, Y);
        const double polar = std::atan2(Y, X);
        const double normal = std::atan2(a * std::sin(t), b * std::cos(t));
        m[0].values[i] = r * std::cos(normal - polar);
        m[1].values[i] = std::cos(normal);
        m[2].values[i] = std::sin(normal);
        m[3].values[i] = r * std::cos(normal + polar);
        m[4].values[i] = r * std::sin(normal + polar);
    }
    return m;
}

std::array<ModeTable, 5> base_modes(const EllipsePose& pose, int nodes)
{
    return base_modes(ModeGrid(pose, nodes));
}

ModeTable basis_mode(const ModeGrid& grid, int j)
{
    CAUSTICA_REQUIRE(j >= 0, ErrorKind::invalid_input, "mode index must be non-negative");
    if (j <= 4) {
        auto m = base_modes(grid);
        for (auto& t : m)
            if (t.index == j) return t;
    }
    auto [c, s] = deformed_mode(grid, harmonic_of(j));
    return j % 2 == 0 ? c : s;
}

std::vector<double> fourier_mode(int j, int nodes)
{
    CAUSTICA_REQUIRE(j >= 0 && nodes > 0, ErrorKind::invalid_input, "bad Fourier mode request");
    std::vector<double> v(nodes, 1.0);
    if (j == 0) return v;
    const int q = harmonic_of(j);
    for (int i = 0; i < nodes; ++i) {
        // reduce q*i mod nodes first so the argument stays small
        const double arg = two_pi * static_cast<double>((static_cast<long long>(q) * i) % nodes) / nodes;
        v[i] = kSqrt2 * (j % 2 == 0 ? std::cos(arg) : std::sin(arg));
    }
    return v;
}

std::vector<std::vector<double>> basis_modes(const ModeGrid& grid, int count)
{
    CAUSTICA_REQUIRE(count >= 0, ErrorKind::invalid_input, "mode count must be non-negative");
    std::vector<std::vector<double>> out(count);
    if (count == 0) return out;
    const auto base = base_modes(grid);
    for (const auto& m : base)
        if (m.index < count) out[m.index] = m.basis_values();
    const int q_max = harmonic_of(count - 1);
    if (q_max >= 3) {
        numerics::parallel_for(q_max - 2, [&](int i) {
            const int q = i + 3;
            auto [c, s] = deformed_mode(grid, q);
            if (2 * q - 1 < count) out[2 * q - 1] = s.basis_values();
            if (2 * q < count) out[2 * q] = c.basis_values();
        });
    }
    return out;
}

double weighted_inner_product(std::span<const double> f, std::span<const double> g, std::span<const double> w)
{
    coverage::mark(coverage::Op::weighted_inner_product);
    CAUSTICA_REQUIRE(!f.empty() && f.size() == g.size() && f.size() == w.size(), ErrorKind::invalid_input,
                     "inner product operands are not on a common grid");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i] * w[i];
    return acc / static_cast<double>(f.size());
}

double weighted_inner_product(const ModeTable& f, const ModeTable& g, std::span<const double> mu)
{
    return weighted_inner_product(f.values, g.values, mu);
}

double weighted_inner_product(const PerturbationSeries& f, const ModeTable& g, const ModeGrid& grid)
{
    return weighted_inner_product(sample_on(f, grid), g.values, grid.mu());
}

std::vector<double> sample_on(const PerturbationSeries& n, const ModeGrid& grid)
{
    std::vector<double> v(grid.nodes());
    for (int i = 0; i < grid.nodes(); ++i) v[i] = n(grid.x()[i]);
    return v;
}

// ---------------------------------------------------------------- coefficients

TildeCoefficients tilde_coefficients(std::span<const double> n, const ModeGrid& grid, int Q)
{
    coverage::mark(coverage::Op::tilde_coefficients);
    CAUSTICA_REQUIRE(Q >= 0, ErrorKind::invalid_input, "Q must be non-negative");
    CAUSTICA_REQUIRE(static_cast<int>(n.size()) == grid.nodes(), ErrorKind::invalid_input,
                     "samples are not on the mode grid");
    const auto modes = basis_modes(grid, Q + 1);
    TildeCoefficients r;
    r.values.resize(Q + 1);
    r.scaled.resize(Q + 1);
    for (int j = 0; j <= Q; ++j) {
        r.values[j] = weighted_inner_product(n, modes[j], grid.mu());
        r.scaled[j] = harmonic_of(j) * std::abs(r.values[j]);
        if (j >= 1) r.decay_constant = std::max(r.decay_constant, r.scaled[j]);
    }
    for (double v : n) r.l2_squared += v * v;
    r.l2_squared /= static_cast<double>(n.size());
    return r;
}

TildeCoefficients tilde_coefficients(const PerturbationSeries& n, const EllipsePose& pose, int Q, int nodes)
{
    const ModeGrid grid(pose, nodes);
    return tilde_coefficients(sample_on(n, grid), grid, Q);
}

namespace {

double c_star_of(const std::vector<std::vector<double>>& modes, int nodes)
{
    double c = 0.0;
    for (int j = 1; j < static_cast<int>(modes.size()); ++j) {
        const auto f = fourier_mode(j, nodes);
        double dev = 0.0;
        for (int i = 0; i < nodes; ++i) dev = std::max(dev, std::abs(modes[j][i] - f[i]));
        c = std::max(c, harmonic_of(j) * dev / kSqrt2);
    }
    return c;
}

}  // namespace

double empirical_c_star(const ModeGrid& grid, int q_max)
{
    CAUSTICA_REQUIRE(q_max >= 1, ErrorKind::invalid_input, "q_max must be positive");
    return c_star_of(basis_modes(grid, 2 * q_max + 1), grid.nodes());
}

GramReport operator_report(const EllipsePose& pose, int N, int nodes)
{
    coverage::mark(coverage::Op::operator_report);
    CAUSTICA_REQUIRE(N >= 5 && N <= 128, ErrorKind::invalid_input, "operator truncation must lie in [5, 128]");
    const ModeGrid grid(pose, nodes);
    const auto modes = basis_modes(grid, N);
    std::vector<std::vector<double>> fourier(N);
    for (int j = 0; j < N; ++j) fourier[j] = fourier_mode(j, nodes);
    const std::vector<double> ones(nodes, 1.0);

    GramReport r;
    r.e = pose.e;
    r.N = N;
    r.matrix.resize(static_cast<std::size_t>(N) * N);
    r.weighted.resize(r.matrix.size());
    numerics::parallel_for(N, [&](int k) {
        for (int j = 0; j < N; ++j) {
            r.matrix[static_cast<std::size_t>(j) * N + k] = weighted_inner_product(fourier[j], modes[k], ones);
            r.weighted[static_cast<std::size_t>(j) * N + k] = weighted_inner_product(fourier[j], modes[k], grid.mu());
        }
    });
    Eigen::MatrixXd L = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        r.matrix.data(), N, N);
    Eigen::MatrixXd Lmu = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        r.weighted.data(), N, N);
    L -= Eigen::MatrixXd::Identity(N, N);
    r.gap = Eigen::JacobiSVD<Eigen::MatrixXd>(L).singularValues()(0);
    r.weighted_sigma_min = Eigen::JacobiSVD<Eigen::MatrixXd>(Lmu).singularValues()(N - 1);
    r.parseval_constant = 1.0 / (r.weighted_sigma_min * r.weighted_sigma_min);

    r.c_star = c_star_of(modes, nodes);
    // columns beyond N deviate by at most sqrt2 C*/q in L2, two columns per harmonic
    const int q_last = harmonic_of(N - 1);
    r.tail = 2.0 * r.c_star * std::sqrt(boost::math::trigamma(static_cast<double>(q_last + 1)));
    r.rhs = r.c_star * std::sqrt(1.0 + pi * pi / 3.0);
    r.below_rhs = r.gap < r.rhs;
    r.smallness = r.c_star < smallness_threshold();
    return r;
}

// ---------------------------------------------------------------- projection and fit

double EllipseCoeffs::norm() const { return std::sqrt(a0 * a0 + a1 * a1 + b1 * b1 + a2 * a2 + b2 * b2); }

Projection five_mode_projection(std::span<const double> n, const ModeGrid& grid)
{
    coverage::mark(coverage::Op::five_mode_projection);
    CAUSTICA_REQUIRE(static_cast<int>(n.size()) == grid.nodes(), ErrorKind::invalid_input,
                     "samples are not on the mode grid");
    const auto base = base_modes(grid);
    std::array<std::vector<double>, 5> e;
    std::array<double, 5> weight{};
    for (const auto& m : base) {
        e[m.index] = m.basis_values();
        weight[m.index] = m.weight;
    }
    Eigen::Matrix<double, 5, 5> G;
    Eigen::Matrix<double, 5, 1> beta;
    for (int i = 0; i < 5; ++i) {
        beta(i) = weighted_inner_product(n, e[i], grid.mu());
        for (int j = i; j < 5; ++j) G(i, j) = G(j, i) = weighted_inner_product(e[i], e[j], grid.mu());
    }
    Projection p;
    const auto sv = Eigen::JacobiSVD<Eigen::Matrix<double, 5, 5>>(G).singularValues();
    p.condition = sv(0) / sv(4);
    CAUSTICA_REQUIRE(p.condition <= 1e8, ErrorKind::conditioning, "five-mode Gram matrix is ill-conditioned");
    const Eigen::Matrix<double, 5, 1> a = G.ldlt().solve(beta);
    for (int i = 0; i < 5; ++i) p.basis_coeffs[i] = a(i);
    p.coeffs.a0 = a(0) * weight[0];
    p.coeffs.b1 = a(1) * weight[1];
    p.coeffs.a1 = a(2) * weight[2];
    p.coeffs.b2 = a(3) * weight[3];
    p.coeffs.a2 = a(4) * weight[4];

    const int M = grid.nodes();
    p.n5.assign(M, 0.0);
    p.n_perp.resize(M);
    for (int i = 0; i < M; ++i) {
        for (int k = 0; k < 5; ++k) p.n5[i] += a(k) * e[k][i];
        p.n_perp[i] = n[i] - p.n5[i];
    }
    for (int k = 0; k < 5; ++k)
        p.orthogonality = std::max(p.orthogonality, std::abs(weighted_inner_product(p.n_perp, e[k], grid.mu())));
    const double size = std::max(1.0, numerics::sup_abs(n));
    CAUSTICA_REQUIRE(p.orthogonality < 1e-10 * size, ErrorKind::conditioning,
                     "projected remainder is not orthogonal to the base modes");
    return p;
}

Projection five_mode_projection(const PerturbationSeries& n, const EllipsePose& pose, int nodes)
{
    const ModeGrid grid(pose, nodes);
    return five_mode_projection(sample_on(n, grid), grid);
}

EllipsePose ellipse_from_coeffs(const EllipsePose& pose, const EllipseCoeffs& c)
{
    coverage::mark(coverage::Op::ellipse_from_coeffs);
    pose.validate();
    const auto arr = c.as_array();
    CAUSTICA_REQUIRE(std::all_of(arr.begin(), arr.end(), [](double v) { return std::isfinite(v); }),
                     ErrorKind::invalid_input, "ellipse coefficients must be finite");
    if (std::all_of(arr.begin(), arr.end(), [](double v) { return v == 0.0; })) return pose;

    const double a = pose.semi_major(), b = pose.semi_minor();
    const double lam = std::hypot(c.a2, c.b2);
    Eigen::Matrix2d A;
    A << c.a2, c.b2, c.b2, -c.a2;
    const double shc = lam > 0.0 ? std::sinh(lam) / lam : 1.0;
    const Eigen::Matrix2d L = std::cosh(lam) * Eigen::Matrix2d::Identity() + shc * A;
    const Eigen::Matrix2d Linv = std::cosh(lam) * Eigen::Matrix2d::Identity() - shc * A;
    const Eigen::Vector2d shift = L * Eigen::Vector2d(c.a1, c.b1);

    // image of x^T Q x = 1 under x -> exp(a0) L x + shift
    const Eigen::Matrix2d Q = Eigen::Vector2d(1.0 / (a * a), 1.0 / (b * b)).asDiagonal();
    const Eigen::Matrix2d Qn = std::exp(-2.0 * c.a0) * (Linv * Q * Linv);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(0.5 * (Qn + Qn.transpose()));
    const double l1 = eig.eigenvalues()(0), l2 = eig.eigenvalues()(1);
    CAUSTICA_REQUIRE(l1 > 0.0, ErrorKind::invalid_input, "transformed conic is not an ellipse");
    const double a_new = 1.0 / std::sqrt(l1);
    const double rel = (l2 - l1) / l2;
    EllipsePose out;
    out.e = rel > 4.0 * std::numeric_limits<double>::epsilon() ? std::sqrt(rel) : 0.0;
    double axis = 0.0;
    if (out.e > 0.0) {
        const Eigen::Vector2d v = eig.eigenvectors().col(0);
        axis = std::atan2(v(1), v(0));
        // keep the parametrization origin on the side of the old one
        if (axis > 0.5 * pi) axis -= pi;
        if (axis < -0.5 * pi) axis += pi;
    }
    out.tilt = pose.tilt + axis;
    out.center = pose.to_world({shift(0), shift(1)});
    out.scale = 4.0 * a_new * elliptic_integral(EllipticKind::E, out.e);
    return out;
}

namespace {

Projection project_about(const PerturbationSeries& n, const EllipsePose& pose, int nodes)
{
    const ModeGrid grid(pose, nodes);
    return five_mode_projection(sample_on(n, grid), grid);
}

}  // namespace

FitResult fit_ellipse(const Boundary& omega, const EllipsePose& start, const FitOptions& opt)
{
    coverage::mark(coverage::Op::fit_ellipse);
    CAUSTICA_REQUIRE(opt.max_iters >= 1, ErrorKind::invalid_input, "fit needs at least one iteration");
    FitResult r;
    EllipsePose E = start;
    PerturbationSeries n;
    Projection proj;
    double previous = std::numeric_limits<double>::infinity();
    int growth = 0;
    for (int it = 0;; ++it) {
        n = reexpress(omega, E, opt.reexpress);
        proj = project_about(n, E, opt.grid);
        const double c1 = n.c1_norm();
        r.trace.push_back({it, proj.coeffs.norm(), n.c0_norm(), c1});
        growth = c1 > previous ? growth + 1 : 0;
        previous = c1;
        if (growth >= 2) {
            r.diverged = true;
            r.message = "residual grew on two consecutive iterations";
            break;
        }
        if (proj.coeffs.norm() < opt.tolerance) {
            r.converged = true;
            break;
        }
        if (it + 1 >= opt.max_iters) {
            r.message = "iteration limit reached";
            break;
        }
        E = ellipse_from_coeffs(E, proj.coeffs);
        const auto step = proj.coeffs.as_array();
        auto total = r.coefficients.as_array();
        for (int k = 0; k < 5; ++k) total[k] += step[k];
        r.coefficients = EllipseCoeffs::from_array(total);
    }

    if (opt.polish && !r.diverged) {
        const EllipsePose anchor = E;
        const auto objective = [&](const std::vector<double>& d) {
            try {
                const EllipsePose trial = ellipse_from_coeffs(anchor, {d[0], d[1], d[2], d[3], d[4]});
                return reexpress(omega, trial, opt.reexpress).c1_norm();
            } catch (const Error&) {
                return std::numeric_limits<double>::infinity();
            }
        };
        const double step = std::max(1e-3 * n.c0_norm() / anchor.scale, 1e-9);
        const auto nm = numerics::nelder_mead(objective, std::vector<double>(5, 0.0), step, 1e-16, opt.polish_evals);
        if (nm.value < n.c1_norm()) {
            const EllipseCoeffs d{nm.x[0], nm.x[1], nm.x[2], nm.x[3], nm.x[4]};
            E = ellipse_from_coeffs(anchor, d);
            n = reexpress(omega, E, opt.reexpress);
            proj = project_about(n, E, opt.grid);
            auto total = r.coefficients.as_array();
            const auto da = d.as_array();
            for (int k = 0; k < 5; ++k) total[k] += da[k];
            r.coefficients = EllipseCoeffs::from_array(total);
        }
    }

    r.pose = E;
    r.residual = n;
    r.residual_c0 = n.c0_norm();
    r.residual_c1 = n.c1_norm();
    r.orthogonality = proj.orthogonality;
    return r;
}

}  // namespace caustica
