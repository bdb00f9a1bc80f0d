#pragma once

#include <functional>
#include <span>
#include <vector>

#include "caustica/jet.hpp"

namespace caustica::numerics {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Real trigonometric polynomial on a circle of the given period:
///   f(u) = c[0] + sum_k c[k] cos(k w u) + s[k] sin(k w u),  w = 2 pi / period.
/// s[0] is unused and kept at zero so that c and s share indexing.
class TrigSeries {
public:
    TrigSeries() = default;
    TrigSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs, double period);

    /// Least-squares (equivalently: truncated DFT) fit of uniform periodic samples
    /// f(j * period / N), j = 0..N-1, keeping harmonics 0..degree. Requires degree < N/2.
    static TrigSeries fit(std::span<const double> samples, int degree, double period);

    int degree() const { return static_cast<int>(cos_.size()) - 1; }
    double period() const { return period_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }

    double operator()(double u) const;
    /// Value and first two derivatives with respect to u.
    Jet jet(double u) const;
    /// f(u(tau)) with derivatives propagated by the chain rule.
    Jet operator()(const Jet& u) const;

    /// Drops trailing harmonics whose amplitude is below tol (absolute).
    void trim(double tol);

    TrigSeries derivative() const;
    TrigSeries scaled(double factor) const;

private:
    std::vector<double> cos_{0.0};
    std::vector<double> sin_{0.0};
    double period_ = 1.0;
};

/// F(u) = integral_0^u f for a positive periodic f given by samples; represented
/// as mean * u + (periodic part). Spectrally accurate at every u, not just at nodes.
class PeriodicPrimitive {
public:
    PeriodicPrimitive() = default;

    /// Samples f adaptively: starts at n0 nodes and doubles until the Fourier tail
    /// drops below rel_tol * mean (or n_max is reached).
    static PeriodicPrimitive build(const std::function<double(double)>& f, double period,
                                   int n0 = 256, int n_max = 16384, double rel_tol = 1e-15);

    double period() const { return integrand_.period(); }
    double total() const { return mean_ * integrand_.period(); }
    double mean() const { return mean_; }
    int nodes() const { return nodes_; }

    double operator()(double u) const;
    Jet operator()(const Jet& u) const;
    double integrand(double u) const { return integrand_(u); }

    /// Solves F(u) = value for u (F is strictly increasing); value may lie outside [0, total).
    double inverse(double value) const;

    const TrigSeries& integrand_series() const { return integrand_; }

private:
    TrigSeries integrand_;
    TrigSeries periodic_part_;  // F(u) - mean * u, with periodic_part_(0) subtracted
    double offset_ = 0.0;
    double mean_ = 0.0;
    int nodes_ = 0;
};

/// Reduces u into [0, period).
double wrap(double u, double period);

/// Signed representative of u in [-period/2, period/2).
double wrap_centered(double u, double period);

std::vector<double> uniform_grid(int n, double period = 1.0);

std::vector<double> logspace(double first, double last, int count);

/// Safeguarded Newton on a bracket [lo, hi] where f(lo), f(hi) differ in sign.
/// df may be approximate; the iteration falls back to bisection when Newton leaves the bracket.
double solve_bracketed(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double lo, double hi,
                       double x_tol, int max_iter = 200);

/// Inverse of a lifted increasing function g with g(u + period) = g(u) + total and g(0) = 0.
double lifted_inverse(const std::function<double(double)>& g, const std::function<double(double)>& dg,
                      double period, double total, double value);

/// Max of |v| over a span.
double sup_abs(std::span<const double> v);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

/// Downhill simplex on R^n with an initial simplex of edge `step` around x0.
/// Stops when the simplex value spread drops below f_tol or after max_evals evaluations.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, double f_tol, int max_evals);

/// Cap on worker threads used by parallel_for; 0 means hardware concurrency.
void set_thread_limit(int threads);
int thread_limit();

/// Runs body(i) for i in [0, n) on up to thread_limit() threads. Rethrows the first exception.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace caustica::numerics
