#include "caustica/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <thread>

#include <unsupported/Eigen/FFT>

#include "caustica/error.hpp"

namespace caustica::numerics {

TrigSeries::TrigSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs, double period)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)), period_(period)
{
    CAUSTICA_REQUIRE(period_ > 0.0, ErrorKind::invalid_input, "series period must be positive");
    if (cos_.empty()) cos_.push_back(0.0);
    const std::size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    sin_[0] = 0.0;
}

TrigSeries TrigSeries::fit(std::span<const double> samples, int degree, double period)
{
    const int n = static_cast<int>(samples.size());
    CAUSTICA_REQUIRE(n >= 1 && degree >= 0 && 2 * degree < n, ErrorKind::invalid_input,
                     "trigonometric fit needs more than 2*degree samples");
    Eigen::FFT<double> fft;
    std::vector<double> in(samples.begin(), samples.end());
    std::vector<std::complex<double>> out;
    fft.fwd(out, in);
    std::vector<double> c(degree + 1), s(degree + 1, 0.0);
    c[0] = out[0].real() / n;
    for (int k = 1; k <= degree; ++k) {
        c[k] = 2.0 * out[k].real() / n;
        s[k] = -2.0 * out[k].imag() / n;
    }
    return TrigSeries(std::move(c), std::move(s), period);
}

double TrigSeries::operator()(double u) const
{
    const double th = two_pi * u / period_;
    const double c1 = std::cos(th), s1 = std::sin(th);
    double ck = 1.0, sk = 0.0;
    double acc = cos_[0];
    for (std::size_t k = 1; k < cos_.size(); ++k) {
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
        acc += cos_[k] * ck + sin_[k] * sk;
    }
    return acc;
}

Jet TrigSeries::jet(double u) const
{
    const double w = two_pi / period_;
    const double th = w * u;
    const double c1 = std::cos(th), s1 = std::sin(th);
    double ck = 1.0, sk = 0.0;
    double f = cos_[0], f1 = 0.0, f2 = 0.0;
    for (std::size_t k = 1; k < cos_.size(); ++k) {
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
        const double kw = static_cast<double>(k) * w;
        const double even = cos_[k] * ck + sin_[k] * sk;
        f += even;
        f1 += kw * (sin_[k] * ck - cos_[k] * sk);
        f2 -= kw * kw * even;
    }
    return {f, f1, f2};
}

Jet TrigSeries::operator()(const Jet& u) const
{
    const Jet j = jet(u.v);
    return compose(u, j.v, j.d1, j.d2);
}

void TrigSeries::trim(double tol)
{
    std::size_t n = cos_.size();
    while (n > 1 && std::hypot(cos_[n - 1], sin_[n - 1]) < tol) --n;
    cos_.resize(n);
    sin_.resize(n);
}

TrigSeries TrigSeries::derivative() const
{
    const double w = two_pi / period_;
    std::vector<double> c(cos_.size(), 0.0), s(cos_.size(), 0.0);
    for (std::size_t k = 1; k < cos_.size(); ++k) {
        c[k] = static_cast<double>(k) * w * sin_[k];
        s[k] = -static_cast<double>(k) * w * cos_[k];
    }
    return TrigSeries(std::move(c), std::move(s), period_);
}

TrigSeries TrigSeries::scaled(double factor) const
{
    std::vector<double> c = cos_, s = sin_;
    for (auto& v : c) v *= factor;
    for (auto& v : s) v *= factor;
    return TrigSeries(std::move(c), std::move(s), period_);
}

PeriodicPrimitive PeriodicPrimitive::build(const std::function<double(double)>& f, double period,
                                           int n0, int n_max, double rel_tol)
{
    CAUSTICA_REQUIRE(period > 0.0 && n0 >= 8, ErrorKind::invalid_input, "bad primitive grid");
    int n = n0;
    TrigSeries series;
    double mean = 0.0;
    for (;;) {
        std::vector<double> samples(n);
        for (int j = 0; j < n; ++j) samples[j] = f(period * j / n);
        series = TrigSeries::fit(samples, n / 2 - 1, period);
        mean = series.cos_coeffs()[0];
        double tail = 0.0;
        for (int k = n / 4; k <= series.degree(); ++k)
            tail = std::max(tail, std::hypot(series.cos_coeffs()[k], series.sin_coeffs()[k]));
        if (tail <= rel_tol * std::abs(mean) || n >= n_max) break;
        n *= 2;
    }
    CAUSTICA_REQUIRE(mean > 0.0, ErrorKind::invalid_input, "primitive integrand must have positive mean");
    series.trim(0.25 * rel_tol * std::abs(mean));

    const double w = two_pi / period;
    const auto& c = series.cos_coeffs();
    const auto& s = series.sin_coeffs();
    std::vector<double> pc(c.size(), 0.0), ps(c.size(), 0.0);
    for (std::size_t k = 1; k < c.size(); ++k) {
        const double kw = static_cast<double>(k) * w;
        pc[k] = -s[k] / kw;
        ps[k] = c[k] / kw;
    }
    PeriodicPrimitive out;
    out.integrand_ = series;
    out.periodic_part_ = TrigSeries(std::move(pc), std::move(ps), period);
    out.offset_ = out.periodic_part_(0.0);
    out.mean_ = mean;
    out.nodes_ = n;
    return out;
}

double PeriodicPrimitive::operator()(double u) const
{
    return mean_ * u + periodic_part_(u) - offset_;
}

Jet PeriodicPrimitive::operator()(const Jet& u) const
{
    const Jet f = integrand_.jet(u.v);
    return compose(u, (*this)(u.v), f.v, f.d1);
}

double PeriodicPrimitive::inverse(double value) const
{
    const double L = total();
    const double P = period();
    return lifted_inverse([this](double u) { return (*this)(u); },
                          [this](double u) { return integrand_(u); }, P, L, value);
}

double wrap(double u, double period)
{
    double r = std::fmod(u, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    return r;
}

double wrap_centered(double u, double period)
{
    double r = wrap(u + 0.5 * period, period) - 0.5 * period;
    return r;
}

std::vector<double> uniform_grid(int n, double period)
{
    std::vector<double> g(n);
    for (int j = 0; j < n; ++j) g[j] = period * j / n;
    return g;
}

std::vector<double> logspace(double first, double last, int count)
{
    CAUSTICA_REQUIRE(first > 0.0 && last > 0.0 && count >= 1, ErrorKind::invalid_input,
                     "logspace needs positive endpoints");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = first;
        return out;
    }
    const double l0 = std::log(first), l1 = std::log(last);
    for (int i = 0; i < count; ++i) out[i] = std::exp(l0 + (l1 - l0) * i / (count - 1));
    out.front() = first;
    out.back() = last;
    return out;
}

double solve_bracketed(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double lo, double hi,
                       double x_tol, int max_iter)
{
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    CAUSTICA_REQUIRE((flo < 0.0) != (fhi < 0.0), ErrorKind::bracket, "root is not bracketed");
    // orient so that f(lo) < 0
    if (flo > 0.0) {
        std::swap(lo, hi);
        std::swap(flo, fhi);
    }
    double x = 0.5 * (lo + hi);
    double dx_old = std::abs(hi - lo);
    double dx = dx_old;
    double fx = f(x);
    double dfx = df(x);
    for (int it = 0; it < max_iter; ++it) {
        const bool newton_out = ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) > 0.0;
        const bool slow = std::abs(2.0 * fx) > std::abs(dx_old * dfx);
        dx_old = dx;
        if (newton_out || slow || dfx == 0.0) {
            dx = 0.5 * (hi - lo);
            x = lo + dx;
        } else {
            dx = fx / dfx;
            x -= dx;
        }
        if (std::abs(dx) < x_tol) return x;
        fx = f(x);
        if (fx == 0.0) return x;
        dfx = df(x);
        if (fx < 0.0)
            lo = x;
        else
            hi = x;
        if (std::abs(hi - lo) < x_tol) return x;
    }
    throw Error(ErrorKind::convergence, "bracketed Newton did not converge");
}

double lifted_inverse(const std::function<double(double)>& g, const std::function<double(double)>& dg,
                      double period, double total, double value)
{
    const double turns = std::floor(value / total);
    const double r = value - turns * total;
    // g(0) and g(period) carry round-off; values at the ends map to the ends
    if (g(0.0) >= r) return turns * period;
    if (g(period) <= r) return (turns + 1.0) * period;
    const double u = solve_bracketed([&](double v) { return g(v) - r; }, dg, 0.0, period, 1e-15 * period);
    return u + turns * period;
}

double sup_abs(std::span<const double> v)
{
    double m = 0.0;
    for (double a : v) m = std::max(m, std::abs(a));
    return m;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, double f_tol, int max_evals)
{
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    int evals = 0;
    const auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };
    for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    while (evals < max_evals) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
        if (std::abs(vals[worst] - vals[best]) <= f_tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d] / n;
        }
        const auto along = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d) p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
            return p;
        };
        auto xr = along(-1.0);
        const double fr = eval(xr);
        if (fr < vals[best]) {
            auto xe = along(-2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = std::move(xe);
                vals[worst] = fe;
            } else {
                simplex[worst] = std::move(xr);
                vals[worst] = fr;
            }
        } else if (fr < vals[second]) {
            simplex[worst] = std::move(xr);
            vals[worst] = fr;
        } else {
            const bool outside = fr < vals[worst];
            auto xc = along(outside ? -0.5 : 0.5);
            const double fc = eval(xc);
            if (fc < std::min(fr, vals[worst])) {
                simplex[worst] = std::move(xc);
                vals[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    vals[i] = eval(simplex[i]);
                }
            }
        }
    }
    const auto it = std::min_element(vals.begin(), vals.end());
    return {simplex[it - vals.begin()], *it, evals};
}

}  // namespace caustica::numerics

namespace caustica::numerics {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_limit(int threads)
{
    CAUSTICA_REQUIRE(threads >= 0, ErrorKind::invalid_input, "thread limit must be non-negative");
    g_threads.store(threads);
}

int thread_limit()
{
    const int t = g_threads.load();
    if (t > 0) return t;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& body)
{
    const int workers = std::min(thread_limit(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace caustica::numerics
