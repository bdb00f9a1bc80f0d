#pragma once

#include <cmath>

namespace caustica {

/// Truncated Taylor jet (value, first and second derivative) in one variable.
/// Enough to get tangents and curvature of composed curves without finite differences.
struct Jet {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    constexpr Jet() = default;
    constexpr Jet(double value) : v(value) {}
    constexpr Jet(double value, double first, double second) : v(value), d1(first), d2(second) {}

    static constexpr Jet variable(double at) { return {at, 1.0, 0.0}; }

    Jet& operator+=(const Jet& o) { v += o.v; d1 += o.d1; d2 += o.d2; return *this; }
    Jet& operator-=(const Jet& o) { v -= o.v; d1 -= o.d1; d2 -= o.d2; return *this; }
    Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
    friend Jet operator*(const Jet& a, const Jet& b)
    {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
    }
    friend Jet operator/(const Jet& a, const Jet& b)
    {
        const double inv = 1.0 / b.v;
        const double q = a.v * inv;
        const double q1 = (a.d1 - q * b.d1) * inv;
        const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) * inv;
        return {q, q1, q2};
    }
};

/// Chain rule for a scalar function with known f, f', f''.
inline Jet compose(const Jet& x, double f, double df, double d2f)
{
    return {f, df * x.d1, d2f * x.d1 * x.d1 + df * x.d2};
}

inline Jet sin(const Jet& x)
{
    const double s = std::sin(x.v), c = std::cos(x.v);
    return compose(x, s, c, -s);
}

inline Jet cos(const Jet& x)
{
    const double s = std::sin(x.v), c = std::cos(x.v);
    return compose(x, c, -s, -c);
}

inline Jet sqrt(const Jet& x)
{
    const double r = std::sqrt(x.v);
    return compose(x, r, 0.5 / r, -0.25 / (r * x.v));
}

// Scalar helpers so templated code can call value_of/sin/cos uniformly.
inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

}  // namespace caustica
