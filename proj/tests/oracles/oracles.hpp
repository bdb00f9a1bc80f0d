#pragma once

// Independent reference computations for the tests. Nothing here calls the library:
// quadratures are adaptive Simpson, the billiard step on an ellipse is the closed-form
// line/conic intersection, and curvature comes from finite differences.

#include <cmath>
#include <functional>
#include <utility>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                          double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson on [a, b], split into `pieces` panels first.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-14,
                        int pieces = 16)
{
    double acc = 0.0;
    const double h = (b - a) / pieces;
    for (int i = 0; i < pieces; ++i) {
        const double l = a + i * h, r = l + h, m = 0.5 * (l + r);
        const double fl = f(l), fm = f(m), fr = f(r);
        acc += simpson_rec(f, l, r, fl, fm, fr, h / 6.0 * (fl + 4.0 * fm + fr), tol / pieces, 40);
    }
    return acc;
}

inline double complete_E(double k)
{
    return integrate([k](double th) { return std::sqrt(1.0 - k * k * std::sin(th) * std::sin(th)); }, 0.0, pi / 2);
}

/// Arithmetic-geometric mean: K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
inline double complete_K(double k)
{
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-17; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

inline double incomplete_F(double phi, double k)
{
    return integrate([k](double th) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(th) * std::sin(th)); }, 0.0,
                     phi);
}

inline double ellipse_perimeter(double a, double b)
{
    return integrate([a, b](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); }, 0.0, 2 * pi);
}

/// Semi-axes of the perimeter-1 ellipse, found by bisection on the quadrature perimeter.
inline std::pair<double, double> unit_perimeter_axes(double e)
{
    double lo = 0.01, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ellipse_perimeter(mid, mid * std::sqrt(1 - e * e)) > 1.0 ? hi : lo) = mid;
    }
    const double a = 0.5 * (lo + hi);
    return {a, a * std::sqrt(1 - e * e)};
}

struct Point {
    double x, y;
};

/// Billiard step on the axis-aligned ellipse x^2/a^2 + y^2/b^2 = 1 in the parameter t: the
/// ray leaves (a cos t, b sin t) at angle phi to the counter-clockwise tangent; returns the
/// landing parameter in (t, t + 2 pi) and the landing angle to the counter-clockwise tangent.
inline std::pair<double, double> ellipse_step(double a, double b, double t, double phi)
{
    const double px = a * std::cos(t), py = b * std::sin(t);
    double tx = -a * std::sin(t), ty = b * std::cos(t);
    const double tn = std::hypot(tx, ty);
    tx /= tn;
    ty /= tn;
    const double dx = std::cos(phi) * tx - std::sin(phi) * ty;
    const double dy = std::cos(phi) * ty + std::sin(phi) * tx;
    // (px + L dx)^2/a^2 + (py + L dy)^2/b^2 = 1 with L = 0 one root
    const double A = dx * dx / (a * a) + dy * dy / (b * b);
    const double B = 2.0 * (px * dx / (a * a) + py * dy / (b * b));
    const double L = -B / A;
    const double qx = px + L * dx, qy = py + L * dy;
    double t1 = std::atan2(qy / b, qx / a);
    while (t1 <= t) t1 += 2 * pi;
    while (t1 > t + 2 * pi) t1 -= 2 * pi;
    double ux = -a * std::sin(t1), uy = b * std::cos(t1);
    const double un = std::hypot(ux, uy);
    ux /= un;
    uy /= un;
    const double nx = uy, ny = -ux;  // outward normal of a counter-clockwise curve
    return {t1, std::atan2(dx * nx + dy * ny, dx * ux + dy * uy)};
}

/// Radius of curvature of a planar curve from a five-point stencil of positions at spacing h.
inline double fd_radius(const std::function<Point(double)>& c, double u, double h)
{
    Point p[5];
    for (int i = 0; i < 5; ++i) p[i] = c(u + (i - 2) * h);
    const double x1 = (p[0].x - 8 * p[1].x + 8 * p[3].x - p[4].x) / (12 * h);
    const double y1 = (p[0].y - 8 * p[1].y + 8 * p[3].y - p[4].y) / (12 * h);
    const double x2 = (-p[0].x + 16 * p[1].x - 30 * p[2].x + 16 * p[3].x - p[4].x) / (12 * h * h);
    const double y2 = (-p[0].y + 16 * p[1].y - 30 * p[2].y + 16 * p[3].y - p[4].y) / (12 * h * h);
    return std::pow(x1 * x1 + y1 * y1, 1.5) / std::abs(x1 * y2 - y1 * x2);
}

/// Signed distance from p to the circle of centre c and radius r (positive outside).
inline double circle_offset(Point p, Point c, double r) { return std::hypot(p.x - c.x, p.y - c.y) - r; }

}  // namespace oracle
