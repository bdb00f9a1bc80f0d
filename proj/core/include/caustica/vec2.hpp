#pragma once

#include <cmath>

namespace caustica {

/// Plain Cartesian pair. Templated so the same curve code runs on doubles and jets.
template <class T>
struct BasicVec2 {
    T x{};
    T y{};

    friend BasicVec2 operator+(const BasicVec2& a, const BasicVec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend BasicVec2 operator-(const BasicVec2& a, const BasicVec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend BasicVec2 operator-(const BasicVec2& a) { return {-a.x, -a.y}; }
    friend BasicVec2 operator*(const T& s, const BasicVec2& a) { return {s * a.x, s * a.y}; }
    friend BasicVec2 operator*(const BasicVec2& a, const T& s) { return {s * a.x, s * a.y}; }
    friend BasicVec2 operator/(const BasicVec2& a, const T& s) { return {a.x / s, a.y / s}; }
    BasicVec2& operator+=(const BasicVec2& b) { x += b.x; y += b.y; return *this; }
    BasicVec2& operator-=(const BasicVec2& b) { x -= b.x; y -= b.y; return *this; }
};

using Vec2 = BasicVec2<double>;

template <class T>
inline T dot(const BasicVec2<T>& a, const BasicVec2<T>& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product.
template <class T>
inline T cross(const BasicVec2<T>& a, const BasicVec2<T>& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

/// Counter-clockwise quarter turn.
template <class T>
inline BasicVec2<T> rot90(const BasicVec2<T>& a) { return {-a.y, a.x}; }

inline Vec2 rotate(const Vec2& a, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline Vec2 normalized(const Vec2& a) { return a / norm(a); }

}  // namespace caustica
