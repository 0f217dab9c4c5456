// Small fixed-size 2D vector/matrix types used throughout the solver.
#pragma once

#include <cmath>

namespace biharm {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    double squared_norm() const { return x * x + y * y; }
    Vec2 normalized() const { return *this / norm(); }
    // rotation by -90 degrees; for a CCW edge this points outward
    Vec2 perp_cw() const { return {y, -x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// symmetric 2x2 matrix (Hessians)
struct Mat2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    Mat2 operator+(const Mat2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    Mat2 operator-(const Mat2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
    Mat2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }

    Vec2 apply(const Vec2& v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
    double trace() const { return xx + yy; }
    // Frobenius inner product; the off-diagonal entry appears twice
    double ddot(const Mat2& o) const { return xx * o.xx + 2.0 * xy * o.xy + yy * o.yy; }
    double squared_frobenius() const { return ddot(*this); }
};

} // namespace biharm
