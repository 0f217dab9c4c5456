// Bivariate polynomials in a scaled monomial basis.
//
// Coefficients refer to ((x-cx)/h)^a ((y-cy)/h)^b with a+b <= degree, where
// (cx,cy) is the triangle centroid and h its diameter. Keeping the frame
// local to the element makes DOF matrices well conditioned independently of
// the mesh size. All calculus (derivatives, Laplacian, products) is exact
// coefficient manipulation.
#pragma once

#include "biharm/geometry.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace biharm {

class Poly2 {
public:
    Poly2() = default;
    Poly2(Vec2 center, double scale, int degree)
        : center_(center), scale_(scale), degree_(degree), coef_(n_coeffs(degree), 0.0) {
        assert(degree >= 0 && degree <= kMaxDeg);
    }

    static int n_coeffs(int degree) { return (degree + 1) * (degree + 2) / 2; }
    // coefficient index of X^a Y^b, graded ordering
    static int index(int a, int b) {
        const int k = a + b;
        return k * (k + 1) / 2 + b;
    }

    int degree() const { return degree_; }
    Vec2 center() const { return center_; }
    double scale() const { return scale_; }

    double coef(int a, int b) const {
        return (a + b <= degree_) ? coef_[index(a, b)] : 0.0;
    }
    double& coef(int a, int b) {
        assert(a + b <= degree_);
        return coef_[index(a, b)];
    }

    double value(const Vec2& p) const {
        const double X = (p.x - center_.x) / scale_;
        const double Y = (p.y - center_.y) / scale_;
        double px[kMaxDeg + 1], py[kMaxDeg + 1];
        powers(X, px);
        powers(Y, py);
        double sum = 0.0;
        for (int a = 0; a <= degree_; ++a)
            for (int b = 0; b + a <= degree_; ++b) sum += coef_[index(a, b)] * px[a] * py[b];
        return sum;
    }

    Vec2 gradient(const Vec2& p) const {
        const double X = (p.x - center_.x) / scale_;
        const double Y = (p.y - center_.y) / scale_;
        double px[kMaxDeg + 1], py[kMaxDeg + 1];
        powers(X, px);
        powers(Y, py);
        double gx = 0.0, gy = 0.0;
        for (int a = 0; a <= degree_; ++a)
            for (int b = 0; b + a <= degree_; ++b) {
                const double c = coef_[index(a, b)];
                if (a > 0) gx += c * a * px[a - 1] * py[b];
                if (b > 0) gy += c * b * px[a] * py[b - 1];
            }
        return Vec2{gx, gy} / scale_;
    }

    Mat2 hessian(const Vec2& p) const {
        const double X = (p.x - center_.x) / scale_;
        const double Y = (p.y - center_.y) / scale_;
        double px[kMaxDeg + 1], py[kMaxDeg + 1];
        powers(X, px);
        powers(Y, py);
        Mat2 h;
        for (int a = 0; a <= degree_; ++a)
            for (int b = 0; b + a <= degree_; ++b) {
                const double c = coef_[index(a, b)];
                if (a > 1) h.xx += c * a * (a - 1) * px[a - 2] * py[b];
                if (a > 0 && b > 0) h.xy += c * a * b * px[a - 1] * py[b - 1];
                if (b > 1) h.yy += c * b * (b - 1) * px[a] * py[b - 2];
            }
        const double s2 = scale_ * scale_;
        return {h.xx / s2, h.xy / s2, h.yy / s2};
    }

    double laplacian(const Vec2& p) const { return hessian(p).trace(); }

    // partial derivative of order (dx, dy), exact in coefficients
    Poly2 derivative(int dx, int dy) const {
        const int order = dx + dy;
        if (order > degree_) return Poly2(center_, scale_, 0);
        Poly2 out(center_, scale_, degree_ - order);
        for (int a = dx; a <= degree_; ++a)
            for (int b = dy; b + a <= degree_; ++b) {
                double factor = 1.0;
                for (int k = 0; k < dx; ++k) factor *= (a - k);
                for (int k = 0; k < dy; ++k) factor *= (b - k);
                out.coef(a - dx, b - dy) = coef(a, b) * factor;
            }
        const double s = std::pow(scale_, order);
        for (double& c : out.coef_) c /= s;
        return out;
    }

    Poly2 laplacian_poly() const {
        return (degree_ < 2) ? Poly2(center_, scale_, 0) : derivative(2, 0) + derivative(0, 2);
    }

    Poly2 operator+(const Poly2& o) const {
        check_frame(o);
        Poly2 out(center_, scale_, std::max(degree_, o.degree_));
        accumulate(out, *this, 1.0);
        accumulate(out, o, 1.0);
        return out;
    }
    Poly2 operator-(const Poly2& o) const {
        check_frame(o);
        Poly2 out(center_, scale_, std::max(degree_, o.degree_));
        accumulate(out, *this, 1.0);
        accumulate(out, o, -1.0);
        return out;
    }
    Poly2 operator*(double s) const {
        Poly2 out = *this;
        for (double& c : out.coef_) c *= s;
        return out;
    }
    void add_scaled(const Poly2& o, double s) {
        check_frame(o);
        assert(o.degree_ <= degree_);
        accumulate(*this, o, s);
    }

    Poly2 multiply(const Poly2& o) const {
        check_frame(o);
        Poly2 out(center_, scale_, degree_ + o.degree_);
        for (int a = 0; a <= degree_; ++a)
            for (int b = 0; b + a <= degree_; ++b) {
                const double c = coef_[index(a, b)];
                if (c == 0.0) continue;
                for (int a2 = 0; a2 <= o.degree_; ++a2)
                    for (int b2 = 0; b2 + a2 <= o.degree_; ++b2)
                        out.coef(a + a2, b + b2) += c * o.coef_[index(a2, b2)];
            }
        return out;
    }

private:
    static constexpr int kMaxDeg = 8;

    void powers(double v, double* out) const {
        out[0] = 1.0;
        for (int k = 1; k <= degree_; ++k) out[k] = out[k - 1] * v;
    }
    void check_frame(const Poly2& o) const {
        if (center_.x != o.center_.x || center_.y != o.center_.y || scale_ != o.scale_)
            throw std::logic_error("Poly2: mixing polynomials from different local frames");
    }
    static void accumulate(Poly2& dst, const Poly2& src, double s) {
        for (int a = 0; a <= src.degree_; ++a)
            for (int b = 0; b + a <= src.degree_; ++b)
                dst.coef(a, b) += s * src.coef_[index(a, b)];
    }

    Vec2 center_;
    double scale_ = 1.0;
    int degree_ = 0;
    std::vector<double> coef_;
};

inline Poly2 operator*(double s, const Poly2& p) { return p * s; }

} // namespace biharm
