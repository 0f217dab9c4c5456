// Quadrature rules on the reference triangle and the reference edge.
//
// Triangle rules are Gauss-Legendre products collapsed through the Duffy
// map, so a rule of declared degree d integrates every bivariate polynomial
// of total degree <= d exactly (the map adds one to the required x-degree,
// which the point count accounts for). Edge rules are plain Gauss-Legendre
// on [0,1]. All weights are positive.
#pragma once

#include "biharm/geometry.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace biharm {

inline constexpr int kMaxQuadDegree = 12;

struct TriQuadRule {
    int degree = 0;
    std::vector<std::array<double, 3>> points; // barycentric coordinates
    std::vector<double> weights;               // sum to 1/2 (reference measure)
};

struct EdgeQuadRule {
    int degree = 0;
    std::vector<double> points; // parameter t in [0,1]
    std::vector<double> weights; // sum to 1
};

// Gauss-Legendre nodes/weights on [0,1], Newton iteration on P_n.
inline void gauss_legendre_01(int n, std::vector<double>& pts, std::vector<double>& wts) {
    pts.resize(n);
    wts.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5)); // ith root, descending
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step after convergence
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / dp;
                break;
            }
        }
        pts[i] = 0.5 * (1.0 + x);
        wts[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

inline EdgeQuadRule edge_rule(int degree) {
    if (degree < 1 || degree > kMaxQuadDegree)
        throw std::invalid_argument("edge_rule: unsupported degree " + std::to_string(degree));
    EdgeQuadRule rule;
    rule.degree = degree;
    gauss_legendre_01((degree + 2) / 2, rule.points, rule.weights);
    return rule;
}

inline TriQuadRule triangle_rule(int degree) {
    if (degree < 1 || degree > kMaxQuadDegree)
        throw std::invalid_argument("triangle_rule: unsupported degree " + std::to_string(degree));
    // Duffy map (u,v) = (s, t*(1-s)); integrand picks up one extra s-degree
    std::vector<double> sx, wx, sy, wy;
    gauss_legendre_01((degree + 3) / 2, sx, wx);
    gauss_legendre_01((degree + 2) / 2, sy, wy);
    TriQuadRule rule;
    rule.degree = degree;
    for (std::size_t i = 0; i < sx.size(); ++i) {
        for (std::size_t j = 0; j < sy.size(); ++j) {
            const double u = sx[i];
            const double v = sy[j] * (1.0 - sx[i]);
            rule.points.push_back({1.0 - u - v, u, v});
            rule.weights.push_back(wx[i] * wy[j] * (1.0 - sx[i]));
        }
    }
    return rule;
}

// physical quadrature point from barycentric coordinates
inline Vec2 bary_to_point(const Vec2& a, const Vec2& b, const Vec2& c,
                          const std::array<double, 3>& lambda) {
    return a * lambda[0] + b * lambda[1] + c * lambda[2];
}

} // namespace biharm
