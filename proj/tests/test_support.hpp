#pragma once

// Test corpus and independent oracles. Nothing here calls into the library's
// own hull, volume or determinant code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "normvol/body.hpp"
#include "normvol/zonoid.hpp"

namespace testsupport {

using normvol::Vector;

inline Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    double normal() { return nd(rng); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    Vector gaussian(int n) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v(i) = normal();
        return v;
    }
    std::vector<Vector> gaussians(int n, int m) {
        std::vector<Vector> out;
        for (int i = 0; i < m; ++i) out.push_back(gaussian(n));
        return out;
    }
    normvol::Matrix matrix(int n) {
        normvol::Matrix g(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) g(i, j) = normal();
        }
        return g;
    }
    std::mt19937_64 rng;
    std::normal_distribution<double> nd;
};

/// Laplace expansion along the first row; exponential but obviously correct.
inline double laplace_det(const normvol::Matrix& m) {
    const auto n = m.rows();
    if (n == 1) return m(0, 0);
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        normvol::Matrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index c2 = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c != j) minor(r - 1, c2++) = m(r, c);
            }
        }
        sum += ((j % 2) ? -1.0 : 1.0) * m(0, j) * laplace_det(minor);
    }
    return sum;
}

/// Andrew's monotone chain; returns the hull counterclockwise.
inline std::vector<Eigen::Vector2d> hull2d(std::vector<Eigen::Vector2d> p) {
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1)); });
    auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
        return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
    };
    std::vector<Eigen::Vector2d> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

inline double shoelace(const std::vector<Eigen::Vector2d>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        a += p(0) * q(1) - p(1) * q(0);
    }
    return 0.5 * std::abs(a);
}

/// Area of conv{+-p_i} in the plane.
inline double polygon_area(const std::vector<Vector>& reps) {
    std::vector<Eigen::Vector2d> pts;
    for (const auto& r : reps) {
        pts.emplace_back(r(0), r(1));
        pts.emplace_back(-r(0), -r(1));
    }
    return shoelace(hull2d(pts));
}

/// (n-1)-volume of the shadow of conv{+-p_i} in R^3 along the unit vector u.
inline double shadow_area_3d(const std::vector<Vector>& reps, const Eigen::Vector3d& u) {
    Eigen::Vector3d a = u.unitOrthogonal();
    Eigen::Vector3d b = u.cross(a).normalized();
    std::vector<Eigen::Vector2d> pts;
    for (const auto& r : reps) {
        Eigen::Vector3d x(r(0), r(1), r(2));
        pts.emplace_back(a.dot(x), b.dot(x));
        pts.emplace_back(-a.dot(x), -b.dot(x));
    }
    return shoelace(hull2d(pts));
}

/// Brute-force support of conv{+-p_i}.
inline double support_brute(const std::vector<Vector>& reps, const Vector& xi) {
    double h = 0.0;
    for (const auto& r : reps) h = std::max(h, std::abs(r.dot(xi)));
    return h;
}

/// Named corpus of symmetric bodies, given by vertex representatives.
struct CorpusBody {
    std::string name;
    int dim;
    std::vector<Vector> reps;
};

inline std::vector<CorpusBody> body_corpus() {
    std::vector<CorpusBody> c;
    c.push_back({"square", 2, {vec({1, 1}), vec({1, -1})}});
    c.push_back({"diamond", 2, {vec({1, 0}), vec({0, 1})}});
    c.push_back({"hexagon", 2, {vec({1, 0}), vec({0.5, std::sqrt(3.0) / 2}), vec({-0.5, std::sqrt(3.0) / 2})}});
    c.push_back({"skew_quad", 2, {vec({2, 0.3}), vec({-0.4, 1.1})}});
    c.push_back({"pentagon_pairs", 2, {vec({1.0, 0.1}), vec({0.6, 0.9}), vec({-0.3, 1.2}), vec({-0.9, 0.5}), vec({0.2, -0.4})}});
    c.push_back({"cube", 3, {vec({1, 1, 1}), vec({1, 1, -1}), vec({1, -1, 1}), vec({1, -1, -1})}});
    c.push_back({"cross", 3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}});
    c.push_back({"box", 3, {vec({2, 1, 0.5}), vec({2, 1, -0.5}), vec({2, -1, 0.5}), vec({2, -1, -0.5})}});
    c.push_back({"skew_octa", 3, {vec({1, 0.2, 0}), vec({0.3, 1, 0.1}), vec({0, 0.4, 1.5})}});
    c.push_back({"four_pairs", 3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({0.7, 0.7, 0.7})}});
    c.push_back({"cross4", 4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}});
    return c;
}

/// Named corpus of zonotopes, given by generators.
inline std::vector<normvol::Zonotope> zonotope_corpus() {
    std::vector<normvol::Zonotope> z;
    z.push_back({2, {vec({1, 0}), vec({0, 1})}});
    z.push_back({2, {vec({1, 0}), vec({0.5, 0.8}), vec({-0.4, 0.9})}});
    z.push_back({2, {vec({1, 0.2}), vec({0.3, 1}), vec({-0.6, 0.5}), vec({0.9, -0.7})}});
    z.push_back({3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}});
    z.push_back({3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({0.5, 0.5, 0.5})}});
    z.push_back({3, {vec({1, 0.2, 0}), vec({0.1, 1, 0.3}), vec({0, 0.4, 1}), vec({0.6, -0.5, 0.2})}});
    z.push_back({3, {vec({0.5, 0.5, 1}), vec({0.5, -0.5, 1}), vec({-0.5, 0.5, 1}), vec({-0.5, -0.5, 1})}});
    z.push_back({3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 0}), vec({0, 1, 1})}});
    z.push_back({4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}});
    z.push_back({4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({0.5, 0.5, 0.5, 0.5})}});
    return z;
}

inline double omega(int n) { return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0); }

}  // namespace testsupport
