#include "normvol/zonoid.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <string>

#include "hull.hpp"

namespace normvol {

namespace {

constexpr int kMaxParallelGenerators = 16;

// Counterclockwise vertex cycle of a symmetric polygon.
std::vector<Vector> ordered_polygon(const SymmetricPolytope& k) {
    auto verts = k.vertices();
    std::sort(verts.begin(), verts.end(), [](const Vector& a, const Vector& b) {
        return std::atan2(a(1), a(0)) < std::atan2(b(1), b(0));
    });
    return verts;
}

// Integral of <xi, u> over the part of the polygon where it is >= 0.
double positive_moment_2d(const std::vector<Vector>& poly, const Vector& xi) {
    std::vector<Vector> clipped;
    const auto n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& a = poly[i];
        const Vector& b = poly[(i + 1) % n];
        const double fa = xi.dot(a);
        const double fb = xi.dot(b);
        if (fa >= 0.0) clipped.push_back(a);
        if ((fa > 0.0 && fb < 0.0) || (fa < 0.0 && fb > 0.0)) {
            const double t = fa / (fa - fb);
            clipped.push_back(a + t * (b - a));
        }
    }
    // int_Q f = area(Q) f(centroid(Q)) = sum over the fan triangles.
    double moment = 0.0;
    const auto m = clipped.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vector& a = clipped[i];
        const Vector& b = clipped[(i + 1) % m];
        const double cross = a(0) * b(1) - a(1) * b(0);
        moment += cross * (xi.dot(a) + xi.dot(b)) / 6.0;
    }
    return moment;
}

}  // namespace

double zonotope_volume(const Zonotope& z) {
    const int n = z.dim;
    const int m = static_cast<int>(z.generators.size());
    if (m > kMaxZonotopeGenerators) {
        throw Error(ErrorKind::ScaleExceeded,
                    "zonotope volume: more than " + std::to_string(kMaxZonotopeGenerators) + " generators");
    }
    if (m < n) return 0.0;
    std::vector<Vector> cols(static_cast<std::size_t>(n));
    double sum = 0.0;
    for_each_combination(m, n, [&](std::span<const int> s) {
        for (int i = 0; i < n; ++i) cols[i] = z.generators[s[i]];
        sum += std::abs(determinant(cols));
    });
    return std::ldexp(sum, n);
}

double zonotope_support(const Zonotope& z, const Vector& xi) {
    double sum = 0.0;
    for (const auto& g : z.generators) sum += std::abs(xi.dot(g));
    return sum;
}

SymmetricPolytope Zonotope::to_polytope() const {
    std::vector<Vector> gens;
    double scale = 1e-300;
    for (const auto& g : generators) scale = std::max(scale, g.norm());
    for (const auto& g : generators) {
        if (g.norm() > kGeomTol * scale) gens.push_back(g);
    }
    const int m = static_cast<int>(gens.size());
    if (m < dim) throw Error(ErrorKind::Degenerate, "degenerate body: zonotope generators do not span");

    std::vector<Vector> verts;
    std::vector<Vector> face(static_cast<std::size_t>(std::max(dim - 1, 0)));
    for_each_combination(m, dim - 1, [&](std::span<const int> s) {
        for (int i = 0; i < dim - 1; ++i) face[i] = gens[s[i]];
        Vector u = cross_product(face, dim);
        if (u.norm() <= 1e-12 * std::pow(scale, dim - 1)) return;
        u.normalize();
        Vector center = Vector::Zero(dim);
        std::vector<int> parallel;
        for (int i = 0; i < m; ++i) {
            const double s_i = u.dot(gens[i]);
            if (std::abs(s_i) <= kGeomTol * gens[i].norm()) {
                parallel.push_back(i);
            } else {
                center += (s_i > 0.0 ? 1.0 : -1.0) * gens[i];
            }
        }
        if (static_cast<int>(parallel.size()) > kMaxParallelGenerators) {
            throw Error(ErrorKind::ScaleExceeded, "zonotope vertex enumeration: too many coplanar generators");
        }
        const auto p = parallel.size();
        for (unsigned long mask = 0; mask < (1UL << p); ++mask) {
            Vector v = center;
            for (std::size_t j = 0; j < p; ++j) v += ((mask >> j) & 1UL ? -1.0 : 1.0) * gens[parallel[j]];
            verts.push_back(std::move(v));
        }
    });
    return SymmetricPolytope::from_generators(dim, std::move(verts));
}

void DiscreteMeasure::validate(double tol) const {
    if (points.size() != weights.size()) {
        throw Error(ErrorKind::InvalidArgument, "measure: points and weights differ in length");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= -tol)) throw Error(ErrorKind::InvalidArgument, "measure: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > tol * std::max<std::size_t>(1, weights.size())) {
        throw Error(ErrorKind::InvalidArgument, "measure: weights do not sum to 1");
    }
}

Zonotope centroid_body_discrete(const DiscreteMeasure& nu) {
    nu.validate(1e-9);
    if (nu.points.empty()) throw Error(ErrorKind::InvalidArgument, "measure without atoms");
    Zonotope z;
    z.dim = static_cast<int>(nu.points.front().size());
    for (std::size_t i = 0; i < nu.points.size(); ++i) z.generators.push_back(nu.weights[i] * nu.points[i]);
    return z;
}

Zonotope projection_body(const SymmetricPolytope& k) {
    Zonotope z;
    z.dim = k.dim();
    for (const auto* f : k.facet_representatives()) z.generators.push_back(f->area * f->normal);
    return z;
}

double centroid_support_polytope(const SymmetricPolytope& k, const Vector& xi) {
    if (xi.size() != k.dim()) throw Error(ErrorKind::InvalidArgument, "centroid support: dimension mismatch");
    if (xi.norm() == 0.0) return 0.0;
    const int n = k.dim();
    if (n == 1) {
        // K = [-r, r]: (1/2r) int |xi u| du = |xi| r / 2
        return std::abs(xi(0)) * k.support(Vector::Ones(1)) / 2.0;
    }
    if (n == 2) return 2.0 * positive_moment_2d(ordered_polygon(k), xi) / k.volume();

    // The half body K+ = K ∩ {xi >= 0} is the hull of the vertices with
    // xi >= 0 and the edge crossings; since K is symmetric,
    // int_K |xi| = 2 int_{K+} xi.
    const auto verts = k.vertices();
    const auto nv = static_cast<int>(verts.size());
    const double tol = kGeomTol * detail::point_scale(verts);
    std::vector<std::vector<int>> on_facet(static_cast<std::size_t>(nv));
    const auto& facets = k.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (int i = 0; i < nv; ++i) {
            if (facets[f].normal.dot(verts[i]) >= facets[f].offset - tol) on_facet[i].push_back(static_cast<int>(f));
        }
    }
    std::vector<Vector> half;
    std::vector<double> value(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        value[i] = xi.dot(verts[i]);
        if (value[i] >= 0.0) half.push_back(verts[i]);
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (!((value[i] > 0.0 && value[j] < 0.0) || (value[i] < 0.0 && value[j] > 0.0))) continue;
            std::vector<int> common;
            std::set_intersection(on_facet[i].begin(), on_facet[i].end(), on_facet[j].begin(), on_facet[j].end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) < n - 1) continue;
            Matrix normals(n, static_cast<Eigen::Index>(common.size()));
            for (std::size_t c = 0; c < common.size(); ++c) normals.col(static_cast<Eigen::Index>(c)) = facets[common[c]].normal;
            if (rank(normals, 1e-7) != n - 1) continue;
            const double t = value[i] / (value[i] - value[j]);
            half.push_back(verts[i] + t * (verts[j] - verts[i]));
        }
    }
    const auto measure = detail::hull_measure(half, tol);
    return 2.0 * measure.volume * xi.dot(measure.centroid) / k.volume();
}

double centroid_body_volume_2d(const SymmetricPolytope& k, int nodes) {
    if (k.dim() != 2) throw Error(ErrorKind::InvalidArgument, "centroid body area is implemented for n = 2 only");
    if (nodes < 16) throw Error(ErrorKind::InvalidArgument, "too few quadrature nodes");
    const auto poly = ordered_polygon(k);
    const double vol = k.volume();
    const double step = 2.0 * std::numbers::pi / nodes;
    std::vector<double> h(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        Vector u(2);
        u << std::cos(j * step), std::sin(j * step);
        h[j] = 2.0 * positive_moment_2d(poly, u) / vol;
    }
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double dh = (h[(j + 1) % nodes] - h[(j + nodes - 1) % nodes]) / (2.0 * step);
        sum += h[j] * h[j] - dh * dh;
    }
    return 0.5 * sum * step;
}

}  // namespace normvol
