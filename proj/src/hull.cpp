#include "hull.hpp"

#include <algorithm>
#include <cmath>

namespace normvol::detail {

double point_scale(const std::vector<Vector>& points) {
    double s = 1e-300;
    for (const auto& p : points) s = std::max(s, p.norm());
    return s;
}

Matrix orthogonal_complement(const Vector& u) {
    const auto d = u.size();
    Matrix col = u;
    Eigen::HouseholderQR<Matrix> qr(col);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    return q.rightCols(d - 1);
}

std::vector<HullFacet> enumerate_facets(const std::vector<Vector>& points, const Vector& interior,
                                        double tol) {
    std::vector<HullFacet> facets;
    const int n = static_cast<int>(points.size());
    if (n == 0) return facets;
    const int d = static_cast<int>(points.front().size());
    if (n < d) return facets;

    // membership[f][i] != 0 iff point i lies on facet f
    std::vector<std::vector<char>> membership;
    std::vector<Vector> diffs(static_cast<std::size_t>(std::max(d - 1, 0)));
    const double scale = point_scale(points);
    const double normal_floor = 1e-12 * std::pow(scale, d - 1);

    for_each_combination(n, d, [&](std::span<const int> subset) {
        for (const auto& on : membership) {
            bool all = true;
            for (int i : subset) {
                if (!on[i]) {
                    all = false;
                    break;
                }
            }
            if (all) return;
        }
        const Vector& p0 = points[subset[0]];
        for (int j = 1; j < d; ++j) diffs[j - 1] = points[subset[j]] - p0;
        Vector normal = cross_product(diffs, d);
        const double len = normal.norm();
        if (len <= normal_floor) return;
        normal /= len;
        double offset = normal.dot(p0);
        const double at_interior = normal.dot(interior);
        if (std::abs(offset - at_interior) <= tol) return;
        if (offset < at_interior) {
            normal = -normal;
            offset = -offset;
        }
        for (const auto& p : points) {
            if (normal.dot(p) > offset + tol) return;
        }
        for (const auto& f : facets) {
            if ((f.normal - normal).norm() < 1e-7) return;
        }
        HullFacet facet{normal, offset, {}};
        std::vector<char> on(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            if (normal.dot(points[i]) >= offset - tol) {
                facet.vertices.push_back(i);
                on[i] = 1;
            }
        }
        facets.push_back(std::move(facet));
        membership.push_back(std::move(on));
    });
    return facets;
}

HullMeasure hull_measure(const std::vector<Vector>& points, double tol) {
    HullMeasure out;
    if (points.empty()) return out;
    const auto d = points.front().size();
    if (d == 0) {
        out.volume = 1.0;
        out.centroid = Vector(0);
        return out;
    }
    if (d == 1) {
        double lo = points.front()(0);
        double hi = lo;
        for (const auto& p : points) {
            lo = std::min(lo, p(0));
            hi = std::max(hi, p(0));
        }
        out.volume = hi - lo;
        out.centroid = Vector::Constant(1, 0.5 * (lo + hi));
        return out;
    }
    Vector center = Vector::Zero(d);
    for (const auto& p : points) center += p;
    center /= static_cast<double>(points.size());

    out.centroid = Vector::Zero(d);
    const auto facets = enumerate_facets(points, center, tol);
    std::vector<Vector> local;
    for (const auto& f : facets) {
        const Matrix basis = orthogonal_complement(f.normal);
        const Vector& origin = points[f.vertices.front()];
        local.clear();
        for (int i : f.vertices) local.push_back(basis.transpose() * (points[i] - origin));
        const HullMeasure face = hull_measure(local, tol);
        const Vector face_centroid = origin + basis * face.centroid;
        const double height = f.offset - f.normal.dot(center);
        const double pyramid = height * face.volume / static_cast<double>(d);
        const double shrink = static_cast<double>(d) / static_cast<double>(d + 1);
        out.volume += pyramid;
        out.centroid += pyramid * (center + shrink * (face_centroid - center));
    }
    if (out.volume > 0.0) {
        out.centroid /= out.volume;
    } else {
        out.centroid = center;
    }
    return out;
}

}  // namespace normvol::detail
