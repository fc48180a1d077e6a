#include "normvol/body.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hull.hpp"

namespace normvol {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw Error(ErrorKind::InvalidArgument,
                    "dimension must be between 1 and " + std::to_string(kMaxDim) + ", got " + std::to_string(dim));
    }
}

bool collinear(const Vector& a, const Vector& b, double tol) {
    return (a - b).norm() <= tol || (a + b).norm() <= tol;
}

}  // namespace

SymmetricPolytope SymmetricPolytope::from_generators(int dim, std::vector<Vector> points) {
    check_dim(dim);
    if (points.empty()) throw Error(ErrorKind::Degenerate, "degenerate body: no generators");
    for (const auto& p : points) {
        if (p.size() != dim) throw Error(ErrorKind::InvalidArgument, "generator has wrong dimension");
        if (!p.allFinite()) throw Error(ErrorKind::InvalidArgument, "generator has non-finite coordinates");
    }
    const double scale = detail::point_scale(points);
    const double tol = kGeomTol * scale;

    // Drop zero points and sign duplicates, keeping first occurrences.
    std::vector<Vector> reps;
    for (auto& p : points) {
        if (p.norm() <= tol) continue;
        bool dup = false;
        for (const auto& q : reps) {
            if (collinear(p, q, tol)) {
                dup = true;
                break;
            }
        }
        if (!dup) reps.push_back(std::move(p));
    }
    Matrix span(dim, static_cast<Eigen::Index>(reps.size()));
    for (std::size_t j = 0; j < reps.size(); ++j) span.col(static_cast<Eigen::Index>(j)) = reps[j];
    if (reps.empty() || rank(span) < dim) throw Error(ErrorKind::Degenerate, "degenerate body");

    const auto m = static_cast<int>(reps.size());
    std::vector<Vector> all;
    all.reserve(2 * reps.size());
    for (const auto& p : reps) all.push_back(p);
    for (const auto& p : reps) all.push_back(-p);
    const auto hull = detail::enumerate_facets(all, Vector::Zero(dim), tol);
    if (hull.empty()) throw Error(ErrorKind::Degenerate, "degenerate body");

    // A point is extreme iff the normals of its incident facets span R^n.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(m));
    for (std::size_t f = 0; f < hull.size(); ++f) {
        for (int v : hull[f].vertices) {
            if (v < m) incident[v].push_back(static_cast<int>(f));
        }
    }
    std::vector<char> extreme(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(incident[i].size()) < dim) continue;
        Matrix normals(dim, static_cast<Eigen::Index>(incident[i].size()));
        for (std::size_t j = 0; j < incident[i].size(); ++j) {
            normals.col(static_cast<Eigen::Index>(j)) = hull[incident[i][j]].normal;
        }
        extreme[i] = rank(normals, 1e-7) == dim;
    }

    SymmetricPolytope out;
    out.dim_ = dim;
    for (int i = 0; i < m; ++i) {
        if (extreme[i]) out.generators_.push_back(reps[i]);
    }
    for (const auto& f : hull) {
        FacetData facet;
        facet.normal = f.normal;
        facet.offset = f.offset;
        for (int v : f.vertices) {
            if (extreme[v % m]) facet.vertices.push_back(all[v]);
        }
        if (dim == 1) {
            facet.area = 1.0;
        } else {
            const Matrix basis = detail::orthogonal_complement(f.normal);
            std::vector<Vector> local;
            local.reserve(facet.vertices.size());
            for (const auto& x : facet.vertices) local.push_back(basis.transpose() * (x - facet.vertices.front()));
            facet.area = detail::hull_measure(local, tol).volume;
        }
        out.volume_ += facet.offset * facet.area / dim;
        out.facets_.push_back(std::move(facet));
    }
    return out;
}

std::vector<Vector> SymmetricPolytope::vertices() const {
    std::vector<Vector> out;
    out.reserve(2 * generators_.size());
    for (const auto& g : generators_) out.push_back(g);
    for (const auto& g : generators_) out.push_back(-g);
    return out;
}

double SymmetricPolytope::support(const Vector& xi) const {
    double best = 0.0;
    for (const auto& g : generators_) best = std::max(best, std::abs(xi.dot(g)));
    return best;
}

double SymmetricPolytope::radial(const Vector& v) const {
    if (v.size() != dim_) throw Error(ErrorKind::InvalidArgument, "radial: dimension mismatch");
    if (v.norm() == 0.0) throw Error(ErrorKind::InvalidArgument, "radial function of the zero vector");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) {
        const double s = f.normal.dot(v);
        if (s > 0.0) best = std::min(best, f.offset / s);
    }
    return best;
}

double SymmetricPolytope::norm(const Vector& v) const {
    if (v.norm() == 0.0) return 0.0;
    return 1.0 / radial(v);
}

bool SymmetricPolytope::contains(const Vector& x, double tol) const {
    for (const auto& f : facets_) {
        if (f.normal.dot(x) > f.offset * (1.0 + tol)) return false;
    }
    return true;
}

std::vector<const FacetData*> SymmetricPolytope::facet_representatives() const {
    std::vector<const FacetData*> out;
    for (const auto& f : facets_) {
        bool seen = false;
        for (const auto* r : out) {
            if ((r->normal + f.normal).norm() < 1e-7) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(&f);
    }
    return out;
}

SymmetricPolytope SymmetricPolytope::polar() const {
    std::vector<Vector> pts;
    for (const auto* f : facet_representatives()) pts.push_back(f->normal / f->offset);
    return from_generators(dim_, std::move(pts));
}

SymmetricPolytope SymmetricPolytope::section(std::span<const Vector> basis) const {
    const int k = static_cast<int>(basis.size());
    if (k < 1 || k > dim_) throw Error(ErrorKind::InvalidArgument, "section: basis size out of range");
    Matrix b(dim_, k);
    for (int j = 0; j < k; ++j) {
        if (basis[j].size() != dim_) throw Error(ErrorKind::InvalidArgument, "section: basis vector dimension");
        b.col(j) = basis[j];
    }
    if (rank(b) < k) throw Error(ErrorKind::Degenerate, "section: dependent basis vectors");
    // The section is the polar of the body spanned by the restricted facet
    // constraints B^T u_F / offset_F.
    std::vector<Vector> constraints;
    for (const auto* f : facet_representatives()) constraints.push_back(b.transpose() * f->normal / f->offset);
    return from_generators(k, std::move(constraints)).polar();
}

SymmetricPolytope SymmetricPolytope::linear_image(const Matrix& g) const {
    if (g.rows() != dim_ || g.cols() != dim_) throw Error(ErrorKind::InvalidArgument, "linear_image: shape mismatch");
    const double scale = std::pow(g.cwiseAbs().maxCoeff(), dim_);
    if (!(std::abs(determinant(g)) > 1e-12 * scale)) throw Error(ErrorKind::Degenerate, "linear_image: singular map");
    std::vector<Vector> pts;
    pts.reserve(generators_.size());
    for (const auto& p : generators_) pts.push_back(g * p);
    return from_generators(dim_, std::move(pts));
}

double mixed_volume_v1(const SymmetricPolytope& k, const std::function<double(const Vector&)>& support_l) {
    double sum = 0.0;
    for (const auto& f : k.facets()) sum += support_l(f.normal) * f.area;
    return sum / k.dim();
}

double mixed_volume_v1(const SymmetricPolytope& k, const SymmetricPolytope& l) {
    if (k.dim() != l.dim()) throw Error(ErrorKind::InvalidArgument, "mixed volume of bodies of different dimension");
    return mixed_volume_v1(k, [&l](const Vector& u) { return l.support(u); });
}

SymmetricPolytope minkowski_sum(const SymmetricPolytope& k, const SymmetricPolytope& l) {
    if (k.dim() != l.dim()) throw Error(ErrorKind::InvalidArgument, "Minkowski sum of bodies of different dimension");
    std::vector<Vector> pts;
    for (const auto& a : k.generators()) {
        for (const auto& b : l.generators()) {
            pts.push_back(a + b);
            pts.push_back(a - b);
        }
    }
    return SymmetricPolytope::from_generators(k.dim(), std::move(pts));
}

SymmetricPolytope scaled(const SymmetricPolytope& k, double t) {
    if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
    return k.linear_image(t * Matrix::Identity(k.dim(), k.dim()));
}

SymmetricPolytope cube(int n) {
    check_dim(n);
    std::vector<Vector> pts;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        Vector p = Vector::Ones(n);
        for (int i = 1; i < n; ++i) {
            if (mask & (1 << (i - 1))) p(i) = -1.0;
        }
        pts.push_back(p);
    }
    return SymmetricPolytope::from_generators(n, std::move(pts));
}

SymmetricPolytope cross_polytope(int n) {
    check_dim(n);
    std::vector<Vector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Vector::Unit(n, i));
    return SymmetricPolytope::from_generators(n, std::move(pts));
}

SymmetricPolytope regular_polygon(int pairs) {
    if (pairs < 2) throw Error(ErrorKind::InvalidArgument, "a symmetric polygon needs at least 2 vertex pairs");
    std::vector<Vector> pts;
    for (int j = 0; j < pairs; ++j) {
        const double t = std::numbers::pi * j / pairs;
        Vector p(2);
        p << std::cos(t), std::sin(t);
        pts.push_back(p);
    }
    return SymmetricPolytope::from_generators(2, std::move(pts));
}

}  // namespace normvol
