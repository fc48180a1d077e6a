#pragma once

#include <functional>
#include <span>
#include <vector>

#include "normvol/geomcore.hpp"

namespace normvol {

/// A facet of a polytope: <normal, x> <= offset holds on the body with
/// equality on the facet.
struct FacetData {
    Vector normal;                 // Euclidean unit length
    double offset = 0.0;           // > 0 for bodies containing the origin
    double area = 0.0;             // (n-1)-dimensional measure
    std::vector<Vector> vertices;  // extreme points of the body on this facet
};

/**
 * Origin-symmetric polytope conv{+-g_i}, stored by vertex representatives
 * modulo sign.
 *
 * Construction reduces the input to extreme points and fails with
 * ErrorKind::Degenerate if the points do not span the space. Facets and
 * volume are computed once at construction; the object is immutable
 * afterwards.
 */
class SymmetricPolytope {
  public:
    static SymmetricPolytope from_generators(int dim, std::vector<Vector> points);

    int dim() const noexcept { return dim_; }
    const std::vector<Vector>& generators() const noexcept { return generators_; }
    const std::vector<FacetData>& facets() const noexcept { return facets_; }
    double volume() const noexcept { return volume_; }

    /// All vertices, +g_i followed by -g_i.
    std::vector<Vector> vertices() const;

    /// h(P, xi) = max_i |<xi, g_i>|.
    double support(const Vector& xi) const;
    /// rho(P, v) = sup{t >= 0 : t v in P}.
    double radial(const Vector& v) const;
    /// ||v||_P = 1 / rho(P, v); zero for v = 0.
    double norm(const Vector& v) const;
    /// Membership test with tolerance relative to the facet offsets.
    bool contains(const Vector& x, double tol = kGeomTol) const;

    /// Polar body in the dual space: vertices u_F / offset_F.
    SymmetricPolytope polar() const;

    /// {c in R^k : sum_i c_i b_i in P} in the coordinates of the given basis.
    SymmetricPolytope section(std::span<const Vector> basis) const;

    /// g P for invertible g.
    SymmetricPolytope linear_image(const Matrix& g) const;

    /// One facet per sign pair, in discovery order.
    std::vector<const FacetData*> facet_representatives() const;

  private:
    SymmetricPolytope() = default;

    int dim_ = 0;
    std::vector<Vector> generators_;
    std::vector<FacetData> facets_;
    double volume_ = 0.0;
};

/// V_1(K, L) = V(K[n-1], L[1]) = (1/n) sum_F h(L, u_F) area_F.
double mixed_volume_v1(const SymmetricPolytope& k, const SymmetricPolytope& l);

/// Same as above with L given by its support function.
double mixed_volume_v1(const SymmetricPolytope& k, const std::function<double(const Vector&)>& support_l);

/// Minkowski sum K + L = conv{+-(a_i +- b_j)}.
SymmetricPolytope minkowski_sum(const SymmetricPolytope& k, const SymmetricPolytope& l);

/// Scalar multiple t K, t > 0.
SymmetricPolytope scaled(const SymmetricPolytope& k, double t);

/// Cube [-1,1]^n.
SymmetricPolytope cube(int n);
/// Cross-polytope conv{+-e_i}.
SymmetricPolytope cross_polytope(int n);
/// Regular 2m-gon inscribed in the unit circle (m vertex pairs).
SymmetricPolytope regular_polygon(int pairs);

}  // namespace normvol
