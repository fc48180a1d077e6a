#pragma once

#include <vector>

#include "normvol/body.hpp"
#include "normvol/geomcore.hpp"

namespace normvol {

/// Generator cap for exact subset-determinant volumes.
inline constexpr int kMaxZonotopeGenerators = 24;

/// Centered zonotope sum_i [-g_i, g_i].
struct Zonotope {
    int dim = 0;
    std::vector<Vector> generators;

    /// Vertex enumeration via the facet structure (parallelepiped faces
    /// spanned by n-1 generators). Fails with Degenerate when the
    /// generators do not span.
    SymmetricPolytope to_polytope() const;
};

/// vol = 2^n sum_{|S|=n} |det g_S|.
double zonotope_volume(const Zonotope& z);

/// h(Z, xi) = sum_i |<xi, g_i>|.
double zonotope_support(const Zonotope& z, const Vector& xi);

/// Even probability measure on sign-pair representatives: mass w_i/2 on each
/// of +-xi_i.
struct DiscreteMeasure {
    std::vector<Vector> points;
    std::vector<double> weights;

    void validate(double tol = 1e-12) const;
};

/// Gamma_nu B°: the zonotope with generators w_i xi_i.
Zonotope centroid_body_discrete(const DiscreteMeasure& nu);

/// Pi K: one generator area_F u_F per facet sign pair.
Zonotope projection_body(const SymmetricPolytope& k);

/// h(Gamma K, xi) = (1/vol K) int_K |<xi, u>| du, computed exactly.
double centroid_support_polytope(const SymmetricPolytope& k, const Vector& xi);

/// Area of Gamma K for a polygon K by the support-function quadrature
/// area = 1/2 \oint (h^2 - h'^2) dtheta on `nodes` equispaced angles.
double centroid_body_volume_2d(const SymmetricPolytope& k, int nodes = 4096);

}  // namespace normvol
