#pragma once

// Brute-force convex hull primitives for small point sets in dimension <= 4.

#include <vector>

#include "normvol/geomcore.hpp"

namespace normvol::detail {

struct HullFacet {
    Vector normal;             // Euclidean unit length, pointing outward
    double offset = 0.0;       // <normal, x> = offset on the facet
    std::vector<int> vertices; // indices of input points on the facet
};

/// Facets of conv(points). `interior` must be a strictly interior point.
/// Every d-subset spanning a supporting hyperplane yields a candidate;
/// candidates with collinear normals (1e-7) are merged.
std::vector<HullFacet> enumerate_facets(const std::vector<Vector>& points, const Vector& interior,
                                        double tol);

struct HullMeasure {
    double volume = 0.0;
    Vector centroid;
};

/// Volume and centroid of conv(points), points full-dimensional in R^d.
/// d = 0 yields volume 1 (counting measure on a point).
HullMeasure hull_measure(const std::vector<Vector>& points, double tol);

/// Orthonormal basis of the hyperplane orthogonal to the unit vector u,
/// as the columns of a d x (d-1) matrix.
Matrix orthogonal_complement(const Vector& u);

/// Largest Euclidean norm among the points (at least 1e-300).
double point_scale(const std::vector<Vector>& points);

}  // namespace normvol::detail
