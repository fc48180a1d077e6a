#include <doctest.h>

#include <cmath>
#include <numbers>

#include "normvol/body.hpp"
#include "test_support.hpp"

using namespace normvol;
using testsupport::vec;

namespace {

// Every generator of a matches some generator of b up to sign.
bool same_reps(const std::vector<Vector>& a, const std::vector<Vector>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        bool found = false;
        for (const auto& y : b) found = found || (x - y).norm() < tol || (x + y).norm() < tol;
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cube basics") {
    const auto c = cube(3);
    CHECK(c.dim() == 3);
    CHECK(c.volume() == doctest::Approx(8.0));
    CHECK(c.facets().size() == 6);
    CHECK(c.generators().size() == 4);
    CHECK(c.vertices().size() == 8);
    CHECK(c.support(vec({1, 2, -3})) == doctest::Approx(6.0));
    CHECK(c.norm(vec({0.5, -2, 1})) == doctest::Approx(2.0));
    CHECK(c.radial(vec({0.5, -2, 1})) == doctest::Approx(0.5));
    CHECK(c.norm(vec({0, 0, 0})) == 0.0);
    CHECK_THROWS_AS(c.radial(vec({0, 0, 0})), Error);
    CHECK(c.contains(vec({1, 1, 1})));
    CHECK_FALSE(c.contains(vec({1.01, 0, 0})));
    for (const auto& f : c.facets()) {
        CHECK(f.area == doctest::Approx(4.0));
        CHECK(f.offset == doctest::Approx(1.0));
        CHECK(f.vertices.size() == 4);
    }
}

TEST_CASE("polar of cube is the cross-polytope") {
    const auto p = cube(3).polar();
    CHECK(p.volume() == doctest::Approx(4.0 / 3.0));
    CHECK(same_reps(p.generators(), cross_polytope(3).generators(), 1e-12));
    CHECK(p.facets().size() == 8);
}

TEST_CASE("polar is an involution") {
    for (const auto& b : testsupport::body_corpus()) {
        const auto p = SymmetricPolytope::from_generators(b.dim, b.reps);
        const auto pp = p.polar().polar();
        CHECK(same_reps(p.generators(), pp.generators(), 1e-9));
        CHECK(pp.volume() == doctest::Approx(p.volume()).epsilon(1e-10));
    }
}

TEST_CASE("support of the polar is the norm") {
    testsupport::Gen g(1);
    for (const auto& b : testsupport::body_corpus()) {
        const auto p = SymmetricPolytope::from_generators(b.dim, b.reps);
        const auto q = p.polar();
        for (int rep = 0; rep < 10; ++rep) {
            const Vector x = g.gaussian(b.dim);
            CHECK(q.support(x) == doctest::Approx(p.norm(x)).epsilon(1e-10));
            CHECK(p.support(x) == doctest::Approx(testsupport::support_brute(b.reps, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("planar areas agree with the shoelace formula") {
    testsupport::Gen g(2);
    for (int rep = 0; rep < 30; ++rep) {
        const auto pts = g.gaussians(2, 2 + rep % 7);
        const auto p = SymmetricPolytope::from_generators(2, pts);
        CHECK(p.volume() == doctest::Approx(testsupport::polygon_area(pts)).epsilon(1e-10));
    }
    const int pairs = 5;
    const double n = 2.0 * pairs;
    CHECK(regular_polygon(pairs).volume() == doctest::Approx(0.5 * n * std::sin(2.0 * std::numbers::pi / n)));
}

TEST_CASE("volumes of parallelotopes and cross-polytopes") {
    testsupport::Gen g(4);
    for (int n = 1; n <= 4; ++n) {
        const Matrix m = g.matrix(n);
        std::vector<Vector> cols;
        for (int j = 0; j < n; ++j) cols.push_back(m.col(j));
        const double det = std::abs(testsupport::laplace_det(m));
        // conv{+-columns} is the image of the cross-polytope, volume 2^n/n! |det|
        const auto cp = SymmetricPolytope::from_generators(n, cols);
        CHECK(cp.volume() == doctest::Approx(std::pow(2.0, n) / std::tgamma(n + 1.0) * det).epsilon(1e-10));
        CHECK(cube(n).linear_image(m).volume() == doctest::Approx(std::pow(2.0, n) * det).epsilon(1e-10));
    }
}

TEST_CASE("reduction drops interior points and sign duplicates") {
    const auto p = SymmetricPolytope::from_generators(
        2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0.2, 0.2}), vec({0, 0}), vec({0.5, 0.5})});
    CHECK(p.generators().size() == 2);
    CHECK(p.volume() == doctest::Approx(2.0));
}

TEST_CASE("degenerate and invalid input") {
    CHECK_THROWS_AS(SymmetricPolytope::from_generators(2, {vec({1, 1}), vec({2, 2})}), Error);
    try {
        SymmetricPolytope::from_generators(3, {vec({1, 0, 0}), vec({0, 1, 0})});
        FAIL("expected a degenerate body");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degenerate);
    }
    CHECK_THROWS_AS(SymmetricPolytope::from_generators(5, {}), Error);
    CHECK_THROWS_AS(SymmetricPolytope::from_generators(2, {vec({1, 0, 0})}), Error);
    CHECK_THROWS_AS(SymmetricPolytope::from_generators(2, {vec({NAN, 0}), vec({0, 1})}), Error);
    Matrix singular = Matrix::Zero(2, 2);
    singular(0, 0) = 1;
    CHECK_THROWS_AS(cube(2).linear_image(singular), Error);
}

TEST_CASE("one-dimensional bodies") {
    const auto p = SymmetricPolytope::from_generators(1, {vec({2}), vec({-1})});
    CHECK(p.volume() == doctest::Approx(4.0));
    CHECK(p.polar().volume() == doctest::Approx(1.0));
}

TEST_CASE("sections") {
    const auto c = cube(3);
    std::vector<Vector> plane = {vec({1, 0, 0}), vec({0, 1, 0})};
    CHECK(c.section(plane).volume() == doctest::Approx(4.0));
    // diagonal plane through e_1 and (e_2 + e_3): a 2 x 2 square in those coordinates
    std::vector<Vector> diag = {vec({1, 0, 0}), vec({0, 1, 1})};
    CHECK(c.section(diag).volume() == doctest::Approx(4.0));
    // cross-polytope cut by the coordinate plane is the diamond
    std::vector<Vector> coord = {vec({1, 0, 0}), vec({0, 0, 1})};
    CHECK(cross_polytope(3).section(coord).volume() == doctest::Approx(2.0));
    std::vector<Vector> dep = {vec({1, 0, 0}), vec({2, 0, 0})};
    CHECK_THROWS_AS(c.section(dep), Error);
}

TEST_CASE("section matches a radial-function oracle") {
    testsupport::Gen g(6);
    for (int rep = 0; rep < 10; ++rep) {
        const auto p = SymmetricPolytope::from_generators(3, g.gaussians(3, 3 + rep % 4));
        const auto basis = g.gaussians(3, 2);
        const auto s = p.section(basis);
        for (int j = 0; j < 8; ++j) {
            const Vector c = g.gaussian(2);
            const Vector x = c(0) * basis[0] + c(1) * basis[1];
            CHECK(s.radial(c) == doctest::Approx(p.radial(x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("mixed volumes") {
    testsupport::Gen g(7);
    for (int n = 2; n <= 3; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto k = SymmetricPolytope::from_generators(n, g.gaussians(n, n + rep % 3));
            const auto l = SymmetricPolytope::from_generators(n, g.gaussians(n, n + 1));
            CHECK(mixed_volume_v1(k, k) == doctest::Approx(k.volume()).epsilon(1e-10));
            const double v1 = mixed_volume_v1(k, l);
            CHECK(std::pow(v1, n) >= std::pow(k.volume(), n - 1) * l.volume() * (1 - 1e-10));
            if (n == 2) {
                // Steiner: vol(K + L) = vol K + 2 V(K, L) + vol L in the plane
                const double sum = minkowski_sum(k, l).volume();
                CHECK(sum == doctest::Approx(k.volume() + 2 * v1 + l.volume()).epsilon(1e-9));
            }
        }
    }
    const double t = 2.5;
    CHECK(mixed_volume_v1(cube(3), scaled(cube(3), t)) == doctest::Approx(8.0 * t));
}

TEST_CASE("Minkowski sums of cubes") {
    const auto s = minkowski_sum(cube(3), cube(3));
    CHECK(s.volume() == doctest::Approx(64.0));
    CHECK(minkowski_sum(cross_polytope(2), cube(2)).volume() == doctest::Approx(14.0));
}

TEST_CASE("facet representatives cover each sign pair once") {
    for (const auto& b : testsupport::body_corpus()) {
        const auto p = SymmetricPolytope::from_generators(b.dim, b.reps);
        CHECK(2 * p.facet_representatives().size() == p.facets().size());
        double total = 0.0;
        for (const auto& f : p.facets()) total += f.offset * f.area;
        CHECK(total / b.dim == doctest::Approx(p.volume()).epsilon(1e-10));
    }
}
