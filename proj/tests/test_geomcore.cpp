#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "normvol/geomcore.hpp"
#include "test_support.hpp"

using namespace normvol;
using testsupport::vec;

TEST_CASE("determinant matches Laplace expansion") {
    testsupport::Gen g(11);
    for (int n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const Matrix m = g.matrix(n);
            const double want = testsupport::laplace_det(m);
            CHECK(determinant(m) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    CHECK(determinant(Matrix::Identity(3, 3)) == 1.0);
    Matrix singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK(determinant(singular) == 0.0);
}

TEST_CASE("determinant of column list") {
    std::vector<Vector> cols = {vec({2, 0}), vec({1, 3})};
    CHECK(determinant(cols) == doctest::Approx(6.0));
}

TEST_CASE("combinations are lexicographic and complete") {
    const auto c = combinations(5, 3);
    CHECK(static_cast<long long>(c.size()) == binomial(5, 3));
    CHECK(c.front() == std::vector<int>{0, 1, 2});
    CHECK(c.back() == std::vector<int>{2, 3, 4});
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1] < c[i]);
    int calls = 0;
    for_each_combination(4, 0, [&](std::span<const int> s) {
        CHECK(s.empty());
        ++calls;
    });
    CHECK(calls == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(0) == doctest::Approx(1.0));
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0));
    CHECK(unit_ball_volume(4) == doctest::Approx(std::numbers::pi * std::numbers::pi / 2.0));
}

TEST_CASE("wedge coordinates are minors") {
    std::vector<Vector> a = {vec({1, 0, 0}), vec({0, 1, 0})};
    const auto w = wedge(a);
    CHECK(w.grade == 2);
    CHECK(w.coords.size() == 3);
    CHECK(w.at(std::vector<int>{0, 1}) == doctest::Approx(1.0));
    CHECK(w.at(std::vector<int>{0, 2}) == doctest::Approx(0.0));
    CHECK(w.at(std::vector<int>{1, 2}) == doctest::Approx(0.0));

    std::vector<Vector> b = {vec({1, 2, 3}), vec({4, 5, 6})};
    const auto wb = wedge(b);
    CHECK(wb.at(std::vector<int>{0, 1}) == doctest::Approx(1 * 5 - 2 * 4));
    CHECK(wb.at(std::vector<int>{0, 2}) == doctest::Approx(1 * 6 - 3 * 4));
    CHECK(wb.at(std::vector<int>{1, 2}) == doctest::Approx(2 * 6 - 3 * 5));
}

TEST_CASE("pairing of simple vectors is Cauchy-Binet") {
    testsupport::Gen g(3);
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int rep = 0; rep < 10; ++rep) {
                const auto a = g.gaussians(n, k);
                const auto b = g.gaussians(n, k);
                Matrix gram(k, k);
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) gram(i, j) = a[i].dot(b[j]);
                }
                CHECK(pair(wedge(a), wedge(b)) == doctest::Approx(testsupport::laplace_det(gram)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("pairing rejects mismatched grades") {
    KVector a(3, 1);
    KVector b(3, 2);
    CHECK_THROWS_AS(pair(a, b), Error);
    CHECK_THROWS_AS(KVector(3, 2, {1.0, 2.0}), Error);
}

TEST_CASE("k-vector arithmetic") {
    KVector a(3, 2, {1, 2, 3});
    KVector b(3, 2, {0, 1, -1});
    const auto c = a + 2.0 * b;
    CHECK(c.coords == std::vector<double>{1, 4, 1});
    CHECK(a.norm() == doctest::Approx(std::sqrt(14.0)));
}

TEST_CASE("cross product is normal with wedge length") {
    testsupport::Gen g(5);
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto a = g.gaussians(n, n - 1);
            const Vector c = cross_product(a, n);
            for (const auto& v : a) CHECK(std::abs(c.dot(v)) < 1e-10 * (1.0 + c.norm()));
            CHECK(c.norm() == doctest::Approx(wedge(a).norm()).epsilon(1e-10));
        }
    }
    std::vector<Vector> none;
    CHECK(cross_product(none, 1)(0) == 1.0);
    std::vector<Vector> dep = {vec({1, 2, 3}), vec({2, 4, 6})};
    CHECK(cross_product(dep, 3).norm() < 1e-12);
}

TEST_CASE("complement vector pairs with hyperplane vectors like the covector") {
    testsupport::Gen g(9);
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const Vector xi = g.gaussian(n);
            const auto iota = complement_vector(xi);
            CHECK(iota.grade == n - 1);
            // v ^ iota(xi) = xi(v) e_1^...^e_n: with iota(xi) simple, spanned by
            // a basis of ker xi, the top form det[v, a] is proportional to xi(v).
            CHECK(iota.norm() == doctest::Approx(xi.norm()));
            const auto a = g.gaussians(n, n - 1);
            const Vector c = cross_product(a, n);
            CHECK(std::abs(pair(wedge(a), iota)) == doctest::Approx(std::abs(c.dot(xi))).epsilon(1e-10));
        }
    }
}

TEST_CASE("numerical rank") {
    Matrix m(3, 3);
    m << 1, 2, 3, 2, 4, 6, 0, 0, 1;
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix::Identity(4, 4)) == 4);
}
