#pragma once

// Small dense linear algebra and exterior-algebra coordinates for n <= 4.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace normvol {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Largest supported ambient dimension.
inline constexpr int kMaxDim = 4;

/// Default geometric tolerance (relative to the body scale where noted).
inline constexpr double kGeomTol = 1e-9;

enum class ErrorKind {
    InvalidArgument,
    Degenerate,
    NotConverged,
    ScaleExceeded,
};

/// Library error. `kind()` lets front ends map failures to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Determinant by cofactor expansion for n <= 4, LU beyond that.
double determinant(const Matrix& m);

/// Determinant of the matrix whose columns are the given vectors.
double determinant(std::span<const Vector> columns);

/// All k-element subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int m, int k);

/// Calls fn(subset) for each k-subset of {0..m-1}, lexicographically.
void for_each_combination(int m, int k, const std::function<void(std::span<const int>)>& fn);

/// Binomial coefficient C(n, k).
long long binomial(int n, int k);

/// Coordinates of a k-vector in the basis e_S, S ranging over the k-subsets
/// of the reference basis in lexicographic order.
struct KVector {
    int dim = 0;
    int grade = 0;
    std::vector<double> coords;

    KVector() = default;
    KVector(int dim, int grade);
    KVector(int dim, int grade, std::vector<double> coords);

    /// Coordinate for the subset S (sorted, 0-based).
    double at(std::span<const int> subset) const;
    double norm() const;

    KVector& operator+=(const KVector& other);
    friend KVector operator+(KVector a, const KVector& b) { return a += b; }
    friend KVector operator*(double s, KVector a);
};

/// Simple k-vector v_1 ^ ... ^ v_k: coordinate S is the k x k minor on rows S.
KVector wedge(std::span<const Vector> vectors);

/// Duality pairing sum_S a[S] b[S]; throws on grade or dimension mismatch.
double pair(const KVector& a, const KVector& b);

/// Volume of the Euclidean unit ball in R^n (omega_0 = 1).
double unit_ball_volume(int n);

/// The (n-1)-vector iota(xi) with v ^ iota(xi) = xi(v) e_1 ^ ... ^ e_n.
KVector complement_vector(const Vector& xi);

/// Generalized cross product of n-1 vectors in R^n (unnormalized normal to
/// their span). Zero when the inputs are dependent. For n = 1 returns (1).
Vector cross_product(std::span<const Vector> vectors, int dim);

/// Numerical rank with a tolerance relative to the largest entry.
int rank(const Matrix& m, double rel_tol = 1e-9);

}  // namespace normvol
