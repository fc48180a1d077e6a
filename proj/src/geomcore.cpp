#include "normvol/geomcore.hpp"

#include <cmath>
#include <numbers>

namespace normvol {

namespace {

double cofactor_det(const Matrix& m) {
    const auto n = m.rows();
    switch (n) {
        case 0:
            return 1.0;
        case 1:
            return m(0, 0);
        case 2:
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 3:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        default:
            break;
    }
    // Expansion along the first row.
    double sum = 0.0;
    Matrix minor(n - 1, n - 1);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k == c) continue;
                minor(r - 1, cc++) = m(r, k);
            }
        }
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        sum += sign * m(0, c) * cofactor_det(minor);
    }
    return sum;
}

// Lexicographic rank of a sorted k-subset of {0..n-1}.
std::size_t subset_rank(int n, std::span<const int> subset) {
    const int k = static_cast<int>(subset.size());
    std::size_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v) {
            rank += static_cast<std::size_t>(binomial(n - 1 - v, k - 1 - i));
        }
        prev = subset[i];
    }
    return rank;
}

}  // namespace

double determinant(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    }
    if (m.rows() <= kMaxDim) return cofactor_det(m);
    return m.fullPivLu().determinant();
}

double determinant(std::span<const Vector> columns) {
    const auto n = static_cast<Eigen::Index>(columns.size());
    Matrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (columns[j].size() != n) {
            throw Error(ErrorKind::InvalidArgument, "determinant: column length mismatch");
        }
        m.col(j) = columns[j];
    }
    return cofactor_det(m);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void for_each_combination(int m, int k, const std::function<void(std::span<const int>)>& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<int>> combinations(int m, int k) {
    std::vector<std::vector<int>> out;
    for_each_combination(m, k, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
}

KVector::KVector(int dim, int grade) : dim(dim), grade(grade) {
    if (grade < 0 || grade > dim) {
        throw Error(ErrorKind::InvalidArgument, "k-vector grade out of range");
    }
    coords.assign(static_cast<std::size_t>(binomial(dim, grade)), 0.0);
}

KVector::KVector(int dim, int grade, std::vector<double> c) : KVector(dim, grade) {
    if (c.size() != coords.size()) {
        throw Error(ErrorKind::InvalidArgument, "k-vector coordinate count must be C(n,k)");
    }
    coords = std::move(c);
}

double KVector::at(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != grade) {
        throw Error(ErrorKind::InvalidArgument, "subset size differs from grade");
    }
    return coords[subset_rank(dim, subset)];
}

double KVector::norm() const {
    double s = 0.0;
    for (double c : coords) s += c * c;
    return std::sqrt(s);
}

KVector& KVector::operator+=(const KVector& other) {
    if (other.dim != dim || other.grade != grade) {
        throw Error(ErrorKind::InvalidArgument, "k-vector sum: grade/dimension mismatch");
    }
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
    return *this;
}

KVector operator*(double s, KVector a) {
    for (double& c : a.coords) c *= s;
    return a;
}

KVector wedge(std::span<const Vector> vectors) {
    if (vectors.empty()) {
        throw Error(ErrorKind::InvalidArgument, "wedge of zero vectors");
    }
    const int n = static_cast<int>(vectors.front().size());
    const int k = static_cast<int>(vectors.size());
    KVector out(n, k);
    Matrix minor(k, k);
    std::size_t pos = 0;
    for_each_combination(n, k, [&](std::span<const int> rows) {
        for (int j = 0; j < k; ++j) {
            if (vectors[j].size() != n) {
                throw Error(ErrorKind::InvalidArgument, "wedge: vectors of different dimension");
            }
            for (int i = 0; i < k; ++i) minor(i, j) = vectors[j](rows[i]);
        }
        out.coords[pos++] = cofactor_det(minor);
    });
    return out;
}

double pair(const KVector& a, const KVector& b) {
    if (a.dim != b.dim || a.grade != b.grade || a.coords.size() != b.coords.size()) {
        throw Error(ErrorKind::InvalidArgument, "pairing of k-vectors with different grade or dimension");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

double unit_ball_volume(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "unit ball of negative dimension");
    const double h = 0.5 * n;
    return std::pow(std::numbers::pi, h) / std::tgamma(h + 1.0);
}

KVector complement_vector(const Vector& xi) {
    const int n = static_cast<int>(xi.size());
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "complement of an empty covector");
    KVector out(n, n - 1);
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
        rest.clear();
        for (int i = 0; i < n; ++i) {
            if (i != j) rest.push_back(i);
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        out.coords[subset_rank(n, rest)] = sign * xi(j);
    }
    return out;
}

Vector cross_product(std::span<const Vector> vectors, int dim) {
    Vector normal = Vector::Zero(dim);
    if (dim == 1) {
        normal(0) = 1.0;
        return normal;
    }
    // normal_j = (-1)^j det of the (n-1)x(n-1) minor without row j, so that
    // <normal, x> = det(vectors..., x).
    Matrix minor(dim - 1, dim - 1);
    for (int j = 0; j < dim; ++j) {
        for (int c = 0; c < dim - 1; ++c) {
            int r2 = 0;
            for (int r = 0; r < dim; ++r) {
                if (r == j) continue;
                minor(r2++, c) = vectors[c](r);
            }
        }
        const double sign = ((dim - 1 + j) % 2 == 0) ? 1.0 : -1.0;
        normal(j) = sign * cofactor_det(minor);
    }
    return normal;
}

int rank(const Matrix& m, double rel_tol) {
    if (m.size() == 0) return 0;
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0;
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(rel_tol);
    return static_cast<int>(lu.rank());
}

}  // namespace normvol
