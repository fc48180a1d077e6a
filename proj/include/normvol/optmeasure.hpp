#pragma once

// Maximization of vol(Gamma_nu B°) over even probability measures supported
// on the vertex representatives of B°.

#include <cstdint>
#include <span>
#include <vector>

#include "normvol/geomcore.hpp"

namespace normvol {

/// Support size cap for the optimizer.
inline constexpr int kMaxSupport = 24;

struct OptResult {
    std::vector<double> weights;  // on the simplex
    double objective = 0.0;       // F(w) at the returned weights
    double gap = 0.0;             // Frank-Wolfe gap of F^{1/k}
    int iterations = 0;
    bool converged = false;
};

struct OptOptions {
    double tol = 1e-9;
    int max_iter = 50000;
    int restarts = 3;
    std::uint64_t seed = 0;
};

/**
 * Homogeneous multilinear polynomial F(w) = sum_S c_S prod_{i in S} w_i over
 * k-subsets S of {0..m-1}, with c_S >= 0.
 *
 * F^{1/k} is the surrogate the optimizer ascends; it is concave whenever F
 * is a mixed-volume-type form (vol Gamma_nu for simple k-vectors).
 */
class MultilinearForm {
  public:
    MultilinearForm(int m, int degree);

    void add_term(std::span<const int> subset, double coeff);

    int size() const noexcept { return m_; }
    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept;

    double value(std::span<const double> w) const;
    std::vector<double> gradient(std::span<const double> w) const;
    /// d^2 F / dw_s dw_a for s != a.
    double cross_derivative(std::span<const double> w, int s, int a) const;

  private:
    struct Term {
        int idx[kMaxDim];
        double coeff;
    };
    int m_;
    int degree_;
    std::vector<Term> terms_;
};

/// Pairwise Frank-Wolfe ascent of F^{1/k} from one start.
OptResult ascend(const MultilinearForm& form, std::vector<double> start, double tol, int max_iter);

/// Best of: uniform start, `opts.restarts` perturbed uniform starts, and the
/// given extra starts.
OptResult maximize_form(const MultilinearForm& form, const OptOptions& opts,
                        const std::vector<std::vector<double>>& extra_starts = {});

/// F(w) = 2^n sum_{|S|=n} |det xi_S| over the covector form of the points.
MultilinearForm volume_form(std::span<const Vector> points);

/// vol Gamma_nu B° for the measure with weights w on the points.
double objective(std::span<const Vector> points, std::span<const double> w);

/// Exact partial derivatives of objective() in w.
std::vector<double> gradient(std::span<const Vector> points, std::span<const double> w);

/// Maximize vol Gamma_nu B° over weights on the given polar vertex
/// representatives (m <= 24).
OptResult maximize(std::span<const Vector> points, const OptOptions& opts = {});

/// Independent check for m <= 5: grid search on the simplex followed by a
/// compass-search polish.
OptResult exact_oracle(std::span<const Vector> points, double resolution = 1.0 / 200.0);

}  // namespace normvol
