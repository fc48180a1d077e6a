#include "normvol/optmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rng.hpp"

namespace normvol {

MultilinearForm::MultilinearForm(int m, int degree) : m_(m), degree_(degree) {
    if (degree < 1 || degree > kMaxDim) throw Error(ErrorKind::InvalidArgument, "form degree out of range");
    if (m < degree) throw Error(ErrorKind::InvalidArgument, "insufficient support");
}

void MultilinearForm::add_term(std::span<const int> subset, double coeff) {
    if (static_cast<int>(subset.size()) != degree_) throw Error(ErrorKind::InvalidArgument, "term degree mismatch");
    if (!(coeff >= 0.0)) throw Error(ErrorKind::InvalidArgument, "form coefficients must be nonnegative");
    if (coeff == 0.0) return;
    Term t{};
    for (int i = 0; i < degree_; ++i) t.idx[i] = subset[i];
    t.coeff = coeff;
    terms_.push_back(t);
}

bool MultilinearForm::is_zero() const noexcept { return terms_.empty(); }

double MultilinearForm::value(std::span<const double> w) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double p = t.coeff;
        for (int i = 0; i < degree_; ++i) p *= w[t.idx[i]];
        sum += p;
    }
    return sum;
}

std::vector<double> MultilinearForm::gradient(std::span<const double> w) const {
    std::vector<double> g(static_cast<std::size_t>(m_), 0.0);
    for (const auto& t : terms_) {
        for (int i = 0; i < degree_; ++i) {
            double p = t.coeff;
            for (int j = 0; j < degree_; ++j) {
                if (j != i) p *= w[t.idx[j]];
            }
            g[t.idx[i]] += p;
        }
    }
    return g;
}

double MultilinearForm::cross_derivative(std::span<const double> w, int s, int a) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        bool has_s = false;
        bool has_a = false;
        double p = t.coeff;
        for (int i = 0; i < degree_; ++i) {
            const int k = t.idx[i];
            if (k == s) {
                has_s = true;
            } else if (k == a) {
                has_a = true;
            } else {
                p *= w[k];
            }
        }
        if (has_s && has_a) sum += p;
    }
    return sum;
}

namespace {

// Frank-Wolfe gap of G = F^{1/k}: max_i dG/dw_i - <grad G, w>.
double surrogate_gap(double f, std::span<const double> g, std::span<const double> w, int k) {
    if (!(f > 0.0)) return std::numeric_limits<double>::infinity();
    const double best = *std::max_element(g.begin(), g.end());
    double inner = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) inner += g[i] * w[i];
    const double scale = std::pow(f, 1.0 / k - 1.0) / k;
    return std::max(0.0, scale * (best - inner));
}

void snap_and_normalize(std::vector<double>& w) {
    for (double& x : w) {
        if (x < 1e-14) x = 0.0;
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
}

}  // namespace

OptResult ascend(const MultilinearForm& form, std::vector<double> w, double tol, int max_iter) {
    const int m = form.size();
    const int k = form.degree();
    if (static_cast<int>(w.size()) != m) throw Error(ErrorKind::InvalidArgument, "start has wrong length");
    OptResult out;
    for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
        const double f = form.value(w);
        const auto g = form.gradient(w);
        if (surrogate_gap(f, g, w, k) <= tol) break;
        int s = 0;
        int a = -1;
        for (int i = 0; i < m; ++i) {
            if (g[i] > g[s]) s = i;
            if (w[i] > 0.0 && (a < 0 || g[i] < g[a])) a = i;
        }
        const double slope = g[s] - g[a];
        if (s == a || !(slope > 0.0)) break;
        // Along w + t(e_s - e_a), F is the concave quadratic
        // F + t slope - t^2 H with H = d^2F/dw_s dw_a >= 0.
        const double h = form.cross_derivative(w, s, a);
        double t = w[a];
        bool drop = true;
        if (h > 0.0 && slope / (2.0 * h) < t) {
            t = slope / (2.0 * h);
            drop = false;
        }
        if (!(t > 0.0)) break;
        w[s] += t;
        w[a] = drop ? 0.0 : w[a] - t;
    }
    snap_and_normalize(w);
    out.objective = form.value(w);
    const auto g = form.gradient(w);
    out.gap = surrogate_gap(out.objective, g, w, k);
    out.converged = out.gap <= tol;
    out.weights = std::move(w);
    return out;
}

OptResult maximize_form(const MultilinearForm& form, const OptOptions& opts,
                        const std::vector<std::vector<double>>& extra_starts) {
    if (form.is_zero()) throw Error(ErrorKind::Degenerate, "objective vanishes on the simplex (points do not span)");
    const int m = form.size();
    std::vector<std::vector<double>> starts;
    starts.emplace_back(static_cast<std::size_t>(m), 1.0 / m);
    detail::Rng rng(opts.seed);
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<double> w(static_cast<std::size_t>(m));
        for (double& x : w) x = 1.0 + 0.5 * rng.uniform(-1.0, 1.0);
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        for (double& x : w) x /= total;
        starts.push_back(std::move(w));
    }
    for (const auto& s : extra_starts) starts.push_back(s);

    OptResult best;
    bool have = false;
    int total_iterations = 0;
    for (auto& s : starts) {
        auto r = ascend(form, std::move(s), opts.tol, opts.max_iter);
        total_iterations += r.iterations;
        if (!have || r.objective > best.objective) {
            best = std::move(r);
            have = true;
        }
    }
    best.iterations = total_iterations;
    return best;
}

MultilinearForm volume_form(std::span<const Vector> points) {
    if (points.empty()) throw Error(ErrorKind::InvalidArgument, "insufficient support");
    const int n = static_cast<int>(points.front().size());
    const int m = static_cast<int>(points.size());
    if (m < n) throw Error(ErrorKind::InvalidArgument, "insufficient support");
    MultilinearForm form(m, n);
    std::vector<Vector> cols(static_cast<std::size_t>(n));
    for_each_combination(m, n, [&](std::span<const int> s) {
        for (int i = 0; i < n; ++i) cols[i] = points[s[i]];
        form.add_term(s, std::ldexp(std::abs(determinant(cols)), n));
    });
    return form;
}

double objective(std::span<const Vector> points, std::span<const double> w) {
    if (w.size() != points.size()) throw Error(ErrorKind::InvalidArgument, "weights and points differ in length");
    return volume_form(points).value(w);
}

std::vector<double> gradient(std::span<const Vector> points, std::span<const double> w) {
    if (w.size() != points.size()) throw Error(ErrorKind::InvalidArgument, "weights and points differ in length");
    return volume_form(points).gradient(w);
}

OptResult maximize(std::span<const Vector> points, const OptOptions& opts) {
    if (static_cast<int>(points.size()) > kMaxSupport) {
        throw Error(ErrorKind::ScaleExceeded, "optimizer support exceeds " + std::to_string(kMaxSupport) + " points");
    }
    return maximize_form(volume_form(points), opts);
}

OptResult exact_oracle(std::span<const Vector> points, double resolution) {
    const int m = static_cast<int>(points.size());
    if (m > 5) throw Error(ErrorKind::ScaleExceeded, "oracle scale exceeded");
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "insufficient support");
    const int n = static_cast<int>(points.front().size());
    if (m < n) throw Error(ErrorKind::InvalidArgument, "insufficient support");
    if (!(resolution > 0.0 && resolution <= 1.0)) throw Error(ErrorKind::InvalidArgument, "bad grid resolution");

    // Own tabulation of the subset determinants, independent of volume_form.
    std::vector<std::vector<int>> subsets = combinations(m, n);
    std::vector<double> dets;
    for (const auto& s : subsets) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i) a.col(i) = points[s[i]];
        dets.push_back(std::abs(a.fullPivLu().determinant()));
    }
    const double factor = std::pow(2.0, n);
    auto eval = [&](const std::vector<double>& w) {
        double sum = 0.0;
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            double p = dets[j];
            for (int i : subsets[j]) p *= w[i];
            sum += p;
        }
        return factor * sum;
    };

    const int steps = static_cast<int>(std::lround(1.0 / resolution));
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    std::vector<double> best_w;
    double best = -1.0;
    // Enumerate all compositions of `steps` into m nonnegative parts.
    auto recurse = [&](auto&& self, int pos, int left) -> void {
        if (pos == m - 1) {
            counts[pos] = left;
            for (int i = 0; i < m; ++i) w[i] = static_cast<double>(counts[i]) / steps;
            const double v = eval(w);
            if (v > best) {
                best = v;
                best_w = w;
            }
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    recurse(recurse, 0, steps);

    // Compass search: move mass between coordinate pairs, halving the step.
    OptResult out;
    w = best_w;
    double delta = 1.0 / steps;
    while (delta > 1e-13) {
        bool improved = false;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == j || w[j] <= 0.0) continue;
                const double d = std::min(delta, w[j]);
                auto trial = w;
                trial[i] += d;
                trial[j] -= d;
                const double v = eval(trial);
                if (v > best) {
                    best = v;
                    w = std::move(trial);
                    improved = true;
                }
                ++out.iterations;
            }
        }
        if (!improved) delta *= 0.5;
    }

    // Report the surrogate gap from central differences.
    std::vector<double> g(static_cast<std::size_t>(m));
    const double h = 1e-6;
    for (int i = 0; i < m; ++i) {
        auto up = w;
        auto dn = w;
        up[i] += h;
        dn[i] -= h;
        g[i] = (eval(up) - eval(dn)) / (2.0 * h);
    }
    out.objective = best;
    out.gap = surrogate_gap(best, g, w, n);
    out.converged = true;
    out.weights = std::move(w);
    return out;
}

}  // namespace normvol
