#include "normvol/voldefs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "normvol/zonoid.hpp"

namespace normvol {

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

std::string_view to_string(Definition d) {
    switch (d) {
        case Definition::Busemann: return "busemann";
        case Definition::HolmesThompson: return "holmes_thompson";
        case Definition::MassStar: return "mass_star";
        case Definition::Ivanov: return "ivanov";
        case Definition::New: return "new";
    }
    return "unknown";
}

Definition parse_definition(std::string_view name) {
    for (auto d : all_definitions()) {
        if (to_string(d) == name) return d;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown definition of volume: " + std::string(name));
}

std::vector<Definition> all_definitions() {
    return {Definition::Busemann, Definition::HolmesThompson, Definition::MassStar, Definition::Ivanov,
            Definition::New};
}

UnitBall::UnitBall(SymmetricPolytope b) : body(std::move(b)), polar(body.polar()) {}

OptOptions density_options(std::uint64_t seed) {
    OptOptions o;
    o.restarts = kDensityRestarts;
    o.seed = seed;
    return o;
}

double new_volume_constant(int n) {
    return std::pow(unit_ball_volume(n), n - 1) / std::pow(unit_ball_volume(n - 1), n) * std::pow(0.5 * n, n);
}

double density_constant(int k) {
    return std::pow(unit_ball_volume(k), k - 1) / std::pow(unit_ball_volume(k - 1), k) * std::pow(k, k) /
           factorial(k);
}

double isoperimetrix_constant(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "isoperimetrix needs n >= 2");
    return std::pow(unit_ball_volume(n - 1), n - 2) / std::pow(unit_ball_volume(n - 2), n - 1) *
           std::pow(n - 1, n - 1) / factorial(n - 1);
}

double v_busemann(const UnitBall& b) { return unit_ball_volume(b.dim()); }

double v_holmes_thompson(const UnitBall& b) {
    return b.body.volume() * b.polar.volume() / unit_ball_volume(b.dim());
}

double v_mass_star(const UnitBall& b) {
    // A circumscribed parallelotope {|xi_i(x)| <= 1} with xi_i in B° has
    // volume 2^n / |det xi|; the max of |det| over (B°)^n sits at vertices.
    const auto& pts = b.polar.generators();
    const int n = b.dim();
    double best = 0.0;
    std::vector<Vector> cols(static_cast<std::size_t>(n));
    for_each_combination(static_cast<int>(pts.size()), n, [&](std::span<const int> s) {
        for (int i = 0; i < n; ++i) cols[i] = pts[s[i]];
        best = std::max(best, std::abs(determinant(cols)));
    });
    return b.body.volume() * best;
}

Matrix john_ellipsoid_dual_shape(const UnitBall& b, double tol, int max_rounds) {
    // Minimum-volume centered ellipsoid around +-xi_i by Khachiyan steps with
    // Todd-Yildirim away steps on the design weights u.
    const auto& pts = b.polar.generators();
    const int n = b.dim();
    const auto m = pts.size();
    std::vector<double> u(m, 1.0 / static_cast<double>(m));
    std::vector<double> kappa(m);
    Matrix inv;
    for (int round = 0;; ++round) {
        Matrix moment = Matrix::Zero(n, n);
        for (std::size_t i = 0; i < m; ++i) moment += u[i] * pts[i] * pts[i].transpose();
        inv = moment.inverse();
        std::size_t up = 0;
        std::size_t down = m;
        for (std::size_t i = 0; i < m; ++i) {
            kappa[i] = pts[i].dot(inv * pts[i]);
            if (kappa[i] > kappa[up]) up = i;
            if (u[i] > 0.0 && (down == m || kappa[i] < kappa[down])) down = i;
        }
        const double rise = kappa[up] / n - 1.0;
        const double fall = 1.0 - kappa[down] / n;
        if (std::max(rise, fall) <= tol) break;
        if (round >= max_rounds) throw Error(ErrorKind::NotConverged, "John ellipsoid iteration did not converge");
        std::size_t j = up;
        double step = 0.0;
        if (rise >= fall) {
            step = (kappa[up] - n) / (n * (kappa[up] - 1.0));
        } else {
            j = down;
            const double floor = -u[down] / (1.0 - u[down]);
            step = kappa[down] > 1.0 ? std::max(floor, (kappa[down] - n) / (n * (kappa[down] - 1.0))) : floor;
        }
        for (auto& x : u) x *= 1.0 - step;
        u[j] += step;
        if (u[j] < 0.0) u[j] = 0.0;
    }
    const double kmax = *std::max_element(kappa.begin(), kappa.end());
    return inv / kmax;
}

double v_ivanov(const UnitBall& b) {
    // John(B) = {x : x^T A^{-1} x <= 1} has volume omega_n sqrt(det A).
    const Matrix a = john_ellipsoid_dual_shape(b);
    return b.body.volume() / std::sqrt(determinant(a));
}

NewVolume v_new_detailed(const UnitBall& b, const OptOptions& opts) {
    NewVolume out;
    out.optimum = maximize(b.polar.generators(), opts);
    out.value = new_volume_constant(b.dim()) * b.body.volume() * out.optimum.objective;
    return out;
}

double v_new(const UnitBall& b, const OptOptions& opts) { return v_new_detailed(b, opts).value; }

double volume_invariant(Definition d, const UnitBall& b, const OptOptions& opts) {
    switch (d) {
        case Definition::Busemann: return v_busemann(b);
        case Definition::HolmesThompson: return v_holmes_thompson(b);
        case Definition::MassStar: return v_mass_star(b);
        case Definition::Ivanov: return v_ivanov(b);
        case Definition::New: return v_new(b, opts);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown definition");
}

VolumeReport compute_report(const UnitBall& b, std::string body_id, std::span<const Definition> defs,
                            const OptOptions& opts) {
    VolumeReport report;
    report.body_id = std::move(body_id);
    for (auto d : defs) {
        if (d == Definition::New) {
            auto nv = v_new_detailed(b, opts);
            report.values[std::string(to_string(d))] = nv.value;
            report.new_optimum = std::move(nv.optimum);
        } else {
            report.values[std::string(to_string(d))] = volume_invariant(d, b, opts);
        }
    }
    return report;
}

double induced_density(Definition d, const UnitBall& b, std::span<const Vector> a, const OptOptions& opts) {
    const int n = b.dim();
    const int k = static_cast<int>(a.size());
    if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "density grade out of range");
    for (const auto& v : a) {
        if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "density: vector dimension mismatch");
    }
    if (k == 1) {
        if (a[0].norm() == 0.0) throw Error(ErrorKind::Degenerate, "density of the zero vector");
        return b.body.norm(a[0]);
    }
    if (k == n) {
        const double leb = std::abs(determinant(a));
        if (!(leb > 0.0)) throw Error(ErrorKind::Degenerate, "density: dependent vectors");
        return volume_invariant(d, b, opts) * leb / b.body.volume();
    }
    // In the coordinates of the basis a, the k-vector a has Lebesgue measure 1.
    const UnitBall section(b.body.section(a));
    return volume_invariant(d, section, opts) / section.body.volume();
}

DensityValue mu_tilde_detailed(const UnitBall& b, const KVector& tau, const OptOptions& opts) {
    const int n = b.dim();
    const int k = tau.grade;
    if (tau.dim != n) throw Error(ErrorKind::InvalidArgument, "mu~: k-vector dimension mismatch");
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "mu~: grade must be at least 1");
    const auto& pts = b.polar.generators();
    const int m = static_cast<int>(pts.size());
    if (k == 1) {
        // Linear objective: the maximum sits at the best vertex of the simplex.
        const Vector v = Eigen::Map<const Vector>(tau.coords.data(), n);
        DensityValue out;
        out.optimum.weights.assign(static_cast<std::size_t>(m), 0.0);
        int best = 0;
        for (int i = 0; i < m; ++i) {
            if (std::abs(pts[i].dot(v)) > std::abs(pts[best].dot(v))) best = i;
        }
        out.optimum.weights[best] = 1.0;
        out.optimum.objective = std::abs(pts[best].dot(v));
        out.optimum.converged = true;
        if (out.optimum.objective == 0.0) throw Error(ErrorKind::Degenerate, "mu~: objective vanishes (zero k-vector)");
        out.value = density_constant(1) * out.optimum.objective;
        return out;
    }
    if (m > kMaxSupport) throw Error(ErrorKind::ScaleExceeded, "mu~: polar has too many vertices");

    MultilinearForm form(m, k);
    const double kfact = factorial(k);
    std::vector<Vector> sel(static_cast<std::size_t>(k));
    double best_coeff = 0.0;
    std::vector<int> best_subset;
    for_each_combination(m, k, [&](std::span<const int> s) {
        for (int i = 0; i < k; ++i) sel[i] = pts[s[i]];
        const double c = kfact * std::abs(pair(wedge(sel), tau));
        form.add_term(s, c);
        if (c > best_coeff) {
            best_coeff = c;
            best_subset.assign(s.begin(), s.end());
        }
    });
    if (form.is_zero()) throw Error(ErrorKind::Degenerate, "mu~: objective vanishes (zero k-vector)");
    // Off the simple cone the k-th root need not be concave; also start from
    // the heaviest single subset.
    std::vector<std::vector<double>> extra;
    std::vector<double> start(static_cast<std::size_t>(m), 0.0);
    for (int i : best_subset) start[i] = 1.0 / k;
    extra.push_back(std::move(start));

    DensityValue out;
    out.optimum = maximize_form(form, opts, extra);
    out.value = density_constant(k) * out.optimum.objective;
    return out;
}

double mu_tilde(const UnitBall& b, const KVector& tau, const OptOptions& opts) {
    return mu_tilde_detailed(b, tau, opts).value;
}

double isoperimetrix_support(const UnitBall& b, const Vector& xi, const OptOptions& opts) {
    if (b.dim() < 2) throw Error(ErrorKind::InvalidArgument, "isoperimetrix needs n >= 2");
    if (xi.size() != b.dim()) throw Error(ErrorKind::InvalidArgument, "isoperimetrix: dimension mismatch");
    if (xi.norm() == 0.0) return 0.0;
    return mu_tilde(b, complement_vector(xi), opts);
}

KVector facet_vector(const FacetData& facet, int dim) {
    std::vector<Vector> edges;
    const Vector& origin = facet.vertices.front();
    for (const auto& v : facet.vertices) {
        if (static_cast<int>(edges.size()) == dim - 1) break;
        edges.push_back(v - origin);
        Matrix m(dim, static_cast<Eigen::Index>(edges.size()));
        for (std::size_t j = 0; j < edges.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = edges[j];
        if (rank(m, 1e-9) < static_cast<int>(edges.size())) edges.pop_back();
    }
    if (static_cast<int>(edges.size()) != dim - 1) throw Error(ErrorKind::Degenerate, "facet does not span a hyperplane");
    KVector w = wedge(edges);
    return (facet.area / w.norm()) * w;
}

double mu_surface_area(const UnitBall& b, const SymmetricPolytope& k, const OptOptions& opts) {
    if (k.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "surface area: dimension mismatch");
    if (k.dim() < 2) throw Error(ErrorKind::InvalidArgument, "surface area needs n >= 2");
    double total = 0.0;
    for (const auto* f : k.facet_representatives()) total += 2.0 * mu_tilde(b, facet_vector(*f, k.dim()), opts);
    return total;
}

double isoperimetrix_mixed_area(const UnitBall& b, const SymmetricPolytope& k, const OptOptions& opts) {
    if (k.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "surface area: dimension mismatch");
    return k.dim() * mixed_volume_v1(k, [&](const Vector& u) { return isoperimetrix_support(b, u, opts); });
}

}  // namespace normvol
