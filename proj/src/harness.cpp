#include "normvol/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "normvol/zonoid.hpp"
#include "rng.hpp"

namespace normvol {

namespace {

constexpr double kInequalityTol = 1e-6;
constexpr double kZonoidEqualityTol = 1e-4;
constexpr int kConvexitySamplesPerBody = 10;
constexpr int kMaxRetries = 100;
constexpr int kMaxProjectionGenerators = 12;

std::string describe(int n, int m) { return "random(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"; }

void require_dim(std::string_view what, int n, std::initializer_list<int> allowed) {
    for (int a : allowed) {
        if (a == n) return;
    }
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": unsupported dimension " + std::to_string(n));
}

KVector random_kvector(detail::Rng& rng, int n, int k) {
    KVector t(n, k);
    for (double& c : t.coords) c = rng.normal();
    return t;
}

std::vector<Vector> random_vectors(detail::Rng& rng, int n, int k) {
    std::vector<Vector> out;
    for (int i = 0; i < k; ++i) {
        Vector v(n);
        for (int j = 0; j < n; ++j) v(j) = rng.normal();
        out.push_back(std::move(v));
    }
    return out;
}

void require_projection_cap(const Zonotope& z) {
    if (static_cast<int>(z.generators.size()) > kMaxProjectionGenerators) {
        throw Error(ErrorKind::ScaleExceeded, "projection body has more than " +
                                                  std::to_string(kMaxProjectionGenerators) + " generators");
    }
}

ExperimentRecord make_record(std::string experiment, int trial, std::uint64_t seed, std::string body) {
    ExperimentRecord r;
    r.experiment = std::move(experiment);
    r.trial = trial;
    r.seed = seed;
    r.body = std::move(body);
    return r;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int trial) { return seed ^ static_cast<std::uint64_t>(trial); }

SymmetricPolytope random_symmetric_polytope(int n, int m, std::uint64_t seed, bool shear) {
    if (n < 1 || n > kMaxDim) throw Error(ErrorKind::InvalidArgument, "random body: dimension out of range");
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "random body: need at least one generator");
    detail::Rng rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::vector<Vector> pts;
        for (int i = 0; i < m; ++i) {
            Vector v(n);
            for (int j = 0; j < n; ++j) v(j) = rng.normal();
            const double len = v.norm();
            if (len == 0.0) continue;
            pts.push_back(v * (rng.uniform(0.5, 1.5) / len));
        }
        if (shear) {
            Matrix g = Matrix::Identity(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) g(i, j) += 0.5 * rng.normal();
            }
            if (std::abs(determinant(g)) < 0.1) continue;
            for (auto& p : pts) p = g * p;
        }
        const double target = rng.uniform(1.0, 10.0);
        try {
            auto body = SymmetricPolytope::from_generators(n, std::move(pts));
            return scaled(body, std::pow(target / body.volume(), 1.0 / n));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Degenerate) throw;
        }
    }
    throw Error(ErrorKind::Degenerate, "random body: no full-dimensional draw after retries");
}

Zonotope random_zonotope(int n, int m, std::uint64_t seed) {
    if (n < 1 || n > kMaxDim) throw Error(ErrorKind::InvalidArgument, "random zonotope: dimension out of range");
    if (m < n) throw Error(ErrorKind::InvalidArgument, "random zonotope: need at least n generators");
    detail::Rng rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Zonotope z{n, random_vectors(rng, n, m)};
        const double vol = zonotope_volume(z);
        if (!(vol > 1e-6)) continue;
        const double t = std::pow(rng.uniform(1.0, 10.0) / vol, 1.0 / n);
        for (auto& g : z.generators) g *= t;
        return z;
    }
    throw Error(ErrorKind::Degenerate, "random zonotope: no full-dimensional draw after retries");
}

McEstimate mc_volume(const SymmetricPolytope& p, long samples, std::uint64_t seed) {
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "mc_volume: need at least one sample");
    const int n = p.dim();
    Vector half(n);
    for (int i = 0; i < n; ++i) half(i) = p.support(Vector::Unit(n, i));
    const auto& facets = p.facets();
    Matrix normals(static_cast<Eigen::Index>(facets.size()), n);
    Vector offsets(static_cast<Eigen::Index>(facets.size()));
    for (std::size_t f = 0; f < facets.size(); ++f) {
        normals.row(static_cast<Eigen::Index>(f)) = facets[f].normal.transpose();
        offsets(static_cast<Eigen::Index>(f)) = facets[f].offset;
    }
    detail::Rng rng(seed);
    Vector x(n);
    long hits = 0;
    for (long s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i) x(i) = half(i) * rng.uniform(-1.0, 1.0);
        if (((normals * x) - offsets).maxCoeff() <= 0.0) ++hits;
    }
    const double box = std::ldexp(half.prod(), n);
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

std::vector<ExperimentRecord> experiment_ordering(int n, int trials, std::uint64_t seed, const OptOptions& opts) {
    require_dim("ordering", n, {2, 3});
    std::vector<ExperimentRecord> out;
    for (int t = 0; t < trials; ++t) {
        const auto s = trial_seed(seed, t);
        const int m = n == 2 ? 2 + t % 7 : 3 + t % 4;
        const UnitBall b(random_symmetric_polytope(n, m, s));
        auto r = make_record("ordering", t, s, describe(n, m));
        const auto nv = v_new_detailed(b, opts);
        r.extras["busemann"] = v_busemann(b);
        r.extras["holmes_thompson"] = v_holmes_thompson(b);
        r.extras["mass_star"] = v_mass_star(b);
        r.extras["ivanov"] = v_ivanov(b);
        r.extras["new"] = nv.value;
        r.extras["gap"] = nv.optimum.gap;
        r.lhs = nv.value;
        r.rhs = r.extras["holmes_thompson"];
        r.margin = r.lhs - r.rhs;
        r.pass = r.margin >= -kInequalityTol;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExperimentRecord> experiment_petty_projection(int n, int trials, std::uint64_t seed) {
    require_dim("petty_projection", n, {3});
    const double bound = std::pow(unit_ball_volume(n), n) / std::pow(unit_ball_volume(n - 1), n);
    std::vector<ExperimentRecord> out;
    for (int t = 0; t < trials; ++t) {
        const auto s = trial_seed(seed, t);
        const int m = 3 + t % 4;
        const auto k = random_symmetric_polytope(n, m, s);
        auto r = make_record("petty_projection", t, s, describe(n, m));
        const auto pi = projection_body(k);
        require_projection_cap(pi);
        const double polar_volume = pi.to_polytope().polar().volume();
        r.lhs = std::pow(k.volume(), n - 1) * polar_volume;
        r.rhs = bound;
        r.margin = r.rhs - r.lhs;
        r.pass = r.margin >= -kInequalityTol;
        r.extras["projection_generators"] = static_cast<double>(pi.generators.size());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExperimentRecord> experiment_petty_conjecture(int n, int trials, std::uint64_t seed,
                                                          const OptOptions& opts) {
    require_dim("petty_conjecture", n, {3});
    const double omega = unit_ball_volume(n);
    const double factor = std::pow(omega, n - 1) / std::pow(unit_ball_volume(n - 1), n);
    std::vector<ExperimentRecord> out;
    for (int t = 0; t < trials; ++t) {
        const auto s = trial_seed(seed, t);
        const int m = 3 + t % 4;
        const UnitBall b(random_symmetric_polytope(n, m, s));
        auto r = make_record("petty_conjecture", t, s, describe(n, m));
        const double ratio = factor * zonotope_volume(projection_body(b.body)) * std::pow(b.body.volume(), 1 - n);
        r.lhs = v_new(b, opts);
        r.rhs = ratio;
        r.margin = r.lhs - r.rhs;
        r.pass = r.margin >= -kInequalityTol;
        r.conjecture_holds = ratio >= omega - kInequalityTol;
        r.extras["omega_n"] = omega;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExperimentRecord> experiment_zonoid_equality(int n, int trials, std::uint64_t seed,
                                                         const OptOptions& opts) {
    require_dim("zonoid_equality", n, {3});
    const double factor = std::pow(unit_ball_volume(n), n - 1) / std::pow(unit_ball_volume(n - 1), n);
    std::vector<ExperimentRecord> out;
    for (int t = 0; t < trials; ++t) {
        const auto s = trial_seed(seed, t);
        // Odd trials draw A from the equality class (zonotopes are projection
        // bodies in R^3); even trials draw a generic A, where only the
        // inequality is asserted.
        const bool equality_case = t % 2 == 1;
        const int m = equality_case ? 4 : 3 + (t / 2) % 2;
        const auto a = equality_case ? random_zonotope(n, m, s).to_polytope() : random_symmetric_polytope(n, m, s);
        const std::string tag = equality_case ? "zonotope(n=" + std::to_string(n) + ",m=4)" : describe(n, m);
        auto r = make_record(equality_case ? "zonoid_equality/projection" : "zonoid_equality/generic", t, s,
                             "projection_body(" + tag + ")");
        const auto pi = projection_body(a);
        const UnitBall b(pi.to_polytope());
        r.lhs = v_new(b, opts);
        r.rhs = factor * zonotope_volume(pi) * std::pow(a.volume(), 1 - n);
        r.margin = r.rhs - r.lhs;
        r.pass = r.margin >= -kInequalityTol && (!equality_case || r.margin <= kZonoidEqualityTol);
        r.extras["polar_vertices"] = static_cast<double>(b.polar.generators().size());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExperimentRecord> experiment_bp_centroid(int trials, std::uint64_t seed) {
    const double c = 4.0 / (3.0 * std::numbers::pi);
    std::vector<ExperimentRecord> out;
    for (int t = 0; t < trials; ++t) {
        const auto s = trial_seed(seed, t);
        const int m = 2 + t % 7;
        const auto k = random_symmetric_polytope(2, m, s);
        auto r = make_record("bp_centroid", t, s, describe(2, m));
        r.lhs = centroid_body_volume_2d(k);
        r.rhs = c * c * k.volume();
        r.margin = r.lhs - r.rhs;
        r.pass = r.margin >= -kInequalityTol;
        r.extras["ratio"] = r.lhs / k.volume();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExperimentRecord> experiment_convexity(const UnitBall& b, int k, int samples, std::uint64_t seed,
                                                   const std::string& body_name) {
    const int n = b.dim();
    if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "convexity: grade out of range");
    detail::Rng rng(seed);
    const auto opts = density_options(seed);
    std::vector<ExperimentRecord> out;
    for (int s = 0; s < samples; ++s) {
        const auto t1 = random_kvector(rng, n, k);
        const auto t2 = random_kvector(rng, n, k);
        auto tri = make_record("convexity/triangle", s, seed, body_name);
        tri.lhs = mu_tilde(b, t1 + t2, opts);
        tri.rhs = mu_tilde(b, t1, opts) + mu_tilde(b, t2, opts);
        tri.margin = tri.rhs - tri.lhs;
        tri.pass = tri.margin >= -kInequalityTol;
        out.push_back(std::move(tri));

        const auto a = random_vectors(rng, n, k);
        auto res = make_record("convexity/restriction", s, seed, body_name);
        res.lhs = mu_tilde(b, wedge(a), opts);
        res.rhs = induced_density(Definition::New, b, a, opts);
        res.margin = res.rhs - res.lhs;
        res.pass = std::abs(res.margin) <= kInequalityTol * std::max(1.0, std::abs(res.rhs));
        out.push_back(std::move(res));

        if (n == 3 && k == 2) {
            auto bus = make_record("convexity/busemann", s, seed, body_name);
            bus.lhs = induced_density(Definition::Busemann, b, a, opts);
            bus.rhs = res.rhs;
            bus.margin = bus.rhs - bus.lhs;
            bus.pass = std::abs(bus.margin) <= kInequalityTol * std::max(1.0, std::abs(bus.rhs));
            out.push_back(std::move(bus));
        }
    }
    return out;
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {"ordering",        "petty_projection", "petty_conjecture",
                                                   "zonoid_equality", "bp_centroid",      "convexity"};
    return names;
}

std::vector<ExperimentRecord> run_experiment(std::string_view name, int n, int trials, std::uint64_t seed,
                                             const OptOptions& opts) {
    if (trials < 0) throw Error(ErrorKind::InvalidArgument, "trials must be nonnegative");
    if (name == "ordering") return experiment_ordering(n, trials, seed, opts);
    if (name == "petty_projection") return experiment_petty_projection(n, trials, seed);
    if (name == "petty_conjecture") return experiment_petty_conjecture(n, trials, seed, opts);
    if (name == "zonoid_equality") return experiment_zonoid_equality(n, trials, seed, opts);
    if (name == "bp_centroid") {
        require_dim("bp_centroid", n, {2});
        return experiment_bp_centroid(trials, seed);
    }
    if (name == "convexity") {
        require_dim("convexity", n, {3, 4});
        std::vector<ExperimentRecord> out;
        for (int t = 0; t < trials; ++t) {
            const auto s = trial_seed(seed, t);
            const UnitBall b(random_symmetric_polytope(n, n + 1, s));
            auto recs = experiment_convexity(b, 2, kConvexitySamplesPerBody, s, describe(n, n + 1));
            for (auto& r : recs) {
                r.trial = t;
                out.push_back(std::move(r));
            }
        }
        return out;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown experiment: " + std::string(name));
}

ExperimentSummary summarize(std::string_view experiment, const std::vector<ExperimentRecord>& records) {
    ExperimentSummary s;
    s.experiment = std::string(experiment);
    s.records = static_cast<int>(records.size());
    s.min_margin = records.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        if (!r.pass) ++s.failures;
        s.min_margin = std::min(s.min_margin, r.margin);
        if (r.conjecture_holds.has_value()) {
            ++s.conjecture_observations;
            if (!*r.conjecture_holds) s.flagged_trials.push_back(r.trial);
        }
    }
    s.pass_rate = records.empty() ? 1.0 : static_cast<double>(s.records - s.failures) / s.records;
    return s;
}

}  // namespace normvol
