#pragma once

// Random instances, Monte Carlo oracles and the inequality experiments.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normvol/body.hpp"
#include "normvol/voldefs.hpp"
#include "normvol/zonoid.hpp"

namespace normvol {

/// One trial of an experiment. `pass` always reflects a proved inequality
/// checked at the experiment tolerance; observations about open conjectures
/// go to `conjecture_holds` and never affect `pass`.
struct ExperimentRecord {
    std::string experiment;
    int trial = 0;
    std::uint64_t seed = 0;
    std::string body;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::optional<bool> conjecture_holds;
    std::map<std::string, double> extras;
};

struct ExperimentSummary {
    std::string experiment;
    int records = 0;
    int failures = 0;
    double pass_rate = 0.0;
    double min_margin = 0.0;
    int conjecture_observations = 0;
    std::vector<int> flagged_trials;  // trials where an observed conjecture failed
};

/// m vertex representatives: Gaussian directions with radii in [0.5, 1.5],
/// optionally sheared, then rescaled to a volume drawn from [1, 10].
/// Retries degenerate draws up to 100 times.
SymmetricPolytope random_symmetric_polytope(int n, int m, std::uint64_t seed, bool shear = true);

/// m Gaussian generators, rescaled to a volume drawn from [1, 10].
Zonotope random_zonotope(int n, int m, std::uint64_t seed);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Rejection sampling in the bounding box [-h(e_i), h(e_i)].
McEstimate mc_volume(const SymmetricPolytope& p, long samples, std::uint64_t seed);

/// Per-trial seed: seed XOR trial index.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

std::vector<ExperimentRecord> experiment_ordering(int n, int trials, std::uint64_t seed, const OptOptions& opts = {});
std::vector<ExperimentRecord> experiment_petty_projection(int n, int trials, std::uint64_t seed);
std::vector<ExperimentRecord> experiment_petty_conjecture(int n, int trials, std::uint64_t seed,
                                                          const OptOptions& opts = {});
/// B = Pi A. Every trial asserts the upper bound; odd trials take A from the
/// equality class (a random zonotope) and also assert equality within 1e-4.
std::vector<ExperimentRecord> experiment_zonoid_equality(int n, int trials, std::uint64_t seed,
                                                         const OptOptions& opts = {});
std::vector<ExperimentRecord> experiment_bp_centroid(int trials, std::uint64_t seed);
/// Triangle inequality of mu~_k on random pairs, restriction consistency with
/// the section-based density, and (n = 3, k = 2) agreement with Busemann.
std::vector<ExperimentRecord> experiment_convexity(const UnitBall& b, int k, int samples, std::uint64_t seed,
                                                   const std::string& body_name = "body");

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Sweep driver; for "convexity" each trial draws a random body with k = 2.
std::vector<ExperimentRecord> run_experiment(std::string_view name, int n, int trials, std::uint64_t seed,
                                             const OptOptions& opts = {});

ExperimentSummary summarize(std::string_view experiment, const std::vector<ExperimentRecord>& records);

}  // namespace normvol
