#pragma once

#include <cstdint>
#include <vector>

#include "mcda/core.hpp"

namespace mcda {

/// Noise models for the perturbation experiments.
enum class NoiseModel { MultiplicativeUniform };

std::string_view to_token(NoiseModel m);
NoiseModel noise_model_from_token(std::string_view tok);

/// Monte Carlo design for the stability sweep.
struct PerturbationConfig {
    std::vector<double> epsilon_grid;     // perturbation levels, each in (0,1)
    int iterations_per_level = 1000;
    std::uint64_t master_seed = 42;
    NoiseModel noise_model = NoiseModel::MultiplicativeUniform;

    /// The published defaults: epsilon 0.01..0.25 in steps of 0.01, 1000
    /// iterations per level, seed 42.
    static PerturbationConfig defaults();
};

/// Builds an epsilon grid from min/max/step.
std::vector<double> make_epsilon_grid(double min, double max, double step);

/// Stability of one (method, epsilon) cell: S = 1/(1 + mu_delta), with
/// mu_delta the mean relative weight change over all iterations, plus 95%
/// percentile bounds over the per-iteration stability values.
struct StabilityRecord {
    WeightMethod method = WeightMethod::SD;
    double epsilon = 0.0;
    double score = 1.0;                // S
    double mean_relative_change = 0.0; // mu_delta
    double ci_lower = 1.0;             // 2.5th percentile of iteration-level S
    double ci_upper = 1.0;             // 97.5th percentile
};

/// Mean/median/std/variance/min/max of a method's stability scores over the
/// epsilon grid (sample statistics).
struct StabilitySummary {
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;
    double variance = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct StabilityReport {
    std::vector<WeightMethod> methods;
    std::vector<double> epsilon_grid;
    std::vector<StabilityRecord> records;    // method-major, then epsilon
    std::vector<StabilitySummary> summaries; // parallel to methods
    NormScheme scheme = NormScheme::Vector;
    NoiseModel noise_model = NoiseModel::MultiplicativeUniform;
    std::uint64_t master_seed = 0;
    int iterations_per_level = 0;

    const StabilityRecord& record(std::size_t method_index, std::size_t eps_index) const {
        return records[method_index * epsilon_grid.size() + eps_index];
    }
    const StabilitySummary& summary(WeightMethod m) const;
};

/// Deterministic stream id for (method index, epsilon index, iteration), so
/// results cannot depend on execution order.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t method_index,
                                 std::uint64_t epsilon_index, std::uint64_t iteration);

/// Multiplicative uniform noise: every entry becomes x (1 + u) with
/// u ~ Uniform(-epsilon, +epsilon) drawn from a stream fully determined by
/// the seed. epsilon = 0 returns the input bit-identically.
DecisionMatrix perturb(const DecisionMatrix& matrix, double epsilon, std::uint64_t seed);

/// Full perturbation sweep: baseline weights from the unperturbed matrix,
/// then for every (method, epsilon, iteration) perturb the raw matrix,
/// renormalize with the scheme and recompute weights. Incompatible
/// (method, scheme) pairs are rejected before any computation. Deterministic
/// given the master seed regardless of parallel execution.
StabilityReport stability_sweep(const DecisionMatrix& matrix,
                                std::span<const WeightMethod> methods, NormScheme scheme,
                                const PerturbationConfig& cfg);

/// One agglomerative merge; ids follow the usual linkage convention (leaves
/// are 0..p-1, the i-th merge creates node p+i).
struct ClusterMerge {
    int left = 0;
    int right = 0;
    double height = 0.0;
    int size = 0;
};

struct ClusterResult {
    std::vector<WeightMethod> methods;
    Grid features;                    // p x 2: mean stability, stability variance
    Grid standardized;                // z-scored features used for distances
    std::vector<ClusterMerge> merges; // exactly p-1
    int k = 1;
    std::vector<int> labels;          // flat clustering, 0..k-1
    std::vector<double> silhouettes;  // per method; 0 for singletons
    double average_silhouette = 0.0;
};

/// Ward's minimum-variance clustering of the methods on z-scored
/// (mean stability, stability variance) features, cut into k flat clusters,
/// with Euclidean silhouette validation.
ClusterResult cluster_methods(const StabilityReport& report, int k);

/// Picks k in {2, 3} by maximum average silhouette (ties prefer 2). With
/// exactly two methods, returns 2.
int choose_cluster_count(const StabilityReport& report);

/// Members of the cluster with the highest mean stability, ordered by mean
/// stability descending.
std::vector<WeightMethod> select_stable_methods(const ClusterResult& clusters,
                                                const StabilityReport& report);

} // namespace mcda
