#pragma once

#include "cliqueowf/core.hpp"
#include "cliqueowf/graph_oracle.hpp"
#include "cliqueowf/owf.hpp"
#include "cliqueowf/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliqueowf {

struct Aggregates {
    std::uint64_t count = 0;
    double mean = 0;
    double variance = 0;  // unbiased; 0 for fewer than two samples
    double min = 0;
    double max = 0;
    double rate = 0;      // fraction of successes, when the experiment has one
    double rate_lo = 0;   // rate -/+ 3 binomial sigma, clipped to [0, 1]
    double rate_hi = 0;
};

Aggregates aggregate(std::span<const double> values, const std::vector<bool>& successes = {});

/// 3 sqrt(p (1-p) / trials); 0 when trials == 0.
double binomial_three_sigma(double p, std::uint64_t trials);

/// Reproducible report. Per-trial randomness comes from TrialRng(master_seed, trial_index).
///
/// CSV layout (LF-terminated):
///   # experiment=<id> <key>=<value> ...           parameters, in insertion order
///   trial_index,<column>,...                      header
///   <i>,<value>,...                               one row per trial, index order
///   summary,<key>=<value>,...                     aggregates then reference values
struct TrialReport {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    Aggregates metric;
    std::vector<std::pair<std::string, double>> summary;

    [[nodiscard]] double summary_value(std::string_view key) const;
    [[nodiscard]] std::string to_csv() const;
};

struct ExperimentConfig {
    std::uint64_t n = 16;
    VariantTag variant = VariantTag::Basic;
    HashKind kind = HashKind::CarterWegman;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
};

/// Exactly enough random bytes for one generation at (params, variant, kind).
RandomString trial_random_string(const ParamSet& params, VariantTag variant, HashKind kind, TrialRng& rng);

/// Generates an instance per trial and counts every c-subset that regenerates
/// it. Metric: preimage count; rate: fraction of trials with a second preimage.
/// Summary carries the union bound evaluated at the largest measured density.
TrialReport univalence_trials(const ExperimentConfig& config,
                              std::uint64_t max_subsets = kDefaultPreimageGuard);

/// Planted c-clique in a graph whose other pairs are independent Bernoulli(alpha)
/// edges; rate: fraction of trials containing a second c-clique. n <= 64.
TrialReport gnp_spurious_trials(std::uint64_t n, double alpha, std::uint64_t trials,
                                std::uint64_t master_seed);

enum class AttackStrategy { UniformWithoutReplacement };

struct AttackTrial {
    std::uint64_t queries_to_first_hit = 0;   // first query on a planted-clique edge
    std::uint64_t false_positives = 0;        // positive answers on non-clique pairs before it
    std::uint64_t queries_to_all_hits = 0;    // until every clique edge was queried
};

/// Queries distinct uniformly random pairs of [1, n] in random order.
AttackTrial run_query_attack(std::uint64_t n, std::span<const Vertex> clique,
                             const std::function<bool(Vertex, Vertex)>& oracle, TrialRng& rng);

/// (N + 1) / (K + 1): expected position of the first of K marked items in a
/// uniform random order of N.
double first_hit_expectation(std::uint64_t total_pairs, std::uint64_t marked_pairs);

TrialReport attack_simulation(const ExperimentConfig& config,
                              AttackStrategy strategy = AttackStrategy::UniformWithoutReplacement);

/// Per-array density popcount/m per trial. Metric: mean over the arrays.
TrialReport density_experiment(const ExperimentConfig& config);

}  // namespace cliqueowf
