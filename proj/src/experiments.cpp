#include "cliqueowf/experiments.hpp"

#include "cliqueowf/analysis.hpp"
#include "cliqueowf/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cliqueowf {

namespace {

std::vector<std::pair<std::string, std::string>> config_parameters(const ExperimentConfig& config) {
    return {{"n", std::to_string(config.n)},
            {"variant", std::string(to_string(config.variant))},
            {"kind", std::string(to_string(config.kind))},
            {"trials", std::to_string(config.trials)},
            {"master_seed", std::to_string(config.master_seed)},
            {"rng", "mt19937_64/v" + std::to_string(kTrialRngVersion)}};
}

std::vector<double> column(const TrialReport& report, std::size_t index) {
    std::vector<double> values;
    values.reserve(report.rows.size());
    for (const auto& row : report.rows) {
        values.push_back(row[index]);
    }
    return values;
}

}  // namespace

Aggregates aggregate(std::span<const double> values, const std::vector<bool>& successes) {
    Aggregates agg;
    agg.count = values.size();
    if (!values.empty()) {
        agg.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        agg.min = *lo;
        agg.max = *hi;
        if (values.size() > 1) {
            double sq = 0;
            for (const double v : values) {
                sq += (v - agg.mean) * (v - agg.mean);
            }
            agg.variance = sq / static_cast<double>(values.size() - 1);
        }
    }
    if (!successes.empty()) {
        const auto hits = std::count(successes.begin(), successes.end(), true);
        agg.rate = static_cast<double>(hits) / static_cast<double>(successes.size());
        const double slack = binomial_three_sigma(agg.rate, successes.size());
        agg.rate_lo = std::max(0.0, agg.rate - slack);
        agg.rate_hi = std::min(1.0, agg.rate + slack);
    }
    return agg;
}

double binomial_three_sigma(double p, std::uint64_t trials) {
    if (trials == 0) {
        return 0;
    }
    return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double TrialReport::summary_value(std::string_view key) const {
    for (const auto& [k, v] : summary) {
        if (k == key) {
            return v;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no summary entry '" + std::string(key) + "'");
}

std::string TrialReport::to_csv() const {
    std::string out = "# experiment=" + experiment;
    for (const auto& [k, v] : parameters) {
        out += fmt::format(" {}={}", k, v);
    }
    out += "\ntrial_index";
    for (const auto& name : columns) {
        out += "," + name;
    }
    out += "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += std::to_string(i);
        for (const double v : rows[i]) {
            out += fmt::format(",{}", v);
        }
        out += "\n";
    }
    out += fmt::format("summary,trials={},mean={},variance={},min={},max={},rate={},rate_lo={},rate_hi={}",
                       metric.count, metric.mean, metric.variance, metric.min, metric.max, metric.rate,
                       metric.rate_lo, metric.rate_hi);
    for (const auto& [k, v] : summary) {
        out += fmt::format(",{}={}", k, v);
    }
    out += "\n";
    return out;
}

RandomString trial_random_string(const ParamSet& params, VariantTag variant, HashKind kind, TrialRng& rng) {
    const std::size_t bits = required_bits(params, variant, kind);
    return RandomString(rng.bytes((bits + 7) / 8));
}

TrialReport univalence_trials(const ExperimentConfig& config, std::uint64_t max_subsets) {
    const ParamSet params = derive_params(config.n);
    if (binomial(BigInt(config.n), params.c) > max_subsets) {
        throw Error(ErrorCode::GuardExceeded, "C(n, c) exceeds the preimage guard");
    }
    TrialReport report;
    report.experiment = "univalence";
    report.parameters = config_parameters(config);
    report.columns = {"preimages", "spurious", "seed_found", "max_density"};

    std::vector<bool> spurious;
    bool seed_always_found = true;
    double max_density = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        TrialRng rng(config.master_seed, t);
        const Generation gen = generate(config.variant, trial_random_string(params, config.variant, config.kind, rng),
                                        config.n, config.kind);
        const std::vector<Solution> preimages = count_preimages(gen.instance, max_subsets);
        const bool found = std::any_of(preimages.begin(), preimages.end(), [&](const Solution& s) {
            return s.vertices == gen.seed.vertices;
        });
        double density = 0;
        for (const BitArray& arr : gen.instance.arrays) {
            density = std::max(density, arr.density().value());
        }
        seed_always_found = seed_always_found && found;
        max_density = std::max(max_density, density);
        spurious.push_back(preimages.size() > 1);
        report.rows.push_back({static_cast<double>(preimages.size()), preimages.size() > 1 ? 1.0 : 0.0,
                               found ? 1.0 : 0.0, density});
    }
    const std::vector<double> counts = column(report, 0);
    report.metric = aggregate(counts, spurious);

    const double bound = max_density > 0
                             ? std::min(1.0L, spurious_sum(params.c, max_density, BigInt(config.n)).probability())
                             : 0.0;
    report.summary = {{"seed_always_found", seed_always_found ? 1.0 : 0.0},
                      {"max_density", max_density},
                      {"bound", static_cast<double>(bound)},
                      {"bound_plus_3sigma", bound + binomial_three_sigma(bound, config.trials)}};
    return report;
}

TrialReport gnp_spurious_trials(std::uint64_t n, double alpha, std::uint64_t trials, std::uint64_t master_seed) {
    const unsigned c = exact_log2(n);
    if (n > 64) {
        throw Error(ErrorCode::GuardExceeded, "random-graph trials support n <= 64");
    }
    if (c < 2) {
        throw Error(ErrorCode::TooSmall, "need n >= 4");
    }
    if (!(alpha >= 0 && alpha <= 1)) {
        throw Error(ErrorCode::DomainError, "alpha must lie in [0, 1]");
    }
    TrialReport report;
    report.experiment = "gnp";
    report.parameters = {{"n", std::to_string(n)},
                         {"alpha", fmt::format("{}", alpha)},
                         {"trials", std::to_string(trials)},
                         {"master_seed", std::to_string(master_seed)},
                         {"rng", "mt19937_64/v" + std::to_string(kTrialRngVersion)}};
    report.columns = {"spurious", "edges"};

    std::vector<bool> spurious;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(master_seed, t);
        // Partial Fisher-Yates picks the planted vertices.
        std::vector<Vertex> pool(n);
        std::iota(pool.begin(), pool.end(), Vertex{1});
        for (unsigned i = 0; i < c; ++i) {
            std::swap(pool[i], pool[i + rng.below(n - i)]);
        }
        std::vector<Vertex> planted(pool.begin(), pool.begin() + c);
        std::sort(planted.begin(), planted.end());
        std::vector<bool> in_clique(n + 1, false);
        for (const Vertex v : planted) {
            in_clique[v] = true;
        }

        ExplicitGraph g(n);
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                if ((in_clique[u] && in_clique[v]) || rng.bernoulli(alpha)) {
                    g.add_edge(u, v);
                }
            }
        }
        bool found = false;
        for_each_clique(g, c, [&](std::span<const Vertex> clique) {
            found = !std::equal(clique.begin(), clique.end(), planted.begin(), planted.end());
            return !found;
        });
        spurious.push_back(found);
        report.rows.push_back({found ? 1.0 : 0.0, static_cast<double>(g.edge_count())});
    }
    const std::vector<double> flags = column(report, 0);
    report.metric = aggregate(flags, spurious);
    const double bound = static_cast<double>(std::min(1.0L, spurious_sum(c, alpha, BigInt(n)).probability()));
    report.summary = {{"bound", bound}, {"bound_plus_3sigma", bound + binomial_three_sigma(bound, trials)}};
    return report;
}

double first_hit_expectation(std::uint64_t total_pairs, std::uint64_t marked_pairs) {
    return static_cast<double>(total_pairs + 1) / static_cast<double>(marked_pairs + 1);
}

AttackTrial run_query_attack(std::uint64_t n, std::span<const Vertex> clique,
                             const std::function<bool(Vertex, Vertex)>& oracle, TrialRng& rng) {
    std::vector<bool> in_clique(n + 1, false);
    for (const Vertex v : clique) {
        in_clique.at(v) = true;
    }
    const std::uint64_t total = n * (n - 1) / 2;
    const std::uint64_t marked = clique.size() * (clique.size() - 1) / 2;
    // Pair index i <-> (u, v) by row-major order over u < v.
    std::vector<std::uint32_t> order(total);
    std::iota(order.begin(), order.end(), 0U);
    std::vector<Vertex> row_start(n + 1, 0);
    for (Vertex u = 1; u < n; ++u) {
        row_start[u + 1] = row_start[u] + (n - u);
    }

    AttackTrial result;
    std::uint64_t hits = 0;
    for (std::uint64_t q = 0; q < total && hits < marked; ++q) {
        std::swap(order[q], order[q + rng.below(total - q)]);
        const std::uint64_t idx = order[q];
        const Vertex u = static_cast<Vertex>(std::upper_bound(row_start.begin() + 1, row_start.end(), idx) -
                                             row_start.begin()) - 1;
        const Vertex v = u + 1 + (idx - row_start[u]);
        const bool positive = oracle(u, v);
        const bool clique_edge = in_clique[u] && in_clique[v];
        if (clique_edge) {
            if (hits == 0) {
                result.queries_to_first_hit = q + 1;
            }
            ++hits;
            if (hits == marked) {
                result.queries_to_all_hits = q + 1;
            }
        } else if (positive && hits == 0) {
            ++result.false_positives;
        }
    }
    return result;
}

TrialReport attack_simulation(const ExperimentConfig& config, AttackStrategy /*strategy*/) {
    if (config.variant == VariantTag::Masked) {
        throw Error(ErrorCode::UnqueryableVariant, "masked instances cannot answer edge queries");
    }
    if (config.n > kDefaultMaterializeGuard) {
        throw Error(ErrorCode::GuardExceeded, "attack simulation supports n <= 4096");
    }
    const ParamSet params = derive_params(config.n);
    TrialReport report;
    report.experiment = "attack";
    report.parameters = config_parameters(config);
    report.parameters.emplace_back("strategy", "uniform_without_replacement");
    report.columns = {"queries_to_first_hit", "false_positives", "queries_to_all_clique_edges"};

    for (std::uint64_t t = 0; t < config.trials; ++t) {
        TrialRng rng(config.master_seed, t);
        const Generation gen = generate(config.variant, trial_random_string(params, config.variant, config.kind, rng),
                                        config.n, config.kind);
        const EdgeOracle oracle(gen.instance, &gen.context);
        const AttackTrial trial = run_query_attack(
            config.n, gen.seed.vertices, [&oracle](Vertex u, Vertex v) { return oracle.has_edge(u, v); }, rng);
        report.rows.push_back({static_cast<double>(trial.queries_to_first_hit),
                               static_cast<double>(trial.false_positives),
                               static_cast<double>(trial.queries_to_all_hits)});
    }
    const std::vector<double> first = column(report, 0);
    report.metric = aggregate(first);
    const std::uint64_t total = config.n * (config.n - 1) / 2;
    const double expected = first_hit_expectation(total, params.ec);
    const double relative = expected > 0 && !first.empty() ? std::fabs(report.metric.mean - expected) / expected : 0;
    report.summary = {{"expected", expected}, {"relative_error", relative}};
    return report;
}

TrialReport density_experiment(const ExperimentConfig& config) {
    const ParamSet params = derive_params(config.n);
    const std::size_t arrays = params.array_count(config.variant);
    TrialReport report;
    report.experiment = "density";
    report.parameters = config_parameters(config);
    report.columns = {"mean_density"};
    for (std::size_t i = 1; i <= arrays; ++i) {
        report.columns.push_back("density_" + std::to_string(i));
    }
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        TrialRng rng(config.master_seed, t);
        const Instance inst = generate(config.variant,
                                       trial_random_string(params, config.variant, config.kind, rng),
                                       config.n, config.kind)
                                  .instance;
        std::vector<double> row{0.0};
        for (const BitArray& arr : inst.arrays) {
            row.push_back(arr.density().value());
            row[0] += row.back();
        }
        row[0] /= static_cast<double>(inst.arrays.size());
        report.rows.push_back(std::move(row));
    }
    const std::vector<double> means = column(report, 0);
    report.metric = aggregate(means);
    const double cap = static_cast<double>(params.ec) / static_cast<double>(params.array_length(config.variant));
    report.summary = {{"popcount_cap", std::min(1.0, cap)}};
    return report;
}

}  // namespace cliqueowf
