#pragma once

#include "cliqueowf/bitfield.hpp"
#include "cliqueowf/owf.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace cliqueowf {

inline constexpr std::uint64_t kDefaultMaterializeGuard = 4096;
inline constexpr std::uint64_t kDefaultCliqueSubsetGuard = 1'000'000'000;
inline constexpr std::uint64_t kDefaultPreimageGuard = 10'000'000;

/// Symmetric adjacency bit matrix over vertices 1..n, no self-loops.
class ExplicitGraph {
public:
    explicit ExplicitGraph(std::uint64_t n);

    [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
    void add_edge(Vertex u, Vertex v);
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] std::uint64_t edge_count() const;

    /// Neighbourhood of v as a bitset over 0-based vertex indices.
    [[nodiscard]] std::span<const std::uint64_t> row(Vertex v) const;
    [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

    static ExplicitGraph complete(std::uint64_t n);

private:
    void check(Vertex u, Vertex v) const;

    std::uint64_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Queries every pair once. Throws GuardExceeded when n > guard.
ExplicitGraph materialize(const EdgeOracle& oracle, std::uint64_t guard = kDefaultMaterializeGuard);
ExplicitGraph materialize(const Instance& inst, const SpecsContext* context = nullptr,
                          std::uint64_t guard = kDefaultMaterializeGuard);

struct CliqueSearchOptions {
    /// Extend partial cliques only through common neighbours. When off, every
    /// size-subset is tested and `max_subsets` bounds C(n, size).
    bool pruning = true;
    std::uint64_t max_subsets = kDefaultCliqueSubsetGuard;
};

/// Visits every clique of exactly `size` vertices in lexicographic order.
/// The visitor returns false to stop early.
void for_each_clique(const ExplicitGraph& g, unsigned size,
                     const std::function<bool(std::span<const Vertex>)>& visit,
                     const CliqueSearchOptions& options = {});

std::vector<std::vector<Vertex>> find_cliques(const ExplicitGraph& g, unsigned size,
                                              const CliqueSearchOptions& options = {});

/// Every c-subset that regenerates the instance. Throws GuardExceeded when
/// C(n, c) > max_subsets.
std::vector<Solution> count_preimages(const Instance& inst,
                                      std::uint64_t max_subsets = kDefaultPreimageGuard);

struct ExactDensity {
    std::uint64_t guard = kDefaultMaterializeGuard;
};

struct SampledDensity {
    std::uint64_t count = 0;
    std::uint64_t rng_seed = 0;
};

using DensityMode = std::variant<ExactDensity, SampledDensity>;

/// Fraction of vertex pairs that are edges of the implicit graph: all C(n,2)
/// pairs in exact mode, `count` uniform pairs (with replacement) when sampled.
Density measure_density(const Instance& inst, const DensityMode& mode,
                        const SpecsContext* context = nullptr);

}  // namespace cliqueowf
