#include "cliqueowf/graph_oracle.hpp"

#include "cliqueowf/bigint.hpp"
#include "cliqueowf/error.hpp"
#include "cliqueowf/rng.hpp"

#include <bit>
#include <string>

namespace cliqueowf {

ExplicitGraph::ExplicitGraph(std::uint64_t n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

void ExplicitGraph::check(Vertex u, Vertex v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) {
        throw Error(ErrorCode::OutOfRange, "vertex outside [1, n]");
    }
    if (u == v) {
        throw Error(ErrorCode::InvalidArgument, "self-loops are not representable");
    }
}

void ExplicitGraph::add_edge(Vertex u, Vertex v) {
    check(u, v);
    bits_[(u - 1) * words_ + (v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    bits_[(v - 1) * words_ + (u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
}

bool ExplicitGraph::has_edge(Vertex u, Vertex v) const {
    check(u, v);
    return ((bits_[(u - 1) * words_ + (v - 1) / 64] >> ((v - 1) % 64)) & 1U) != 0;
}

std::uint64_t ExplicitGraph::edge_count() const {
    std::uint64_t total = 0;
    for (const std::uint64_t w : bits_) {
        total += static_cast<std::uint64_t>(std::popcount(w));
    }
    return total / 2;
}

std::span<const std::uint64_t> ExplicitGraph::row(Vertex v) const {
    return std::span<const std::uint64_t>(bits_).subspan((v - 1) * words_, words_);
}

ExplicitGraph ExplicitGraph::complete(std::uint64_t n) {
    ExplicitGraph g(n);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

ExplicitGraph materialize(const EdgeOracle& oracle, std::uint64_t guard) {
    const std::uint64_t n = oracle.n();
    if (n > guard) {
        throw Error(ErrorCode::GuardExceeded, "materializing n = " + std::to_string(n) +
                                                  " exceeds guard " + std::to_string(guard));
    }
    ExplicitGraph g(n);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (oracle.has_edge(u, v)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

ExplicitGraph materialize(const Instance& inst, const SpecsContext* context, std::uint64_t guard) {
    return materialize(EdgeOracle(inst, context), guard);
}

namespace {

class CliqueWalker {
public:
    CliqueWalker(const ExplicitGraph& g, unsigned size,
                 const std::function<bool(std::span<const Vertex>)>& visit)
        : g_(g), size_(size), visit_(visit) {
        current_.reserve(size);
    }

    // Branch and bound: candidates are common neighbours above the last vertex.
    bool extend(std::vector<std::uint64_t>& candidates) {
        if (current_.size() == size_) {
            return visit_(current_);
        }
        const std::size_t need = size_ - current_.size();
        std::vector<std::uint64_t> next(candidates.size());
        for (std::size_t w = 0; w < candidates.size(); ++w) {
            while (candidates[w] != 0) {
                std::size_t available = 0;
                for (std::size_t k = w; k < candidates.size(); ++k) {
                    available += static_cast<std::size_t>(std::popcount(candidates[k]));
                }
                if (available < need) {
                    return true;
                }
                const unsigned bit = static_cast<unsigned>(std::countr_zero(candidates[w]));
                candidates[w] &= candidates[w] - 1;
                const Vertex v = w * 64 + bit + 1;
                const auto nbrs = g_.row(v);
                for (std::size_t k = 0; k < next.size(); ++k) {
                    next[k] = candidates[k] & nbrs[k];
                }
                current_.push_back(v);
                const bool keep_going = extend(next);
                current_.pop_back();
                if (!keep_going) {
                    return false;
                }
            }
        }
        return true;
    }

    // Plain subset enumeration; every pair of every subset is tested.
    bool enumerate(Vertex start) {
        if (current_.size() == size_) {
            for (std::size_t i = 0; i < current_.size(); ++i) {
                for (std::size_t j = i + 1; j < current_.size(); ++j) {
                    if (!g_.has_edge(current_[i], current_[j])) {
                        return true;
                    }
                }
            }
            return visit_(current_);
        }
        for (Vertex v = start; v + (size_ - current_.size()) <= g_.n() + 1; ++v) {
            current_.push_back(v);
            const bool keep_going = enumerate(v + 1);
            current_.pop_back();
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

private:
    const ExplicitGraph& g_;
    unsigned size_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    std::vector<Vertex> current_;
};

}  // namespace

void for_each_clique(const ExplicitGraph& g, unsigned size,
                     const std::function<bool(std::span<const Vertex>)>& visit,
                     const CliqueSearchOptions& options) {
    if (size < 2) {
        throw Error(ErrorCode::InvalidArgument, "clique size must be at least 2");
    }
    if (size > g.n()) {
        return;
    }
    CliqueWalker walker(g, size, visit);
    if (!options.pruning) {
        if (binomial(BigInt(g.n()), size) > options.max_subsets) {
            throw Error(ErrorCode::GuardExceeded,
                        "C(" + std::to_string(g.n()) + "," + std::to_string(size) +
                            ") subsets exceed guard " + std::to_string(options.max_subsets));
        }
        walker.enumerate(1);
        return;
    }
    std::vector<std::uint64_t> all(g.words_per_row(), ~std::uint64_t{0});
    if (g.n() % 64 != 0) {
        all.back() = (std::uint64_t{1} << (g.n() % 64)) - 1;
    }
    walker.extend(all);
}

std::vector<std::vector<Vertex>> find_cliques(const ExplicitGraph& g, unsigned size,
                                              const CliqueSearchOptions& options) {
    std::vector<std::vector<Vertex>> cliques;
    for_each_clique(
        g, size,
        [&cliques](std::span<const Vertex> clique) {
            cliques.emplace_back(clique.begin(), clique.end());
            return true;
        },
        options);
    return cliques;
}

std::vector<Solution> count_preimages(const Instance& inst, std::uint64_t max_subsets) {
    const unsigned c = inst.c();
    const std::uint64_t n = inst.n;
    if (binomial(BigInt(n), c) > max_subsets) {
        throw Error(ErrorCode::GuardExceeded, "C(" + std::to_string(n) + "," + std::to_string(c) +
                                                  ") subsets exceed guard " +
                                                  std::to_string(max_subsets));
    }
    std::vector<Solution> found;
    Solution candidate;
    candidate.vertices.resize(c);
    for (unsigned i = 0; i < c; ++i) {
        candidate.vertices[i] = i + 1;
    }
    while (true) {
        if (verify(inst, candidate)) {
            found.push_back(candidate);
        }
        // Next c-subset in lexicographic order.
        int i = static_cast<int>(c) - 1;
        while (i >= 0 && candidate.vertices[i] == n - c + 1 + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++candidate.vertices[i];
        for (unsigned j = i + 1; j < c; ++j) {
            candidate.vertices[j] = candidate.vertices[j - 1] + 1;
        }
    }
    return found;
}

Density measure_density(const Instance& inst, const DensityMode& mode, const SpecsContext* context) {
    const EdgeOracle oracle(inst, context);
    const std::uint64_t n = inst.n;
    if (const auto* exact = std::get_if<ExactDensity>(&mode)) {
        const ExplicitGraph g = materialize(oracle, exact->guard);
        return Density{g.edge_count(), n * (n - 1) / 2};
    }
    const auto& sampled = std::get<SampledDensity>(mode);
    if (sampled.count == 0) {
        throw Error(ErrorCode::InvalidArgument, "sampled density needs at least one pair");
    }
    TrialRng rng(sampled.rng_seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < sampled.count; ++i) {
        Vertex u = rng.below(n) + 1;
        Vertex v = rng.below(n - 1) + 1;
        if (v >= u) {
            ++v;
        }
        if (u > v) {
            std::swap(u, v);
        }
        hits += oracle.has_edge(u, v) ? 1 : 0;
    }
    return Density{hits, sampled.count};
}

}  // namespace cliqueowf
