#include "oracles.hpp"

#include "cliqueowf/error.hpp"
#include "cliqueowf/graph_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace cliqueowf;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

/// Cliques by testing every subset, for comparison.
std::vector<std::vector<Vertex>> brute_cliques(const ExplicitGraph& g, unsigned size) {
    std::vector<std::vector<Vertex>> out;
    const std::uint64_t n = g.n();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) != size) continue;
        std::vector<Vertex> vs;
        for (std::uint64_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) vs.push_back(i + 1);
        }
        bool clique = true;
        for (std::size_t i = 0; i < vs.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < vs.size() && clique; ++j) clique = g.has_edge(vs[i], vs[j]);
        }
        if (clique) out.push_back(vs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Generation random_generation(oracle::Gen& gen, VariantTag v, HashKind k, std::uint64_t n) {
    const ParamSet p = derive_params(n);
    return generate(v, gen.random_string(required_bits(p, v, k)), n, k);
}

}  // namespace

TEST_SUITE("graph_oracle") {

TEST_CASE("explicit graph basics") {
    ExplicitGraph g(70);
    g.add_edge(1, 70);
    g.add_edge(70, 2);
    CHECK(g.has_edge(70, 1));
    CHECK(g.has_edge(2, 70));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edge_count() == 2);
    CHECK(g.words_per_row() == 2);
    CHECK(code_of([&] { g.add_edge(3, 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { g.add_edge(0, 3); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { (void)g.has_edge(71, 3); }) == ErrorCode::OutOfRange);
    CHECK(ExplicitGraph::complete(10).edge_count() == 45);
}

TEST_CASE("find cliques examples") {
    const auto k5 = find_cliques(ExplicitGraph::complete(5), 3);
    CHECK(k5.size() == 10);
    CHECK(std::is_sorted(k5.begin(), k5.end()));
    CHECK(k5.front() == std::vector<Vertex>{1, 2, 3});
    CHECK(find_cliques(ExplicitGraph(12), 3).empty());
    CHECK(find_cliques(ExplicitGraph::complete(3), 4).empty());
    CHECK(code_of([] { find_cliques(ExplicitGraph(5), 1); }) == ErrorCode::InvalidArgument);
    CliqueSearchOptions plain{false, 100};
    CHECK(code_of([&] { find_cliques(ExplicitGraph(64), 4, plain); }) == ErrorCode::GuardExceeded);
}

TEST_CASE("pruned and plain searches agree with brute force") {
    oracle::Gen gen(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = gen.uniform(4, 14);
        ExplicitGraph g(n);
        const std::uint64_t threshold = gen.uniform(1, 9);
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                if (gen.uniform(0, 9) < threshold) g.add_edge(u, v);
            }
        }
        const unsigned size = static_cast<unsigned>(gen.uniform(2, 5));
        const auto expected = brute_cliques(g, size);
        CHECK(find_cliques(g, size) == expected);
        CHECK(find_cliques(g, size, CliqueSearchOptions{false, kDefaultCliqueSubsetGuard}) == expected);
    }
}

TEST_CASE("early stop") {
    int visits = 0;
    for_each_clique(ExplicitGraph::complete(8), 3, [&](std::span<const Vertex>) { return ++visits < 4; });
    CHECK(visits == 4);
}

TEST_CASE("materialized planted instances contain the clique") {
    oracle::Gen gen(14);
    for (const VariantTag v : {VariantTag::Basic, VariantTag::Multi, VariantTag::Derived}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Generation g = random_generation(gen, v, HashKind::CarterWegman, 16);
            const ExplicitGraph graph = materialize(g.instance, &g.context);
            CHECK(graph.edge_count() >= 6);
            const auto cliques = find_cliques(graph, 4);
            CHECK(std::find(cliques.begin(), cliques.end(), g.seed.vertices) != cliques.end());
        }
    }
}

TEST_CASE("every verifying solution is a clique (n=16, exhaustive)") {
    oracle::Gen gen(15);
    for (const VariantTag v : {VariantTag::Basic, VariantTag::Multi}) {
        for (const HashKind k : {HashKind::CarterWegman, HashKind::Toeplitz, HashKind::Polynomial}) {
            for (int trial = 0; trial < 5; ++trial) {
                const Generation g = random_generation(gen, v, k, 16);
                const auto cliques = find_cliques(materialize(g.instance), 4);
                const std::set<std::vector<Vertex>> clique_set(cliques.begin(), cliques.end());
                const auto preimages = count_preimages(g.instance);
                bool seed_found = false;
                for (const Solution& s : preimages) {
                    CHECK(clique_set.count(s.vertices) == 1);
                    seed_found = seed_found || s.vertices == g.seed.vertices;
                }
                CHECK(seed_found);
            }
        }
    }
}

TEST_CASE("preimage census always finds the seed (n=16, every variant)") {
    oracle::Gen gen(16);
    for (const VariantTag v : {VariantTag::Basic, VariantTag::Multi, VariantTag::Derived, VariantTag::Masked}) {
        for (const HashKind k : {HashKind::CarterWegman, HashKind::Toeplitz}) {
            for (int trial = 0; trial < 3; ++trial) {
                const Generation g = random_generation(gen, v, k, 16);
                const auto found = count_preimages(g.instance);
                CHECK(std::is_sorted(found.begin(), found.end(),
                                     [](const Solution& a, const Solution& b) { return a.vertices < b.vertices; }));
                CHECK(std::any_of(found.begin(), found.end(),
                                  [&](const Solution& s) { return s.vertices == g.seed.vertices; }));
            }
        }
    }
}

TEST_CASE("preimage guard") {
    oracle::Gen gen(17);
    const Generation g = random_generation(gen, VariantTag::Basic, HashKind::CarterWegman, 256);
    CHECK(code_of([&] { count_preimages(g.instance); }) == ErrorCode::GuardExceeded);
    const Generation small = random_generation(gen, VariantTag::Basic, HashKind::CarterWegman, 16);
    CHECK(code_of([&] { count_preimages(small.instance, 1819); }) == ErrorCode::GuardExceeded);
    CHECK_NOTHROW(count_preimages(small.instance, 1820));
}

TEST_CASE("materialize guard and masked") {
    oracle::Gen gen(18);
    const Generation g = random_generation(gen, VariantTag::Basic, HashKind::CarterWegman, 256);
    CHECK(code_of([&] { materialize(g.instance, nullptr, 128); }) == ErrorCode::GuardExceeded);
    const Generation m = random_generation(gen, VariantTag::Masked, HashKind::CarterWegman, 16);
    CHECK(code_of([&] { materialize(m.instance, &m.context); }) == ErrorCode::UnqueryableVariant);
}

TEST_CASE("density of degenerate instances") {
    oracle::Gen gen(19);
    Instance inst = random_generation(gen, VariantTag::Basic, HashKind::CarterWegman, 16).instance;
    inst.arrays[0] = BitArray::from_hex(128, std::string(32, 'f'));
    const Density full = measure_density(inst, ExactDensity{});
    CHECK(full.ones == 120);
    CHECK(full.total == 120);
    CHECK(measure_density(inst, SampledDensity{500, 3}).value() == 1.0);
    inst.arrays[0] = BitArray::zeroed(128);
    CHECK(measure_density(inst, ExactDensity{}).ones == 0);
    CHECK(code_of([&] { measure_density(inst, SampledDensity{0, 1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("basic n=256: density cap and graph density near array density") {
    oracle::Gen gen(20);
    for (int trial = 0; trial < 20; ++trial) {
        const Generation g = random_generation(gen, VariantTag::Basic, HashKind::CarterWegman, 256);
        const double alpha = g.instance.arrays[0].density().value();
        CHECK(alpha <= 28.0 / 1024.0);
        const Density exact = measure_density(g.instance, ExactDensity{});
        CHECK(exact.total == 32640);
        // Edge fraction vs array density. CW folds p = 1031 cells onto m = 1024,
        // so a cell can be hit by at most two residues more often than others.
        const double sigma = std::sqrt(alpha * (1 - alpha) / 32640.0);
        CHECK(std::fabs(exact.value() - alpha) <= 3 * sigma + 2.0 / 1024.0);
        const Density sampled = measure_density(g.instance, SampledDensity{20000, 7});
        CHECK(measure_density(g.instance, SampledDensity{20000, 7}).ones == sampled.ones);
        CHECK(std::fabs(sampled.value() - exact.value()) <= 3 * std::sqrt(exact.value() / 20000.0) + 1e-3);
    }
}

}  // TEST_SUITE
