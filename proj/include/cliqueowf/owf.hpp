#pragma once

#include "cliqueowf/bitfield.hpp"
#include "cliqueowf/core.hpp"
#include "cliqueowf/hashing.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cliqueowf {

/// Public output of one of the four constructions.
///   basic   : one array of m_basic bits and its hash spec
///   multi   : f_multi arrays of m_filter bits and their specs
///   derived : f_derived arrays of m_filter bits, no specs
///   masked  : the XOR of the derived arrays, no specs
struct Instance {
    VariantTag variant = VariantTag::Basic;
    HashKind kind = HashKind::CarterWegman;
    std::uint64_t n = 0;
    std::vector<unsigned> perm;
    std::vector<BitArray> arrays;
    std::vector<HashSpec> specs;

    [[nodiscard]] unsigned c() const { return exact_log2(n); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct Solution {
    std::vector<Vertex> vertices;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Hash specs the generator used but did not publish (derived variant).
struct SpecsContext {
    std::vector<HashSpec> specs;
};

struct Generation {
    Instance instance;
    CliqueSeed seed;
    SpecsContext context;
};

/// All C(c,2) pairs of `vertices`, ordered by edge code.
std::vector<Edge> clique_edges(std::span<const Vertex> vertices, std::uint64_t n);

/// Sets bit h(code(e)) for every edge in one array per spec.
std::vector<BitArray> build_filters(std::span<const Edge> edges, std::uint64_t n,
                                    std::span<const HashSpec> specs, std::uint64_t m);

/// XOR of all arrays.
BitArray fold_xor(std::span<const BitArray> arrays);

Generation generate(VariantTag variant, const RandomString& rs, std::uint64_t n, HashKind kind);

Instance generate_basic(const RandomString& rs, std::uint64_t n, HashKind kind);
Instance generate_multi(const RandomString& rs, std::uint64_t n, HashKind kind);
Instance generate_derived(const RandomString& rs, std::uint64_t n, HashKind kind);
Instance generate_masked(const RandomString& rs, std::uint64_t n, HashKind kind);

/// Builds an instance from an explicit seed. basic/multi use `specs` as given;
/// derived/masked ignore them and derive their own from the clique.
Generation assemble(VariantTag variant, const CliqueSeed& seed, std::uint64_t n, HashKind kind,
                    std::span<const HashSpec> specs = {});

/// Throws InvalidArgument if array counts, lengths, specs or perm disagree with
/// the parameters implied by (variant, n).
void validate_instance(const Instance& inst);

/// Regenerates the instance from the candidate vertex set and compares arrays.
/// Throws MalformedSolution for wrong cardinality, duplicates or out-of-range ids.
bool verify(const Instance& inst, const Solution& sol);

/// Edge membership in the implicit graph. Masked instances, and derived ones
/// without the generator's context, throw UnqueryableVariant.
class EdgeOracle {
public:
    explicit EdgeOracle(const Instance& inst, const SpecsContext* context = nullptr);

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] std::uint64_t n() const noexcept { return n_; }

private:
    const Instance* inst_;
    std::span<const HashSpec> specs_;
    std::uint64_t n_;
};

bool implicit_edge_query(const Instance& inst, Vertex u, Vertex v,
                         const SpecsContext* context = nullptr);

}  // namespace cliqueowf
