#pragma once

#include "cliqueowf/bigint.hpp"
#include "cliqueowf/hashing.hpp"
#include "cliqueowf/random_string.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cliqueowf {

enum class VariantTag { Basic, Multi, Derived, Masked };

std::string_view to_string(VariantTag variant) noexcept;
VariantTag parse_variant(std::string_view token);

/// Instances up to this c have edge codes that fit in 64 bits.
inline constexpr unsigned kMaxGenerationLog2 = 32;
inline constexpr unsigned kMinLog2 = 4;
inline constexpr unsigned kMaxLog2 = 64;

/// Sizes derived from n = 2^c. Real-valued formulas are rounded half-up.
struct ParamSet {
    unsigned c = 0;
    std::uint64_t k0 = 0;
    std::uint64_t ec = 0;          // c(c-1)/2
    std::uint64_t m_basic = 0;     // 2c^3
    std::uint64_t m_def1 = 0;      // 2c^2
    std::uint64_t m_filter = 0;    // ec / ln 2
    std::uint64_t f_multi = 0;     // 2 + log2 c
    std::uint64_t f_derived = 0;   // 1 + log2(c) / 2
    std::uint64_t p_basic = 0;
    std::uint64_t p_filter = 0;

    /// n itself; throws TooLarge for c = 64.
    [[nodiscard]] std::uint64_t n() const;
    [[nodiscard]] BigInt n_big() const { return BigInt(1) << c; }

    [[nodiscard]] std::size_t array_count(VariantTag variant) const;
    [[nodiscard]] std::uint64_t array_length(VariantTag variant) const;
    /// Hash functions used to build the arrays (masked folds f_derived of them).
    [[nodiscard]] std::size_t hash_count(VariantTag variant) const;
    [[nodiscard]] HashLayout layout(VariantTag variant, HashKind kind) const;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

ParamSet derive_params(std::uint64_t n, std::optional<std::uint64_t> k0_override = std::nullopt);
ParamSet derive_params_log2(unsigned c, std::optional<std::uint64_t> k0_override = std::nullopt);

/// log2 of a power of two; throws NotPowerOfTwo otherwise.
unsigned exact_log2(std::uint64_t n);

std::uint64_t smallest_prime_greater(std::uint64_t x);
bool is_prime(std::uint64_t x);

/// Bits consumed by vertex extraction: ceil(log2(n (n-1) ... (n-c+1))).
std::size_t vertex_bits(unsigned c);

std::size_t required_bits(const ParamSet& params, VariantTag variant, HashKind kind);

/// Sorted clique vertices plus the ranks that recover the chosen order:
/// perm[i] is the 1-based rank of the i-th chosen vertex within `vertices`.
struct CliqueSeed {
    std::vector<Vertex> vertices;
    std::vector<unsigned> perm;

    [[nodiscard]] std::vector<Vertex> chosen_order() const;
    static CliqueSeed from_chosen_order(std::span<const Vertex> chosen);

    friend bool operator==(const CliqueSeed&, const CliqueSeed&) = default;
};

/// Reads ceil(log2 F) leading bits, F the falling factorial, reduces mod F and
/// unranks the result as an ordered tuple of c distinct vertices.
CliqueSeed extract_distinct_vertices(const RandomString& rs, std::uint64_t n);

/// Inverse of the unranking step: the index in [0, F) of an ordered tuple.
BigInt ordered_tuple_index(std::span<const Vertex> chosen, std::uint64_t n);

std::vector<HashSpec> extract_hash_params(const RandomString& rs, std::size_t offset,
                                          const HashLayout& layout, std::size_t count);

/// True iff `perm` is a permutation of [1, size].
bool is_rank_permutation(std::span<const unsigned> perm);

}  // namespace cliqueowf
