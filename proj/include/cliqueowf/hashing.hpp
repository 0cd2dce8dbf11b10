#pragma once

#include "cliqueowf/random_string.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace cliqueowf {

/// Vertex identifiers are 1-based, in [1, n].
using Vertex = std::uint64_t;

/// Injective integer image of an edge; fits in 2c bits.
using EdgeCode = std::uint64_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// (u-1) + (v-1) * n. Requires 1 <= u < v <= n.
EdgeCode encode_edge(Edge e, std::uint64_t n);

enum class HashKind { CarterWegman, Toeplitz, Polynomial };

std::string_view to_string(HashKind kind) noexcept;
HashKind parse_hash_kind(std::string_view token);

/// Independence degree used whenever polynomial parameters are drawn from bits.
inline constexpr unsigned kPolyDegree = 3;

// ((a x + b) mod p) mod m + 1
struct CWHashSpec {
    std::uint64_t a = 1;
    std::uint64_t b = 0;
    std::uint64_t p = 2;
    std::uint64_t m = 1;

    friend bool operator==(const CWHashSpec&, const CWHashSpec&) = default;
};

/// GF(2) product with a matrix whose i-th row is r1 rotated right i-1 times.
/// r1 is 2c bits wide; the matrix has `rows` rows so the product addresses m cells.
struct ToeplitzHashSpec {
    std::uint64_t r1 = 1;
    unsigned c = 1;
    std::uint64_t m = 1;
    unsigned rows = 1;

    friend bool operator==(const ToeplitzHashSpec&, const ToeplitzHashSpec&) = default;
};

// (sum a_i x^i mod p) mod m + 1, degree k-1
struct PolyHashSpec {
    std::vector<std::uint64_t> coeffs;
    std::uint64_t p = 2;
    std::uint64_t m = 1;

    [[nodiscard]] std::size_t k() const noexcept { return coeffs.size(); }

    friend bool operator==(const PolyHashSpec&, const PolyHashSpec&) = default;
};

using HashSpec = std::variant<CWHashSpec, ToeplitzHashSpec, PolyHashSpec>;

// Validating constructors; throw Error(InvalidArgument) on a broken invariant.
CWHashSpec make_cw(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t m);
ToeplitzHashSpec make_toeplitz(std::uint64_t r1, unsigned c, std::uint64_t m);
PolyHashSpec make_poly(std::vector<std::uint64_t> coeffs, std::uint64_t p, std::uint64_t m);

/// Number of output rows needed to address m cells: ceil(log2 m), at least 1.
unsigned toeplitz_rows(std::uint64_t m);

std::uint64_t cw_hash(const CWHashSpec& spec, std::uint64_t x);
std::uint64_t toeplitz_hash(const ToeplitzHashSpec& spec, std::uint64_t x);
std::uint64_t poly_hash(const PolyHashSpec& spec, std::uint64_t x);

/// Raw GF(2) product before the mod-m reduction; linear in x.
std::uint64_t toeplitz_product(const ToeplitzHashSpec& spec, std::uint64_t x);

/// Dispatches on the populated alternative. Result lies in [1, m].
std::uint64_t hash_index(const HashSpec& spec, std::uint64_t x);

HashKind kind_of(const HashSpec& spec) noexcept;
std::uint64_t range_of(const HashSpec& spec) noexcept;

/// Everything needed to decode hash parameters from a bit source.
struct HashLayout {
    HashKind kind = HashKind::CarterWegman;
    unsigned c = 1;          // half the edge-code width
    std::uint64_t m = 1;     // array length
    std::uint64_t p = 2;     // prime modulus (CW, polynomial)
    unsigned poly_degree = kPolyDegree;

    /// CW: two ceil(log2 p)-bit fields; Toeplitz: 2c bits; polynomial: k fields.
    [[nodiscard]] std::size_t bits_per_spec() const;
};

/// Decodes one spec starting at `offset`. CW: a = (A mod (p-1)) + 1, b = B mod p.
/// Toeplitz: an all-zero r1 becomes ...0001. Polynomial: a_i = A_i mod p.
HashSpec decode_hash_spec(const RandomString& bits, std::size_t offset, const HashLayout& layout);

/// XOR of the codes of consecutive disjoint edge triples, taken over `edges` in
/// lexicographic (u, v) order. Trailing edges that do not fill a triple are ignored.
std::vector<std::uint64_t> triple_words(std::span<const Edge> edges, std::uint64_t n);

/// Hash parameters derived from the clique itself. The triple words are read as
/// one 2c-bit word each; spec j starts on a fresh word and uses as many
/// consecutive words as its layout needs (one for CW and Toeplitz up to c=32).
std::vector<HashSpec> derive_specs_from_clique(std::span<const Edge> edges, std::uint64_t n,
                                               const HashLayout& layout, std::size_t count);

}  // namespace cliqueowf
