#include "cliqueowf/core.hpp"

#include "cliqueowf/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace cliqueowf {

namespace {

std::uint64_t round_half_up(long double x) {
    return static_cast<std::uint64_t>(std::floor(x + 0.5L));
}

}  // namespace

std::string_view to_string(VariantTag variant) noexcept {
    switch (variant) {
        case VariantTag::Basic: return "basic";
        case VariantTag::Multi: return "multi";
        case VariantTag::Derived: return "derived";
        case VariantTag::Masked: return "masked";
    }
    return "?";
}

VariantTag parse_variant(std::string_view token) {
    if (token == "basic") return VariantTag::Basic;
    if (token == "multi") return VariantTag::Multi;
    if (token == "derived") return VariantTag::Derived;
    if (token == "masked") return VariantTag::Masked;
    throw Error(ErrorCode::ParseError, "unknown variant '" + std::string(token) + "'");
}

std::uint64_t ParamSet::n() const {
    if (c >= 64) {
        throw Error(ErrorCode::TooLarge, "n = 2^" + std::to_string(c) + " does not fit in 64 bits");
    }
    return std::uint64_t{1} << c;
}

std::size_t ParamSet::array_count(VariantTag variant) const {
    switch (variant) {
        case VariantTag::Basic: return 1;
        case VariantTag::Multi: return f_multi;
        case VariantTag::Derived: return f_derived;
        case VariantTag::Masked: return 1;
    }
    return 0;
}

std::uint64_t ParamSet::array_length(VariantTag variant) const {
    return variant == VariantTag::Basic ? m_basic : m_filter;
}

std::size_t ParamSet::hash_count(VariantTag variant) const {
    switch (variant) {
        case VariantTag::Basic: return 1;
        case VariantTag::Multi: return f_multi;
        case VariantTag::Derived:
        case VariantTag::Masked: return f_derived;
    }
    return 0;
}

HashLayout ParamSet::layout(VariantTag variant, HashKind kind) const {
    HashLayout layout;
    layout.kind = kind;
    layout.c = c;
    layout.m = array_length(variant);
    layout.p = variant == VariantTag::Basic ? p_basic : p_filter;
    return layout;
}

unsigned exact_log2(std::uint64_t n) {
    if (!std::has_single_bit(n)) {
        throw Error(ErrorCode::NotPowerOfTwo, std::to_string(n) + " is not a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(n));
}

ParamSet derive_params_log2(unsigned c, std::optional<std::uint64_t> k0_override) {
    if (c < kMinLog2) {
        throw Error(ErrorCode::TooSmall, "need c >= 4 for at least two edge triples, got c = " +
                                             std::to_string(c));
    }
    if (c > kMaxLog2) {
        throw Error(ErrorCode::TooLarge, "c = " + std::to_string(c) + " exceeds 64");
    }
    const std::uint64_t cc = c;
    const long double log2c = std::log2(static_cast<long double>(c));

    ParamSet params;
    params.c = c;
    params.k0 = k0_override.value_or(cc);
    params.ec = cc * (cc - 1) / 2;
    params.m_basic = 2 * cc * cc * cc;
    params.m_def1 = 2 * cc * cc;
    params.m_filter = round_half_up(static_cast<long double>(params.ec) / std::log(2.0L));
    params.f_multi = round_half_up(2.0L + log2c);
    params.f_derived = round_half_up(1.0L + log2c / 2.0L);
    params.p_basic = smallest_prime_greater(params.m_basic);
    params.p_filter = smallest_prime_greater(params.m_filter);
    return params;
}

ParamSet derive_params(std::uint64_t n, std::optional<std::uint64_t> k0_override) {
    return derive_params_log2(exact_log2(n), k0_override);
}

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0 || x % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= x / d; d += 6) {
        if (x % d == 0 || x % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t smallest_prime_greater(std::uint64_t x) {
    std::uint64_t candidate = x + 1;
    while (!is_prime(candidate)) {
        ++candidate;
    }
    return candidate;
}

std::size_t vertex_bits(unsigned c) {
    return ceil_log2(falling_factorial(BigInt(1) << c, c));
}

std::size_t required_bits(const ParamSet& params, VariantTag variant, HashKind kind) {
    std::size_t bits = vertex_bits(params.c);
    if (variant == VariantTag::Basic || variant == VariantTag::Multi) {
        bits += params.hash_count(variant) * params.layout(variant, kind).bits_per_spec();
    }
    return bits;
}

std::vector<Vertex> CliqueSeed::chosen_order() const {
    if (perm.size() != vertices.size() || !is_rank_permutation(perm)) {
        throw Error(ErrorCode::InvalidArgument, "perm is not a permutation of the vertex ranks");
    }
    std::vector<Vertex> chosen;
    chosen.reserve(perm.size());
    for (const unsigned rank : perm) {
        chosen.push_back(vertices[rank - 1]);
    }
    return chosen;
}

CliqueSeed CliqueSeed::from_chosen_order(std::span<const Vertex> chosen) {
    CliqueSeed seed;
    seed.vertices.assign(chosen.begin(), chosen.end());
    std::sort(seed.vertices.begin(), seed.vertices.end());
    if (std::adjacent_find(seed.vertices.begin(), seed.vertices.end()) != seed.vertices.end()) {
        throw Error(ErrorCode::InvalidArgument, "chosen vertices are not distinct");
    }
    seed.perm.reserve(chosen.size());
    for (const Vertex v : chosen) {
        const auto it = std::lower_bound(seed.vertices.begin(), seed.vertices.end(), v);
        seed.perm.push_back(static_cast<unsigned>(it - seed.vertices.begin()) + 1);
    }
    return seed;
}

bool is_rank_permutation(std::span<const unsigned> perm) {
    std::vector<bool> seen(perm.size() + 1, false);
    for (const unsigned rank : perm) {
        if (rank < 1 || rank > perm.size() || seen[rank]) {
            return false;
        }
        seen[rank] = true;
    }
    return true;
}

CliqueSeed extract_distinct_vertices(const RandomString& rs, std::uint64_t n) {
    const unsigned c = exact_log2(n);
    if (c < 1) {
        throw Error(ErrorCode::TooSmall, "need n >= 2");
    }
    if (c > kMaxGenerationLog2) {
        throw Error(ErrorCode::TooLarge, "vertex extraction supports n <= 2^32");
    }
    const BigInt tuples = falling_factorial(BigInt(n), c);
    BigInt index = rs.read_big(0, ceil_log2(tuples)) % tuples;

    // Mixed radix (n, n-1, ..., n-c+1), most significant digit first.
    std::vector<std::uint64_t> digits(c);
    for (unsigned i = c; i-- > 0;) {
        const std::uint64_t radix = n - i;
        digits[i] = static_cast<std::uint64_t>(index % radix);
        index /= radix;
    }

    std::vector<Vertex> taken;
    std::vector<Vertex> chosen;
    taken.reserve(c);
    chosen.reserve(c);
    for (const std::uint64_t digit : digits) {
        // (digit+1)-th smallest unused vertex.
        Vertex candidate = digit + 1;
        for (const Vertex t : taken) {
            if (t <= candidate) {
                ++candidate;
            }
        }
        taken.insert(std::upper_bound(taken.begin(), taken.end(), candidate), candidate);
        chosen.push_back(candidate);
    }
    return CliqueSeed::from_chosen_order(chosen);
}

BigInt ordered_tuple_index(std::span<const Vertex> chosen, std::uint64_t n) {
    BigInt index = 0;
    std::vector<Vertex> taken;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        const Vertex v = chosen[i];
        if (v < 1 || v > n || std::binary_search(taken.begin(), taken.end(), v)) {
            throw Error(ErrorCode::InvalidArgument, "tuple entries must be distinct and in [1, n]");
        }
        const auto smaller = static_cast<std::uint64_t>(
            std::lower_bound(taken.begin(), taken.end(), v) - taken.begin());
        index = index * (n - i) + (v - 1 - smaller);
        taken.insert(std::upper_bound(taken.begin(), taken.end(), v), v);
    }
    return index;
}

std::vector<HashSpec> extract_hash_params(const RandomString& rs, std::size_t offset,
                                          const HashLayout& layout, std::size_t count) {
    const std::size_t width = layout.bits_per_spec();
    std::vector<HashSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        specs.push_back(decode_hash_spec(rs, offset + i * width, layout));
    }
    return specs;
}

}  // namespace cliqueowf
