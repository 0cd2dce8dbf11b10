#include "cliqueowf/hashing.hpp"

#include "cliqueowf/core.hpp"
#include "cliqueowf/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cliqueowf {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t width_mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

std::uint64_t rotate_right(std::uint64_t value, unsigned shift, unsigned width) {
    shift %= width;
    if (shift == 0) {
        return value;
    }
    return ((value >> shift) | (value << (width - shift))) & width_mask(width);
}

unsigned field_bits(std::uint64_t p) {
    return static_cast<unsigned>(ceil_log2(BigInt(p)));
}

}  // namespace

EdgeCode encode_edge(Edge e, std::uint64_t n) {
    if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
        throw Error(ErrorCode::OutOfRange, "edge (" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + ") outside [1, " +
                                               std::to_string(n) + "]");
    }
    if (e.u >= e.v) {
        throw Error(ErrorCode::NotStrictlyOrdered, "edge endpoints must satisfy u < v");
    }
    return (e.u - 1) + (e.v - 1) * n;
}

std::string_view to_string(HashKind kind) noexcept {
    switch (kind) {
        case HashKind::CarterWegman: return "cw";
        case HashKind::Toeplitz: return "tp";
        case HashKind::Polynomial: return "poly";
    }
    return "?";
}

HashKind parse_hash_kind(std::string_view token) {
    if (token == "cw") return HashKind::CarterWegman;
    if (token == "tp") return HashKind::Toeplitz;
    if (token == "poly") return HashKind::Polynomial;
    throw Error(ErrorCode::ParseError, "unknown hash kind '" + std::string(token) + "'");
}

CWHashSpec make_cw(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t m) {
    if (m < 1 || p <= m || !is_prime(p)) {
        throw Error(ErrorCode::InvalidArgument, "CW spec needs a prime p > m >= 1");
    }
    if (a < 1 || a >= p || b >= p) {
        throw Error(ErrorCode::InvalidArgument, "CW spec needs 1 <= a < p and 0 <= b < p");
    }
    return CWHashSpec{a, b, p, m};
}

unsigned toeplitz_rows(std::uint64_t m) {
    return std::max(1U, static_cast<unsigned>(ceil_log2(BigInt(m))));
}

ToeplitzHashSpec make_toeplitz(std::uint64_t r1, unsigned c, std::uint64_t m) {
    if (c < 1 || c > 32) {
        throw Error(ErrorCode::InvalidArgument, "Toeplitz spec needs 1 <= c <= 32");
    }
    if (r1 == 0 || (r1 & ~width_mask(2 * c)) != 0) {
        throw Error(ErrorCode::InvalidArgument, "r1 must be a nonzero 2c-bit vector");
    }
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "Toeplitz spec needs m >= 1");
    }
    return ToeplitzHashSpec{r1, c, m, toeplitz_rows(m)};
}

PolyHashSpec make_poly(std::vector<std::uint64_t> coeffs, std::uint64_t p, std::uint64_t m) {
    if (m < 1 || p <= m || !is_prime(p)) {
        throw Error(ErrorCode::InvalidArgument, "polynomial spec needs a prime p > m >= 1");
    }
    if (coeffs.empty()) {
        throw Error(ErrorCode::InvalidArgument, "polynomial spec needs k >= 1");
    }
    if (std::any_of(coeffs.begin(), coeffs.end(), [p](std::uint64_t a) { return a >= p; })) {
        throw Error(ErrorCode::InvalidArgument, "polynomial coefficients must be below p");
    }
    return PolyHashSpec{std::move(coeffs), p, m};
}

std::uint64_t cw_hash(const CWHashSpec& spec, std::uint64_t x) {
    const u128 mixed = (u128{spec.a} * x + spec.b) % spec.p;
    return static_cast<std::uint64_t>(mixed % spec.m) + 1;
}

std::uint64_t toeplitz_product(const ToeplitzHashSpec& spec, std::uint64_t x) {
    const unsigned width = 2 * spec.c;
    std::uint64_t t = 0;
    for (unsigned i = 0; i < spec.rows; ++i) {
        const std::uint64_t row = rotate_right(spec.r1, i, width);
        t = (t << 1) | static_cast<std::uint64_t>(std::popcount(row & x) & 1);
    }
    return t;
}

std::uint64_t toeplitz_hash(const ToeplitzHashSpec& spec, std::uint64_t x) {
    if ((x & ~width_mask(2 * spec.c)) != 0) {
        throw Error(ErrorCode::OutOfRange, "Toeplitz input wider than 2c bits");
    }
    return toeplitz_product(spec, x) % spec.m + 1;
}

std::uint64_t poly_hash(const PolyHashSpec& spec, std::uint64_t x) {
    const std::uint64_t xr = x % spec.p;
    u128 acc = 0;
    for (auto it = spec.coeffs.rbegin(); it != spec.coeffs.rend(); ++it) {
        acc = (acc * xr + *it) % spec.p;
    }
    return static_cast<std::uint64_t>(acc % spec.m) + 1;
}

std::uint64_t hash_index(const HashSpec& spec, std::uint64_t x) {
    return std::visit(
        [x](const auto& s) -> std::uint64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CWHashSpec>) {
                return cw_hash(s, x);
            } else if constexpr (std::is_same_v<T, ToeplitzHashSpec>) {
                return toeplitz_hash(s, x);
            } else {
                return poly_hash(s, x);
            }
        },
        spec);
}

HashKind kind_of(const HashSpec& spec) noexcept {
    switch (spec.index()) {
        case 0: return HashKind::CarterWegman;
        case 1: return HashKind::Toeplitz;
        default: return HashKind::Polynomial;
    }
}

std::uint64_t range_of(const HashSpec& spec) noexcept {
    return std::visit([](const auto& s) { return s.m; }, spec);
}

std::size_t HashLayout::bits_per_spec() const {
    switch (kind) {
        case HashKind::CarterWegman: return 2 * std::size_t{field_bits(p)};
        case HashKind::Toeplitz: return 2 * std::size_t{c};
        case HashKind::Polynomial: return std::size_t{poly_degree} * field_bits(p);
    }
    return 0;
}

HashSpec decode_hash_spec(const RandomString& bits, std::size_t offset, const HashLayout& layout) {
    switch (layout.kind) {
        case HashKind::CarterWegman: {
            const unsigned field = field_bits(layout.p);
            const std::uint64_t a = bits.read_u64(offset, field);
            const std::uint64_t b = bits.read_u64(offset + field, field);
            return make_cw(a % (layout.p - 1) + 1, b % layout.p, layout.p, layout.m);
        }
        case HashKind::Toeplitz: {
            std::uint64_t r1 = bits.read_u64(offset, 2 * layout.c);
            if (r1 == 0) {
                r1 = 1;
            }
            return make_toeplitz(r1, layout.c, layout.m);
        }
        case HashKind::Polynomial: {
            const unsigned field = field_bits(layout.p);
            std::vector<std::uint64_t> coeffs;
            coeffs.reserve(layout.poly_degree);
            for (unsigned i = 0; i < layout.poly_degree; ++i) {
                coeffs.push_back(bits.read_u64(offset + std::size_t{i} * field, field) % layout.p);
            }
            return make_poly(std::move(coeffs), layout.p, layout.m);
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown hash kind");
}

std::vector<std::uint64_t> triple_words(std::span<const Edge> edges, std::uint64_t n) {
    // Triples are taken over the edge list in lexicographic (u, v) order.
    std::vector<Edge> ordered(edges.begin(), edges.end());
    std::sort(ordered.begin(), ordered.end());
    std::vector<EdgeCode> codes;
    codes.reserve(ordered.size());
    for (const Edge& e : ordered) {
        codes.push_back(encode_edge(e, n));
    }
    std::vector<std::uint64_t> words;
    words.reserve(codes.size() / 3);
    for (std::size_t j = 0; 3 * j + 2 < codes.size(); ++j) {
        words.push_back(codes[3 * j] ^ codes[3 * j + 1] ^ codes[3 * j + 2]);
    }
    return words;
}

std::vector<HashSpec> derive_specs_from_clique(std::span<const Edge> edges, std::uint64_t n,
                                               const HashLayout& layout, std::size_t count) {
    const std::vector<std::uint64_t> words = triple_words(edges, n);
    const unsigned width = 2 * layout.c;
    const std::size_t words_per_spec = (layout.bits_per_spec() + width - 1) / width;
    if (words.size() < count * words_per_spec) {
        throw Error(ErrorCode::NotEnoughTriples,
                    std::to_string(count) + " hash functions need " +
                        std::to_string(count * words_per_spec) + " edge triples, have " +
                        std::to_string(words.size()));
    }
    const RandomString stream = RandomString::from_words(words, width);
    std::vector<HashSpec> specs;
    specs.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        specs.push_back(decode_hash_spec(stream, j * words_per_spec * width, layout));
    }
    return specs;
}

}  // namespace cliqueowf
