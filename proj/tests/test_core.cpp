#include "oracles.hpp"

#include "cliqueowf/core.hpp"
#include "cliqueowf/error.hpp"

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

RandomString index_string(std::uint64_t index, unsigned width) {
    const std::uint64_t words[] = {index};
    return RandomString::from_words(words, width);
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("params for n=16") {
    const ParamSet p = derive_params(16);
    CHECK(p.c == 4);
    CHECK(p.k0 == 4);
    CHECK(p.ec == 6);
    CHECK(p.m_basic == 128);
    CHECK(p.m_def1 == 32);
    CHECK(p.m_filter == 9);
    CHECK(p.f_multi == 4);
    CHECK(p.f_derived == 2);
    CHECK(p.p_basic == 131);
    CHECK(p.p_filter == 11);
}

TEST_CASE("params for n=2^64") {
    const ParamSet p = derive_params_log2(64);
    CHECK(p.c == 64);
    CHECK(p.ec == 2016);
    CHECK(p.m_basic == 524288);
    // 2016 / ln 2 = 2908.47, rounded half up.
    CHECK(p.m_filter == 2908);
    CHECK(p.f_multi == 8);
    CHECK(p.f_derived == 4);
    CHECK(p.p_filter > p.m_filter);
    CHECK(oracle::is_prime(p.p_filter));
    CHECK(code_of([&] { (void)p.n(); }) == ErrorCode::TooLarge);
    CHECK(p.n_big() == BigInt(1) << 64);
}

TEST_CASE("params follow the defining formulas for every c") {
    for (unsigned c = kMinLog2; c <= kMaxLog2; ++c) {
        CAPTURE(c);
        const ParamSet p = derive_params_log2(c);
        const double lc = std::log2(static_cast<double>(c));
        CHECK(p.ec == static_cast<std::uint64_t>(c) * (c - 1) / 2);
        CHECK(p.m_basic == 2ULL * c * c * c);
        CHECK(p.m_def1 == 2ULL * c * c);
        CHECK(p.m_filter == static_cast<std::uint64_t>(std::floor(p.ec / std::log(2.0) + 0.5)));
        CHECK(p.f_multi == static_cast<std::uint64_t>(std::floor(2 + lc + 0.5)));
        CHECK(p.f_derived == static_cast<std::uint64_t>(std::floor(1 + lc / 2 + 0.5)));
        CHECK(p.m_filter >= p.ec);
        CHECK(p.f_multi >= p.f_derived);
        CHECK(p.f_derived >= 2);
        CHECK(oracle::is_prime(p.p_basic));
        CHECK(oracle::is_prime(p.p_filter));
        for (std::uint64_t x = p.m_filter + 1; x < p.p_filter; ++x) CHECK_FALSE(oracle::is_prime(x));
    }
}

TEST_CASE("params overrides and errors") {
    CHECK(derive_params(256, 3).k0 == 3);
    CHECK(code_of([] { derive_params(100); }) == ErrorCode::NotPowerOfTwo);
    CHECK(code_of([] { derive_params(0); }) == ErrorCode::NotPowerOfTwo);
    CHECK(code_of([] { derive_params(8); }) == ErrorCode::TooSmall);
    CHECK(code_of([] { derive_params_log2(3); }) == ErrorCode::TooSmall);
    CHECK(code_of([] { derive_params_log2(65); }) == ErrorCode::TooLarge);
}

TEST_CASE("smallest prime greater") {
    CHECK(smallest_prime_greater(32) == 37);
    CHECK(smallest_prime_greater(1) == 2);
    CHECK(smallest_prime_greater(13) == 17);
    CHECK(smallest_prime_greater(128) == 131);
    oracle::Gen gen(11);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t x = gen.uniform(1, 2'000'000);
        const std::uint64_t q = smallest_prime_greater(x);
        CHECK(q > x);
        CHECK(oracle::is_prime(q));
        for (std::uint64_t y = x + 1; y < q; ++y) CHECK_FALSE(oracle::is_prime(y));
    }
    for (std::uint64_t x = 0; x < 2000; ++x) CHECK(is_prime(x) == oracle::is_prime(x));
}

TEST_CASE("required bits") {
    const ParamSet p16 = derive_params(16);
    CHECK(vertex_bits(4) == 16);  // 16*15*14*13 = 43680 < 2^16
    CHECK(required_bits(p16, VariantTag::Basic, HashKind::CarterWegman) == 32);
    CHECK(required_bits(p16, VariantTag::Derived, HashKind::Toeplitz) == 16);
    CHECK(required_bits(p16, VariantTag::Masked, HashKind::CarterWegman) == 16);
    CHECK(required_bits(p16, VariantTag::Multi, HashKind::Toeplitz) == 16 + 4 * 8);
    CHECK(required_bits(p16, VariantTag::Multi, HashKind::CarterWegman) == 16 + 4 * 8);
    CHECK(required_bits(p16, VariantTag::Basic, HashKind::Polynomial) == 16 + 3 * 8);
    for (unsigned c = 4; c <= 32; ++c) {
        CHECK(vertex_bits(c) == ceil_log2(falling_factorial(BigInt(1) << c, c)));
    }
}

TEST_CASE("extraction examples at n=4") {
    // n=4, c=2, F=12, four index bits.
    CliqueSeed s = extract_distinct_vertices(index_string(0, 4), 4);
    CHECK(s.vertices == std::vector<Vertex>{1, 2});
    CHECK(s.perm == std::vector<unsigned>{1, 2});

    s = extract_distinct_vertices(index_string(7, 4), 4);
    CHECK(s.chosen_order() == std::vector<Vertex>{3, 2});
    CHECK(s.vertices == std::vector<Vertex>{2, 3});
    CHECK(s.perm == std::vector<unsigned>{2, 1});

    CHECK(extract_distinct_vertices(index_string(12, 4), 4) == extract_distinct_vertices(index_string(0, 4), 4));
    CHECK(code_of([] { extract_distinct_vertices(RandomString::from_hex(""), 4); }) ==
          ErrorCode::StringTooShort);
}

TEST_CASE("extraction enumerates every ordered triple once at n=8") {
    const auto tuples = oracle::ordered_tuples(8, 3);
    REQUIRE(tuples.size() == 336);
    const std::size_t width = vertex_bits(3);
    REQUIRE(width == 9);
    std::set<std::vector<Vertex>> seen;
    for (std::uint64_t i = 0; i < 336; ++i) {
        const CliqueSeed s = extract_distinct_vertices(index_string(i, 9), 8);
        CHECK(s.chosen_order() == tuples[i]);
        CHECK(ordered_tuple_index(tuples[i], 8) == i);
        seen.insert(s.chosen_order());
    }
    CHECK(seen.size() == 336);
    // Indices at or beyond F wrap around.
    for (std::uint64_t i = 336; i < 512; ++i) {
        CHECK(extract_distinct_vertices(index_string(i, 9), 8).chosen_order() == tuples[i - 336]);
    }
}

TEST_CASE("seed bookkeeping properties") {
    oracle::Gen gen(5);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned c = static_cast<unsigned>(gen.uniform(4, 12));
        const std::uint64_t n = std::uint64_t{1} << c;
        const RandomString rs = gen.random_string(vertex_bits(c));
        const CliqueSeed s = extract_distinct_vertices(rs, n);
        CHECK(extract_distinct_vertices(rs, n) == s);
        REQUIRE(s.vertices.size() == c);
        CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
        CHECK(std::adjacent_find(s.vertices.begin(), s.vertices.end()) == s.vertices.end());
        CHECK(s.vertices.front() >= 1);
        CHECK(s.vertices.back() <= n);
        CHECK(is_rank_permutation(s.perm));
        std::vector<Vertex> chosen = s.chosen_order();
        CHECK(CliqueSeed::from_chosen_order(chosen) == s);
        const BigInt index = rs.read_big(0, vertex_bits(c)) % falling_factorial(BigInt(n), c);
        CHECK(ordered_tuple_index(chosen, n) == index);
        std::sort(chosen.begin(), chosen.end());
        CHECK(chosen == s.vertices);
    }
}

TEST_CASE("rank permutation check") {
    CHECK(is_rank_permutation(std::vector<unsigned>{3, 1, 2}));
    CHECK_FALSE(is_rank_permutation(std::vector<unsigned>{0, 1, 2}));
    CHECK_FALSE(is_rank_permutation(std::vector<unsigned>{1, 1, 2}));
    CHECK_FALSE(is_rank_permutation(std::vector<unsigned>{1, 2, 4}));
}

TEST_CASE("hash parameter extraction examples") {
    const HashLayout cw{HashKind::CarterWegman, 4, 32, 37};
    const std::uint64_t fields[] = {36, 40, 5, 5};
    const RandomString rs = RandomString::from_words(fields, 6);
    const auto specs = extract_hash_params(rs, 0, cw, 2);
    REQUIRE(specs.size() == 2);
    CHECK(std::get<CWHashSpec>(specs[0]) == CWHashSpec{1, 3, 37, 32});
    CHECK(std::get<CWHashSpec>(specs[1]) == CWHashSpec{6, 5, 37, 32});
    CHECK(code_of([&] { extract_hash_params(rs, 0, cw, 3); }) == ErrorCode::StringTooShort);

    const HashLayout tp{HashKind::Toeplitz, 4, 9, 11};
    const auto zero = extract_hash_params(RandomString::from_hex("00"), 0, tp, 1);
    CHECK(std::get<ToeplitzHashSpec>(zero[0]).r1 == 1);
    const auto some = extract_hash_params(RandomString::from_hex("a5"), 0, tp, 1);
    CHECK(std::get<ToeplitzHashSpec>(some[0]).r1 == 0xa5);
    CHECK(std::get<ToeplitzHashSpec>(some[0]).rows == 4);

    const HashLayout pl{HashKind::Polynomial, 4, 32, 37};
    const std::uint64_t coeff_fields[] = {36, 40, 63};
    const auto poly = extract_hash_params(RandomString::from_words(coeff_fields, 6), 0, pl, 1);
    CHECK(std::get<PolyHashSpec>(poly[0]).coeffs == std::vector<std::uint64_t>{36, 3, 26});
}

TEST_CASE("extraction is deterministic and in range for every layout") {
    oracle::Gen gen(9);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned c = static_cast<unsigned>(gen.uniform(4, 16));
        const ParamSet params = derive_params_log2(c);
        for (const HashKind kind : {HashKind::CarterWegman, HashKind::Toeplitz, HashKind::Polynomial}) {
            const HashLayout layout = params.layout(VariantTag::Multi, kind);
            const RandomString rs = gen.random_string(layout.bits_per_spec() * params.f_multi + 5);
            const auto specs = extract_hash_params(rs, 5, layout, params.f_multi);
            CHECK(specs == extract_hash_params(rs, 5, layout, params.f_multi));
            for (const HashSpec& spec : specs) {
                if (const auto* s = std::get_if<CWHashSpec>(&spec)) {
                    CHECK(s->a >= 1);
                    CHECK(s->a <= s->p - 1);
                    CHECK(s->b < s->p);
                } else if (const auto* t = std::get_if<ToeplitzHashSpec>(&spec)) {
                    CHECK(t->r1 != 0);
                    CHECK(t->r1 < (std::uint64_t{1} << (2 * c)));
                } else {
                    const auto& pspec = std::get<PolyHashSpec>(spec);
                    CHECK(pspec.k() == kPolyDegree);
                    for (const auto a : pspec.coeffs) CHECK(a < pspec.p);
                }
                CHECK(range_of(spec) == params.m_filter);
            }
        }
    }
}

TEST_CASE("variant names") {
    for (const VariantTag v : {VariantTag::Basic, VariantTag::Multi, VariantTag::Derived, VariantTag::Masked}) {
        CHECK(parse_variant(to_string(v)) == v);
    }
    CHECK(code_of([] { parse_variant("fancy"); }) == ErrorCode::ParseError);
}

}  // TEST_SUITE
