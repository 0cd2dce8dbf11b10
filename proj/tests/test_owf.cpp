#include "oracles.hpp"

#include "cliqueowf/error.hpp"
#include "cliqueowf/owf.hpp"

#include <doctest.h>

#include <algorithm>

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

constexpr VariantTag kVariants[] = {VariantTag::Basic, VariantTag::Multi, VariantTag::Derived, VariantTag::Masked};
constexpr HashKind kKinds[] = {HashKind::CarterWegman, HashKind::Toeplitz, HashKind::Polynomial};

bool supported(VariantTag v, HashKind k, unsigned c) {
    // Three polynomial coefficients need more edge triples than c=4 offers.
    return !(k == HashKind::Polynomial && c == 4 && (v == VariantTag::Derived || v == VariantTag::Masked));
}

}  // namespace

TEST_SUITE("owf") {

TEST_CASE("clique edges of {1,2,3,4}") {
    const std::vector<Vertex> vs{1, 2, 3, 4};
    const auto edges = clique_edges(vs, 16);
    REQUIRE(edges.size() == 6);
    std::vector<EdgeCode> codes;
    for (const Edge& e : edges) codes.push_back(encode_edge(e, 16));
    CHECK(codes == std::vector<EdgeCode>{16, 32, 33, 48, 49, 50});
}

TEST_CASE("basic hand example") {
    const CliqueSeed seed = CliqueSeed::from_chosen_order(std::vector<Vertex>{1, 2, 3, 4});
    const HashSpec spec = make_cw(1, 0, 131, 128);
    const Generation gen = assemble(VariantTag::Basic, seed, 16, HashKind::CarterWegman, std::span(&spec, 1));
    const BitArray& sg = gen.instance.arrays.at(0);
    CHECK(sg.size() == 128);
    std::vector<std::uint64_t> set_bits;
    for (std::uint64_t j = 1; j <= 128; ++j) {
        if (sg.test(j)) set_bits.push_back(j);
    }
    CHECK(set_bits == std::vector<std::uint64_t>{17, 33, 34, 49, 50, 51});
    CHECK(verify(gen.instance, Solution{{1, 2, 3, 4}}));
    CHECK_FALSE(verify(gen.instance, Solution{{1, 2, 3, 5}}));
}

TEST_CASE("instance shapes follow the parameters") {
    oracle::Gen gen(1);
    const ParamSet p = derive_params(16);
    const RandomString rs = gen.random_string(required_bits(p, VariantTag::Multi, HashKind::CarterWegman));
    const Instance basic = generate_basic(rs, 16, HashKind::CarterWegman);
    CHECK(basic.arrays.size() == 1);
    CHECK(basic.arrays[0].size() == 128);
    CHECK(basic.specs.size() == 1);
    const Instance multi = generate_multi(rs, 16, HashKind::CarterWegman);
    CHECK(multi.arrays.size() == 4);
    CHECK(multi.specs.size() == 4);
    for (const auto& a : multi.arrays) CHECK(a.size() == 9);
    const Instance derived = generate_derived(rs, 16, HashKind::Toeplitz);
    CHECK(derived.arrays.size() == 2);
    CHECK(derived.specs.empty());
    const Instance masked = generate_masked(rs, 16, HashKind::Toeplitz);
    CHECK(masked.arrays.size() == 1);
    CHECK(masked.arrays[0] == (derived.arrays[0] ^ derived.arrays[1]));
    CHECK(masked.specs.empty());
}

TEST_CASE("short random strings are rejected") {
    const ParamSet p = derive_params(16);
    oracle::Gen gen(2);
    const RandomString vertex_only = gen.random_string(vertex_bits(4));
    CHECK(code_of([&] { generate_basic(vertex_only, 16, HashKind::CarterWegman); }) == ErrorCode::StringTooShort);
    CHECK(code_of([&] { generate_multi(vertex_only, 16, HashKind::Toeplitz); }) == ErrorCode::StringTooShort);
    CHECK_NOTHROW(generate_derived(vertex_only, 16, HashKind::CarterWegman));
    CHECK(code_of([&] { generate_derived(RandomString::from_hex("ff"), 16, HashKind::CarterWegman); }) ==
          ErrorCode::StringTooShort);
    (void)p;
}

TEST_CASE("round trip, determinism and popcount caps") {
    oracle::Gen gen(31);
    for (const std::uint64_t n : {16, 256}) {
        const ParamSet p = derive_params(n);
        for (const VariantTag v : kVariants) {
            for (const HashKind k : kKinds) {
                if (!supported(v, k, p.c)) continue;
                for (int trial = 0; trial < 200; ++trial) {
                    const RandomString rs = gen.random_string(required_bits(p, v, k));
                    const Generation g = generate(v, rs, n, k);
                    CHECK(generate(v, rs, n, k).instance == g.instance);
                    CHECK(g.seed == extract_distinct_vertices(rs, n));
                    CHECK(g.instance.perm == g.seed.perm);
                    CHECK_NOTHROW(validate_instance(g.instance));
                    CHECK(verify(g.instance, Solution{g.seed.vertices}));
                    const std::uint64_t cap = v == VariantTag::Masked ? p.f_derived * p.ec : p.ec;
                    for (const BitArray& a : g.instance.arrays) {
                        CHECK(a.popcount() >= (v == VariantTag::Masked ? 0U : 1U));
                        CHECK(a.popcount() <= cap);
                    }
                }
            }
        }
    }
}

TEST_CASE("derived polynomial needs more triples than c=4 has") {
    oracle::Gen gen(6);
    const RandomString rs = gen.random_string(vertex_bits(4));
    CHECK(code_of([&] { generate_derived(rs, 16, HashKind::Polynomial); }) == ErrorCode::NotEnoughTriples);
    CHECK(code_of([&] { generate_masked(rs, 16, HashKind::Polynomial); }) == ErrorCode::NotEnoughTriples);
}

TEST_CASE("no false negatives") {
    oracle::Gen gen(41);
    for (const std::uint64_t n : {16, 256, 4096}) {
        const ParamSet p = derive_params(n);
        for (const VariantTag v : {VariantTag::Basic, VariantTag::Multi, VariantTag::Derived}) {
            for (const HashKind k : kKinds) {
                if (!supported(v, k, p.c)) continue;
                for (int trial = 0; trial < 50; ++trial) {
                    const Generation g = generate(v, gen.random_string(required_bits(p, v, k)), n, k);
                    const EdgeOracle oracle(g.instance, &g.context);
                    for (const Edge& e : clique_edges(g.seed.vertices, n)) {
                        CHECK(oracle.has_edge(e.u, e.v));
                        CHECK(implicit_edge_query(g.instance, e.u, e.v, &g.context));
                    }
                }
            }
        }
    }
}

TEST_CASE("edge queries on unqueryable instances") {
    oracle::Gen gen(44);
    const RandomString rs = gen.random_string(vertex_bits(4));
    const Generation masked = generate(VariantTag::Masked, rs, 16, HashKind::CarterWegman);
    CHECK(code_of([&] { EdgeOracle o(masked.instance, &masked.context); }) == ErrorCode::UnqueryableVariant);
    const Generation derived = generate(VariantTag::Derived, rs, 16, HashKind::CarterWegman);
    CHECK(code_of([&] { EdgeOracle o(derived.instance); }) == ErrorCode::UnqueryableVariant);
    const EdgeOracle ok(derived.instance, &derived.context);
    CHECK(code_of([&] { (void)ok.has_edge(3, 3); }) == ErrorCode::NotStrictlyOrdered);
}

TEST_CASE("derived and masked arrays ignore the chosen order") {
    oracle::Gen gen(45);
    for (int trial = 0; trial < 100; ++trial) {
        auto chosen = gen.subset(256, 8);
        std::shuffle(chosen.begin(), chosen.end(), gen.engine());
        const CliqueSeed a = CliqueSeed::from_chosen_order(chosen);
        std::shuffle(chosen.begin(), chosen.end(), gen.engine());
        const CliqueSeed b = CliqueSeed::from_chosen_order(chosen);
        for (const VariantTag v : {VariantTag::Derived, VariantTag::Masked}) {
            for (const HashKind k : kKinds) {
                CHECK(assemble(v, a, 256, k).instance.arrays == assemble(v, b, 256, k).instance.arrays);
            }
        }
    }
}

TEST_CASE("verify rejects malformed solutions") {
    oracle::Gen gen(46);
    const ParamSet p = derive_params(16);
    const Generation g = generate(VariantTag::Basic, gen.random_string(required_bits(p, VariantTag::Basic,
                                                                                      HashKind::CarterWegman)),
                                  16, HashKind::CarterWegman);
    CHECK(code_of([&] { verify(g.instance, Solution{{1, 2, 3}}); }) == ErrorCode::MalformedSolution);
    CHECK(code_of([&] { verify(g.instance, Solution{{1, 2, 2, 3}}); }) == ErrorCode::MalformedSolution);
    CHECK(code_of([&] { verify(g.instance, Solution{{1, 2, 3, 17}}); }) == ErrorCode::MalformedSolution);
    CHECK(code_of([&] { verify(g.instance, Solution{{0, 2, 3, 4}}); }) == ErrorCode::MalformedSolution);
}

TEST_CASE("perturbed solutions are usually rejected") {
    oracle::Gen gen(47);
    const ParamSet p = derive_params(16);
    int rejected = 0;
    const int trials = 400;
    for (int trial = 0; trial < trials; ++trial) {
        const Generation g =
            generate(VariantTag::Basic,
                     gen.random_string(required_bits(p, VariantTag::Basic, HashKind::CarterWegman)), 16,
                     HashKind::CarterWegman);
        std::vector<Vertex> vs = g.seed.vertices;
        Vertex replacement = 0;
        do {
            replacement = gen.uniform(1, 16);
        } while (std::find(vs.begin(), vs.end(), replacement) != vs.end());
        vs[gen.uniform(0, 3)] = replacement;
        std::sort(vs.begin(), vs.end());
        rejected += verify(g.instance, Solution{vs}) ? 0 : 1;
    }
    CHECK(rejected >= trials * 9 / 10);
}

TEST_CASE("masking identical filters cancels") {
    const BitArray a = BitArray::from_hex(9, "a501");
    const std::vector<BitArray> same{a, a};
    CHECK(fold_xor(same) == BitArray::zeroed(9));
}

TEST_CASE("validate_instance catches inconsistencies") {
    oracle::Gen gen(48);
    const ParamSet p = derive_params(16);
    const Generation g = generate(VariantTag::Multi, gen.random_string(required_bits(p, VariantTag::Multi,
                                                                                      HashKind::Toeplitz)),
                                  16, HashKind::Toeplitz);
    Instance broken = g.instance;
    broken.arrays.pop_back();
    CHECK(code_of([&] { validate_instance(broken); }) == ErrorCode::InvalidArgument);
    broken = g.instance;
    broken.perm = {1, 1, 2, 3};
    CHECK(code_of([&] { validate_instance(broken); }) == ErrorCode::InvalidArgument);
    broken = g.instance;
    broken.arrays[0] = BitArray::zeroed(10);
    CHECK(code_of([&] { validate_instance(broken); }) == ErrorCode::InvalidArgument);
    broken = g.instance;
    broken.kind = HashKind::CarterWegman;
    CHECK(code_of([&] { validate_instance(broken); }) == ErrorCode::InvalidArgument);
}

}  // TEST_SUITE
