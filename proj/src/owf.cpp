#include "cliqueowf/owf.hpp"

#include "cliqueowf/error.hpp"

#include <algorithm>
#include <string>

namespace cliqueowf {

namespace {

ParamSet generation_params(std::uint64_t n) {
    const ParamSet params = derive_params(n);
    if (params.c > kMaxGenerationLog2) {
        throw Error(ErrorCode::TooLarge, "instance generation supports n <= 2^32");
    }
    return params;
}

std::vector<BitArray> arrays_for(VariantTag variant, std::span<const Edge> edges, std::uint64_t n,
                                 std::span<const HashSpec> specs, std::uint64_t m) {
    std::vector<BitArray> arrays = build_filters(edges, n, specs, m);
    if (variant == VariantTag::Masked) {
        return {fold_xor(arrays)};
    }
    return arrays;
}

bool self_masking(VariantTag variant) {
    return variant == VariantTag::Derived || variant == VariantTag::Masked;
}

}  // namespace

std::vector<Edge> clique_edges(std::span<const Vertex> vertices, std::uint64_t n) {
    std::vector<Edge> edges;
    edges.reserve(vertices.size() * (vertices.size() - 1) / 2);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const Vertex a = vertices[i];
            const Vertex b = vertices[j];
            edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
        }
    }
    std::sort(edges.begin(), edges.end(), [n](const Edge& x, const Edge& y) {
        return encode_edge(x, n) < encode_edge(y, n);
    });
    return edges;
}

std::vector<BitArray> build_filters(std::span<const Edge> edges, std::uint64_t n,
                                    std::span<const HashSpec> specs, std::uint64_t m) {
    std::vector<BitArray> arrays;
    arrays.reserve(specs.size());
    for (const HashSpec& spec : specs) {
        if (range_of(spec) != m) {
            throw Error(ErrorCode::InvalidArgument, "hash range does not match array length");
        }
        BitArray arr = BitArray::zeroed(m);
        for (const Edge& e : edges) {
            arr.set(hash_index(spec, encode_edge(e, n)));
        }
        arrays.push_back(std::move(arr));
    }
    return arrays;
}

BitArray fold_xor(std::span<const BitArray> arrays) {
    if (arrays.empty()) {
        throw Error(ErrorCode::InvalidArgument, "nothing to fold");
    }
    BitArray folded = arrays.front();
    for (std::size_t i = 1; i < arrays.size(); ++i) {
        folded ^= arrays[i];
    }
    return folded;
}

Generation assemble(VariantTag variant, const CliqueSeed& seed, std::uint64_t n, HashKind kind,
                    std::span<const HashSpec> specs) {
    const ParamSet params = generation_params(n);
    if (seed.vertices.size() != params.c) {
        throw Error(ErrorCode::InvalidArgument, "seed must hold exactly c vertices");
    }
    const std::vector<Edge> edges = clique_edges(seed.vertices, n);
    const HashLayout layout = params.layout(variant, kind);

    Generation gen;
    gen.seed = seed;
    if (self_masking(variant)) {
        gen.context.specs = derive_specs_from_clique(edges, n, layout, params.f_derived);
    } else {
        if (specs.size() != params.hash_count(variant)) {
            throw Error(ErrorCode::InvalidArgument, "wrong number of hash specs for variant");
        }
        if (std::any_of(specs.begin(), specs.end(),
                        [kind](const HashSpec& s) { return kind_of(s) != kind; })) {
            throw Error(ErrorCode::InvalidArgument, "hash spec kind disagrees with instance kind");
        }
        gen.context.specs.assign(specs.begin(), specs.end());
    }

    Instance& inst = gen.instance;
    inst.variant = variant;
    inst.kind = kind;
    inst.n = n;
    inst.perm = seed.perm;
    inst.arrays = arrays_for(variant, edges, n, gen.context.specs, layout.m);
    if (!self_masking(variant)) {
        inst.specs = gen.context.specs;
    }
    return gen;
}

Generation generate(VariantTag variant, const RandomString& rs, std::uint64_t n, HashKind kind) {
    const ParamSet params = generation_params(n);
    const CliqueSeed seed = extract_distinct_vertices(rs, n);
    std::vector<HashSpec> specs;
    if (!self_masking(variant)) {
        specs = extract_hash_params(rs, vertex_bits(params.c), params.layout(variant, kind),
                                    params.hash_count(variant));
    }
    return assemble(variant, seed, n, kind, specs);
}

Instance generate_basic(const RandomString& rs, std::uint64_t n, HashKind kind) {
    return generate(VariantTag::Basic, rs, n, kind).instance;
}

Instance generate_multi(const RandomString& rs, std::uint64_t n, HashKind kind) {
    return generate(VariantTag::Multi, rs, n, kind).instance;
}

Instance generate_derived(const RandomString& rs, std::uint64_t n, HashKind kind) {
    return generate(VariantTag::Derived, rs, n, kind).instance;
}

Instance generate_masked(const RandomString& rs, std::uint64_t n, HashKind kind) {
    return generate(VariantTag::Masked, rs, n, kind).instance;
}

void validate_instance(const Instance& inst) {
    const ParamSet params = generation_params(inst.n);
    const std::uint64_t m = params.array_length(inst.variant);
    if (inst.arrays.size() != params.array_count(inst.variant)) {
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(params.array_count(inst.variant)) +
                        " arrays for variant " + std::string(to_string(inst.variant)));
    }
    for (const BitArray& arr : inst.arrays) {
        if (arr.size() != m) {
            throw Error(ErrorCode::InvalidArgument, "array length " + std::to_string(arr.size()) +
                                                        " differs from " + std::to_string(m));
        }
    }
    const std::size_t expected_specs = self_masking(inst.variant) ? 0 : params.hash_count(inst.variant);
    if (inst.specs.size() != expected_specs) {
        throw Error(ErrorCode::InvalidArgument, "wrong number of hash specs for variant");
    }
    for (const HashSpec& spec : inst.specs) {
        if (kind_of(spec) != inst.kind || range_of(spec) != m) {
            throw Error(ErrorCode::InvalidArgument, "hash spec disagrees with instance header");
        }
    }
    if (inst.perm.size() != params.c || !is_rank_permutation(inst.perm)) {
        throw Error(ErrorCode::InvalidArgument, "perm is not a permutation of [1, c]");
    }
}

bool verify(const Instance& inst, const Solution& sol) {
    const ParamSet params = generation_params(inst.n);
    const auto& vs = sol.vertices;
    if (vs.size() != params.c) {
        throw Error(ErrorCode::MalformedSolution, "solution must list exactly " +
                                                      std::to_string(params.c) + " vertices");
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 1 || vs[i] > inst.n) {
            throw Error(ErrorCode::MalformedSolution, "vertex " + std::to_string(vs[i]) + " out of range");
        }
        if (i > 0 && vs[i - 1] >= vs[i]) {
            throw Error(ErrorCode::MalformedSolution, "solution vertices must be strictly ascending");
        }
    }
    CliqueSeed seed{vs, inst.perm};
    // Restores the chosen order; arrays depend only on the vertex set.
    const std::vector<Vertex> chosen = seed.chosen_order();
    const std::vector<Edge> edges = clique_edges(chosen, inst.n);
    const HashLayout layout = params.layout(inst.variant, inst.kind);

    std::vector<HashSpec> derived;
    std::span<const HashSpec> specs = inst.specs;
    if (self_masking(inst.variant)) {
        derived = derive_specs_from_clique(edges, inst.n, layout, params.f_derived);
        specs = derived;
    }
    return arrays_for(inst.variant, edges, inst.n, specs, layout.m) == inst.arrays;
}

EdgeOracle::EdgeOracle(const Instance& inst, const SpecsContext* context)
    : inst_(&inst), n_(inst.n) {
    switch (inst.variant) {
        case VariantTag::Basic:
        case VariantTag::Multi:
            specs_ = inst.specs;
            break;
        case VariantTag::Derived:
            if (context == nullptr || context->specs.size() != inst.arrays.size()) {
                throw Error(ErrorCode::UnqueryableVariant,
                            "derived instances are queryable only with the generator's specs");
            }
            specs_ = context->specs;
            break;
        case VariantTag::Masked:
            throw Error(ErrorCode::UnqueryableVariant,
                        "masked instances have no per-edge membership semantics");
    }
    if (specs_.size() != inst.arrays.size()) {
        throw Error(ErrorCode::InvalidArgument, "spec count differs from array count");
    }
}

bool EdgeOracle::has_edge(Vertex u, Vertex v) const {
    const EdgeCode code = encode_edge(Edge{u, v}, n_);
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        if (!inst_->arrays[i].test(hash_index(specs_[i], code))) {
            return false;
        }
    }
    return true;
}

bool implicit_edge_query(const Instance& inst, Vertex u, Vertex v, const SpecsContext* context) {
    return EdgeOracle(inst, context).has_edge(u, v);
}

}  // namespace cliqueowf
