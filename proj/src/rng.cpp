#include "cliqueowf/rng.hpp"

#include "cliqueowf/error.hpp"

namespace cliqueowf {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t master_seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t stream)
    : engine_(seeded_engine(master_seed, stream)) {}

std::uint64_t TrialRng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorCode::InvalidArgument, "empty sampling range");
    }
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = max() - (max() % bound + 1) % bound;
    std::uint64_t draw = engine_();
    while (draw > limit) {
        draw = engine_();
    }
    return draw % bound;
}

bool TrialRng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

std::vector<std::uint8_t> TrialRng::bytes(std::size_t count) {
    std::vector<std::uint8_t> out(count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 8 == 0) {
            word = engine_();
        }
        out[i] = static_cast<std::uint8_t>(word >> (56 - 8 * (i % 8)));
    }
    return out;
}

}  // namespace cliqueowf
