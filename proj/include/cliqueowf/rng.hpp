#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cliqueowf {

/// Non-cryptographic, seedable generator for experiments and tests.
/// Stream (master_seed, index) is std::mt19937_64 seeded through std::seed_seq
/// with the four 32-bit halves {master lo, master hi, index lo, index hi}.
/// Both engine and seed_seq are fully specified by the standard, so streams
/// are identical across platforms. Changing this mapping changes every golden
/// report; bump kTrialRngVersion if it ever does.
inline constexpr int kTrialRngVersion = 1;

class TrialRng {
public:
    using result_type = std::uint64_t;

    explicit TrialRng(std::uint64_t master_seed, std::uint64_t stream = 0);

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// True with probability p (53-bit resolution).
    bool bernoulli(double p);

    /// `count` uniformly random bytes.
    std::vector<std::uint8_t> bytes(std::size_t count);

private:
    std::mt19937_64 engine_;
};

}  // namespace cliqueowf
