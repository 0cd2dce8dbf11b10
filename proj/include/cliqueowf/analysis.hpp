#pragma once

#include "cliqueowf/bigint.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliqueowf {

enum class BoundFlag { Exact, UpperBound };

std::string_view to_string(BoundFlag flag) noexcept;

/// A probability (or bound) stored as its base-2 logarithm, so magnitudes such
/// as 2^-9632 survive. -infinity encodes zero.
struct LogProb {
    long double log2_value = 0;
    BoundFlag flag = BoundFlag::Exact;

    static LogProb zero(BoundFlag flag = BoundFlag::Exact);

    [[nodiscard]] bool is_zero() const noexcept;
    /// 2^log2_value; underflows to 0 for tiny magnitudes.
    [[nodiscard]] long double probability() const noexcept;

    /// log-sum-exp; the result is an upper bound if either operand is.
    friend LogProb operator+(const LogProb& a, const LogProb& b);
};

/// Union bound on a spurious c-clique in a graph with edge density alpha and a
/// planted c-clique: sum_{k=1..c} C(n-c,k) C(c,k) alpha^(k(c-k) + C(k,2)).
/// n defaults to 2^c. Binomials are exact big integers.
LogProb spurious_sum(unsigned c, long double alpha, std::optional<BigInt> n = std::nullopt);

/// log2 of the k-th exact term of the sum above.
long double spurious_term_log2(unsigned c, unsigned k, long double alpha, const BigInt& n);

/// (c 2^c)^k / (2c)^(k (c - (k+1)/2)), the per-term bound at alpha = 1/(2c).
LogProb term_simplified(unsigned c, unsigned k);

/// c 2^c / (2c)^(c - (k+2)/2), the successive-term ratio exactly as printed.
LogProb term_ratio(unsigned c, unsigned k);

/// c 2^c / (2c)^(c/2 - 1): the smallest ratio as restated in prose (k = c-1).
LogProb term_ratio_restated(unsigned c);

/// 2 (c 2^c) / (2c)^(c-1). Requires c > 8 so each ratio is at most 1/2.
LogProb total_bound(unsigned c);

/// 2^((c^2+c)/2) c^(-(c^2-c)/2): extra spurious-solution mass once hash
/// parameters are derived from the clique.
LogProb derived_params_extra(unsigned c);

/// C(2^c, c) / 2^((c^2-c)/ln 2): chance a given clique maps to a fixed masked array.
LogProb masked_map_probability(unsigned c);

enum class BirthdayPopulation {
    LiteralPairs,   // M = (n^2 - n) / 2
    CliqueCount,    // M = C(n, c)
};

std::string_view to_string(BirthdayPopulation population) noexcept;

/// 1 - exp(-M (M-1) / (2 * 2^((c^2-c)/ln 2))), with 1 - e^-x taken as x below
/// 2^-10 and as 1 above 2^10.
LogProb birthday_collision(unsigned c, BirthdayPopulation population);

/// One line of the bounds table.
struct BoundRow {
    std::string formula_id;
    std::string inputs;
    LogProb value;
    std::optional<long double> published;  // value quoted in the literature, if any
    std::string status;                    // match / within / DISCREPANT / -
};

/// Rows for the given c; alpha adds the exact spurious sum; all_constants adds
/// every named bound and, at c = 64, the published exponents next to them.
std::vector<BoundRow> bounds_table(unsigned c, std::optional<long double> alpha, bool all_constants);

}  // namespace cliqueowf
