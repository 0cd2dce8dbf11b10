#include "cliqueowf/analysis.hpp"

#include "cliqueowf/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace cliqueowf {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double lg(long double x) { return std::log2(x); }

/// (c^2 - c) / ln 2: the exponent of the masked-array state count.
long double masked_exponent(unsigned c) {
    const long double cc = c;
    return (cc * cc - cc) / std::log(2.0L);
}

void require_c(unsigned c, unsigned minimum) {
    if (c < minimum) {
        throw Error(ErrorCode::DomainError,
                    "c = " + std::to_string(c) + " below minimum " + std::to_string(minimum));
    }
}

}  // namespace

std::string_view to_string(BoundFlag flag) noexcept {
    return flag == BoundFlag::Exact ? "exact" : "upper_bound";
}

std::string_view to_string(BirthdayPopulation population) noexcept {
    return population == BirthdayPopulation::LiteralPairs ? "literal_pairs" : "clique_count";
}

LogProb LogProb::zero(BoundFlag flag) { return LogProb{kNegInf, flag}; }

bool LogProb::is_zero() const noexcept { return std::isinf(log2_value) && log2_value < 0; }

long double LogProb::probability() const noexcept { return std::exp2(log2_value); }

LogProb operator+(const LogProb& a, const LogProb& b) {
    const BoundFlag flag =
        (a.flag == BoundFlag::UpperBound || b.flag == BoundFlag::UpperBound) ? BoundFlag::UpperBound
                                                                             : BoundFlag::Exact;
    if (a.is_zero()) return LogProb{b.log2_value, flag};
    if (b.is_zero()) return LogProb{a.log2_value, flag};
    const long double hi = std::max(a.log2_value, b.log2_value);
    const long double lo = std::min(a.log2_value, b.log2_value);
    return LogProb{hi + std::log1p(std::exp2(lo - hi)) / std::log(2.0L), flag};
}

long double spurious_term_log2(unsigned c, unsigned k, long double alpha, const BigInt& n) {
    const BigInt outside = binomial(n - c, k);
    const BigInt inside = binomial(BigInt(c), k);
    if (outside == 0 || inside == 0) {
        return kNegInf;
    }
    const long double kk = k;
    const long double exponent = kk * (static_cast<long double>(c) - kk) + kk * (kk - 1) / 2;
    if (alpha == 0) {
        return exponent == 0 ? log2_big(outside) + log2_big(inside) : kNegInf;
    }
    return log2_big(outside) + log2_big(inside) + exponent * lg(alpha);
}

LogProb spurious_sum(unsigned c, long double alpha, std::optional<BigInt> n) {
    require_c(c, 2);
    if (!(alpha >= 0 && alpha <= 1)) {
        throw Error(ErrorCode::DomainError, "alpha must lie in [0, 1]");
    }
    const BigInt vertices = n.value_or(BigInt(1) << c);
    if (vertices < c) {
        throw Error(ErrorCode::DomainError, "n must be at least c");
    }
    LogProb total = LogProb::zero(BoundFlag::UpperBound);
    for (unsigned k = 1; k <= c; ++k) {
        total = total + LogProb{spurious_term_log2(c, k, alpha, vertices), BoundFlag::UpperBound};
    }
    return total;
}

LogProb term_simplified(unsigned c, unsigned k) {
    require_c(c, 1);
    if (k < 1 || k > c) {
        throw Error(ErrorCode::DomainError, "term index k must lie in [1, c]");
    }
    const long double cc = c;
    const long double kk = k;
    const long double log2c = lg(cc);
    return LogProb{kk * (log2c + cc) - kk * (cc - (kk + 1) / 2) * (1 + log2c), BoundFlag::UpperBound};
}

LogProb term_ratio(unsigned c, unsigned k) {
    require_c(c, 2);
    if (k < 1 || k > c - 1) {
        throw Error(ErrorCode::DomainError, "ratio index k must lie in [1, c-1]");
    }
    const long double cc = c;
    const long double log2c = lg(cc);
    return LogProb{(cc + log2c) - (cc - (static_cast<long double>(k) + 2) / 2) * (1 + log2c),
                   BoundFlag::Exact};
}

LogProb term_ratio_restated(unsigned c) {
    require_c(c, 2);
    const long double cc = c;
    const long double log2c = lg(cc);
    return LogProb{(cc + log2c) - (cc / 2 - 1) * (1 + log2c), BoundFlag::Exact};
}

LogProb total_bound(unsigned c) {
    if (c <= 8) {
        throw Error(ErrorCode::DomainError, "the doubling bound needs c > 8");
    }
    const long double cc = c;
    const long double log2c = lg(cc);
    return LogProb{1 + cc + log2c - (cc - 1) * (1 + log2c), BoundFlag::UpperBound};
}

LogProb derived_params_extra(unsigned c) {
    require_c(c, 2);
    const long double cc = c;
    return LogProb{(cc * cc + cc) / 2 - (cc * cc - cc) / 2 * lg(cc), BoundFlag::UpperBound};
}

LogProb masked_map_probability(unsigned c) {
    require_c(c, 2);
    const BigInt cliques = binomial(BigInt(1) << c, c);
    return LogProb{log2_big(cliques) - masked_exponent(c), BoundFlag::Exact};
}

LogProb birthday_collision(unsigned c, BirthdayPopulation population) {
    require_c(c, 2);
    const BigInt n = BigInt(1) << c;
    const BigInt items =
        population == BirthdayPopulation::LiteralPairs ? (n * n - n) / 2 : binomial(n, c);
    if (items <= 1) {
        return LogProb::zero();
    }
    const long double log2x = log2_big(items) + log2_big(items - 1) - 1 - masked_exponent(c);
    if (log2x < -10) {
        return LogProb{log2x, BoundFlag::Exact};
    }
    if (log2x > 10) {
        return LogProb{0, BoundFlag::Exact};
    }
    const long double x = std::exp2(log2x);
    return LogProb{lg(-std::expm1(-x)), BoundFlag::Exact};
}

namespace {

enum class Claim { None, Point, Ceiling };

BoundRow make_row(std::string id, std::string inputs, LogProb value, Claim claim = Claim::None,
                  long double published = 0) {
    BoundRow row{std::move(id), std::move(inputs), value, std::nullopt, "-"};
    if (claim == Claim::None) {
        return row;
    }
    row.published = published;
    if (claim == Claim::Point) {
        row.status = std::fabs(value.log2_value - published) <= 0.5L ? "match" : "DISCREPANT";
    } else {
        row.status = value.log2_value <= published ? "within" : "DISCREPANT";
    }
    return row;
}

}  // namespace

std::vector<BoundRow> bounds_table(unsigned c, std::optional<long double> alpha, bool all_constants) {
    require_c(c, 2);
    const bool quoted = c == 64;
    const auto claim = [quoted](Claim kind) { return quoted ? kind : Claim::None; };
    const std::string cs = "c=" + std::to_string(c);

    std::vector<BoundRow> rows;
    if (alpha) {
        rows.push_back(make_row("spurious_sum", cs + fmt::format(",alpha={}", static_cast<double>(*alpha)),
                                spurious_sum(c, *alpha)));
    }
    if (all_constants) {
        const long double quoted_terms[] = {-371, -735, -1092};
        for (unsigned k = 1; k <= std::min(3U, c); ++k) {
            rows.push_back(make_row("term_simplified", cs + ",k=" + std::to_string(k),
                                    term_simplified(c, k), claim(Claim::Point), quoted_terms[k - 1]));
        }
        rows.push_back(make_row("term_simplified", cs + ",k=" + std::to_string(c), term_simplified(c, c),
                                claim(Claim::Ceiling), -9512));
        rows.push_back(make_row("term_ratio", cs + ",k=" + std::to_string(c - 1), term_ratio(c, c - 1)));
        rows.push_back(make_row("term_ratio_restated", cs + ",k=" + std::to_string(c - 1),
                                term_ratio_restated(c), claim(Claim::Point), -147));
    }
    if (c > 8) {
        rows.push_back(make_row("total_bound", cs, total_bound(c), claim(Claim::Point), -370));
    }
    rows.push_back(make_row("derived_params_extra", cs, derived_params_extra(c), claim(Claim::Point), -10016));
    rows.push_back(make_row("masked_map_probability", cs, masked_map_probability(c),
                            claim(Claim::Point), -2044));
    rows.push_back(make_row("birthday_collision", cs + ",population=clique_count",
                            birthday_collision(c, BirthdayPopulation::CliqueCount), claim(Claim::Point), 0));
    rows.push_back(make_row("birthday_collision", cs + ",population=literal_pairs",
                            birthday_collision(c, BirthdayPopulation::LiteralPairs), claim(Claim::Point), 0));
    return rows;
}

}  // namespace cliqueowf
