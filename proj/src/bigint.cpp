#include "cliqueowf/bigint.hpp"

#include <cmath>

namespace cliqueowf {

std::size_t bit_length(const BigInt& x) {
    if (x <= 0) {
        return 0;
    }
    return boost::multiprecision::msb(x) + 1;
}

std::size_t ceil_log2(const BigInt& x) {
    if (x <= 1) {
        return 0;
    }
    return bit_length(x - 1);
}

long double log2_big(const BigInt& x) {
    const std::size_t bits = bit_length(x);
    if (bits <= 64) {
        return std::log2(static_cast<long double>(static_cast<std::uint64_t>(x)));
    }
    // Top 64 bits carry all the precision a long double can hold.
    const std::size_t shift = bits - 64;
    const auto top = static_cast<std::uint64_t>(x >> shift);
    return std::log2(static_cast<long double>(top)) + static_cast<long double>(shift);
}

BigInt falling_factorial(const BigInt& n, std::uint64_t k) {
    BigInt result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= (n - i);
    }
    return result;
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (n < k) {
        return 0;
    }
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result holds C(n - k + i - 1, i - 1); each step stays integral.
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace cliqueowf
