#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>

namespace cliqueowf {

using BigInt = boost::multiprecision::cpp_int;

/// Number of bits needed to write x in binary; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// Smallest b with 2^b >= x, for x >= 1.
std::size_t ceil_log2(const BigInt& x);

/// log2(x) for x > 0, accurate to long double precision at any magnitude.
long double log2_big(const BigInt& x);

/// n (n-1) ... (n-k+1)
BigInt falling_factorial(const BigInt& n, std::uint64_t k);

/// Exact binomial coefficient; 0 when k > n.
BigInt binomial(const BigInt& n, std::uint64_t k);

}  // namespace cliqueowf
