#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace surgery {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bernoulli numbers in the topologist's indexing.
///
/// bernoulli(k) is the positive rational |B_{2k}| of the classical sequence,
/// so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, B_4 = 1/30, B_5 = 5/66. Computed
/// exactly with the Akiyama-Tanigawa triangle; results are cached and the
/// function is safe to call concurrently. Throws DomainError for k < 1.
Rational bernoulli(int k);

/// Numerator of bernoulli(k) / (4k) in lowest terms.
BigInt num_b_over_4k(int k);

BigInt gcd(const BigInt& a, const BigInt& b);

// Least non-negative residue of a modulo n (n >= 1).
BigInt mod_floor(const BigInt& a, const BigInt& n);

BigInt pow2(unsigned e);

// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace surgery
