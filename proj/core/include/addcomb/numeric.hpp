#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// floor for exact rationals (rounds toward -infinity).
BigInt floor_rational(const Rational& q);

// q^e for a non-negative integer exponent, exact.
Rational rational_pow(const Rational& q, unsigned e);
BigInt int_pow(const BigInt& b, unsigned e);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

// Natural log of a positive rational, robust for numerators/denominators far
// outside the double range.
long double log_rational(const Rational& q);

// Parses "3", "-7/4", "0.25", "1e-6" exactly. Decimal and scientific input is
// converted to the exact rational it denotes, so "0.1" is 1/10.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Prints x with `digits` significant digits ("%.*g").
std::string format_sig(double x, int digits = 12);

// Rounds x to `digits` significant digits.
double round_sig(double x, int digits = 12);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t n);

// Inverse of a modulo n; throws DomainError when gcd(a, n) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

// Deterministic Miller-Rabin over the first twelve prime bases, exact for
// every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime p with lo < p <= hi, or 0 if none.
std::uint64_t smallest_prime_in(std::uint64_t lo, std::uint64_t hi);

// Binomial coefficient C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace addcomb
