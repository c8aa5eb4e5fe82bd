#pragma once

// Arbitrary-precision integers and rationals (GMP). mpq_class keeps values
// canonical (lowest terms, positive denominator) through every arithmetic
// operator; values built from a raw numerator/denominator pair must go
// through make_rational.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramsum {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt make_int(std::uint64_t v);
BigInt make_int(std::int64_t v);

// Throws DomainError for a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(std::int64_t num, std::int64_t den = 1);

// "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q". Throws DomainError on malformed input.
BigRational parse_rational(std::string_view text);

bool is_integer(const BigRational& q);

// Correctly handles magnitudes beyond the double exponent range of the
// numerator and denominator separately.
double to_double(const BigRational& q);
double to_double(const BigInt& z);

// b^e for non-negative e.
BigInt pow(const BigInt& base, unsigned long exponent);
BigRational pow(const BigRational& base, unsigned long exponent);

}  // namespace ramsum
