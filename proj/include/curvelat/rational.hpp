#pragma once

#include <gmpxx.h>

#include <string>

namespace curvelat {

using BigInt = mpz_class;

// GMP keeps mpq_class values canonical after every arithmetic operation;
// construction from a numerator/denominator pair must go through
// make_rational so the lowest-terms invariant holds from the start.
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const BigInt& value) { return sgn(value) == 0; }

}  // namespace curvelat
