#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace polyrep {

/// Exact rational scalar. Canonical form (lowest terms, positive denominator)
/// is maintained by GMP for all arithmetic results.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised when an input document cannot be parsed at all.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a parsed or constructed object violates a domain invariant
/// (dilation out of range, ragged indices, zero denominators, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" with optional sign. Rejects zero denominators.
Rational parse_rational(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

/// base^exp for integer exp (negative allowed). Throws ValidationError on
/// 0^negative; 0^0 == 1.
Rational pow_rational(const Rational& base, long exp);

std::string rational_vector_to_string(const std::vector<Rational>& values);

}  // namespace polyrep
