#ifndef CHNORM_RATIONAL_HPP
#define CHNORM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chnorm {

// Exact scalars of the base field Q. Values are kept canonical: positive
// denominator, numerator and denominator coprime, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a" or "a/b" in base 10 (optional leading '-'). Throws ParseError
// on anything else, including a zero denominator.
Rational rational_from_string(std::string_view text);

// Canonical rendering: "a" or "a/b" in lowest terms.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_one(const Rational& value) { return value == 1; }

// value^exponent with exponent >= 0.
Rational rational_pow(const Rational& value, unsigned long exponent);

}  // namespace chnorm

#endif  // CHNORM_RATIONAL_HPP
