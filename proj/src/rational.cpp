#include "chnorm/rational.hpp"

#include <cctype>

#include "chnorm/error.hpp"

namespace chnorm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw ParseError("malformed rational (zero denominator): '" +
                     std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational rational_pow(const Rational& value, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), exponent);
  // num/den is already canonical when value is.
  return Rational(num, den);
}

}  // namespace chnorm
