#ifndef CHNORM_RAT_UNIPOLY_HPP
#define CHNORM_RAT_UNIPOLY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chnorm/rational.hpp"

namespace chnorm {

// Dense univariate polynomial over Q. coefficients()[i] is the coefficient
// of t^i; the leading coefficient is nonzero unless the polynomial is zero.
class RatUniPoly {
 public:
  RatUniPoly() = default;
  explicit RatUniPoly(std::vector<Rational> coefficients);

  static RatUniPoly constant(const Rational& value);
  static RatUniPoly variable();  // t

  bool is_zero() const { return coefficients_.empty(); }
  std::size_t degree() const;  // 0 for the zero polynomial
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;
  bool is_monic() const;
  bool is_one() const;

  RatUniPoly operator+(const RatUniPoly& other) const;
  RatUniPoly operator-(const RatUniPoly& other) const;
  RatUniPoly operator*(const RatUniPoly& other) const;
  RatUniPoly operator*(const Rational& scalar) const;
  RatUniPoly operator-() const;
  bool operator==(const RatUniPoly& other) const {
    return coefficients_ == other.coefficients_;
  }
  bool operator!=(const RatUniPoly& other) const { return !(*this == other); }

  RatUniPoly derivative() const;
  RatUniPoly monic() const;  // zero stays zero
  RatUniPoly pow(std::size_t exponent) const;
  Rational evaluate(const Rational& point) const;

  // Field division: returns {quotient, remainder}; divisor must be nonzero.
  std::pair<RatUniPoly, RatUniPoly> divmod(const RatUniPoly& divisor) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  std::vector<Rational> coefficients_;

  void trim();
};

// Monic greatest common divisor (Euclid); gcd(0, 0) = 0.
RatUniPoly poly_gcd(const RatUniPoly& a, const RatUniPoly& b);

struct ExtendedGcd {
  RatUniPoly g;  // monic gcd
  RatUniPoly s;  // s*a + t*b = g
  RatUniPoly t;
};
ExtendedGcd poly_extended_gcd(const RatUniPoly& a, const RatUniPoly& b);

}  // namespace chnorm

#endif  // CHNORM_RAT_UNIPOLY_HPP
