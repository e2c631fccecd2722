#include "chnorm/rat_unipoly.hpp"

#include <sstream>

#include "chnorm/error.hpp"

namespace chnorm {

RatUniPoly::RatUniPoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void RatUniPoly::trim() {
  while (!coefficients_.empty() && chnorm::is_zero(coefficients_.back())) {
    coefficients_.pop_back();
  }
}

RatUniPoly RatUniPoly::constant(const Rational& value) {
  return RatUniPoly(std::vector<Rational>{value});
}

RatUniPoly RatUniPoly::variable() {
  return RatUniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

std::size_t RatUniPoly::degree() const {
  return coefficients_.empty() ? 0 : coefficients_.size() - 1;
}

Rational RatUniPoly::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

const Rational& RatUniPoly::leading() const {
  if (coefficients_.empty()) {
    throw DomainError("zero polynomial has no leading coefficient");
  }
  return coefficients_.back();
}

bool RatUniPoly::is_monic() const {
  return !coefficients_.empty() && coefficients_.back() == 1;
}

bool RatUniPoly::is_one() const {
  return coefficients_.size() == 1 && coefficients_[0] == 1;
}

RatUniPoly RatUniPoly::operator+(const RatUniPoly& other) const {
  std::vector<Rational> out(
      std::max(coefficients_.size(), other.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out[i] += coefficients_[i];
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    out[i] += other.coefficients_[i];
  }
  return RatUniPoly(std::move(out));
}

RatUniPoly RatUniPoly::operator-(const RatUniPoly& other) const {
  return *this + (-other);
}

RatUniPoly RatUniPoly::operator-() const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const Rational& c : coefficients_) out.push_back(-c);
  return RatUniPoly(std::move(out));
}

RatUniPoly RatUniPoly::operator*(const RatUniPoly& other) const {
  if (is_zero() || other.is_zero()) return RatUniPoly();
  std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() -
                                1,
                            Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return RatUniPoly(std::move(out));
}

RatUniPoly RatUniPoly::operator*(const Rational& scalar) const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const Rational& c : coefficients_) out.push_back(c * scalar);
  return RatUniPoly(std::move(out));
}

RatUniPoly RatUniPoly::derivative() const {
  if (coefficients_.size() <= 1) return RatUniPoly();
  std::vector<Rational> out;
  out.reserve(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out.push_back(coefficients_[i] * Rational(static_cast<long>(i)));
  }
  return RatUniPoly(std::move(out));
}

RatUniPoly RatUniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

RatUniPoly RatUniPoly::pow(std::size_t exponent) const {
  RatUniPoly out = constant(Rational(1));
  for (std::size_t i = 0; i < exponent; ++i) out = out * (*this);
  return out;
}

Rational RatUniPoly::evaluate(const Rational& point) const {
  Rational value(0);
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    value = value * point + coefficients_[i];
  }
  return value;
}

std::pair<RatUniPoly, RatUniPoly> RatUniPoly::divmod(
    const RatUniPoly& divisor) const {
  if (divisor.is_zero()) {
    throw DomainError("division by the zero polynomial");
  }
  RatUniPoly remainder = *this;
  if (remainder.is_zero() || remainder.degree() < divisor.degree()) {
    return {RatUniPoly(), remainder};
  }
  std::vector<Rational> quotient(remainder.degree() - divisor.degree() + 1,
                                 Rational(0));
  const Rational& lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const std::size_t shift = remainder.degree() - divisor.degree();
    const Rational factor = remainder.leading() / lead;
    quotient[shift] = factor;
    std::vector<Rational> next = remainder.coefficients_;
    for (std::size_t i = 0; i < divisor.coefficients_.size(); ++i) {
      next[i + shift] -= factor * divisor.coefficients_[i];
    }
    remainder = RatUniPoly(std::move(next));
    if (remainder.coefficients_.size() > shift + divisor.degree()) {
      // Leading term must have cancelled exactly.
      throw InternalError("univariate division failed to cancel leading term");
    }
  }
  return {RatUniPoly(std::move(quotient)), remainder};
}

std::string RatUniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Rational& c = coefficients_[i];
    if (chnorm::is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rational magnitude = negative ? Rational(-c) : c;
    if (i == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << var;
      if (i >= 2) out << '^' << i;
    }
  }
  return out.str();
}

RatUniPoly poly_gcd(const RatUniPoly& a, const RatUniPoly& b) {
  RatUniPoly x = a;
  RatUniPoly y = b;
  while (!y.is_zero()) {
    RatUniPoly r = x.divmod(y).second;
    x = y;
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd poly_extended_gcd(const RatUniPoly& a, const RatUniPoly& b) {
  RatUniPoly r0 = a, r1 = b;
  RatUniPoly s0 = RatUniPoly::constant(Rational(1)), s1;
  RatUniPoly t0, t1 = RatUniPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RatUniPoly s = s0 - q * s1;
    RatUniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational scale = Rational(1) / r0.leading();
  return {r0 * scale, s0 * scale, t0 * scale};
}

}  // namespace chnorm
