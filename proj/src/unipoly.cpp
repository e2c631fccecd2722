#include "chnorm/unipoly.hpp"

#include <sstream>

#include "chnorm/error.hpp"

namespace chnorm {

UniPoly::UniPoly(std::size_t num_vars, std::vector<MultiPoly> coefficients)
    : num_vars_(num_vars), coefficients_(std::move(coefficients)) {
  for (const MultiPoly& c : coefficients_) {
    if (c.num_vars() != num_vars_) {
      throw DomainError("coefficient variable-count mismatch");
    }
  }
  trim();
}

UniPoly UniPoly::constant(MultiPoly value) {
  const std::size_t nv = value.num_vars();
  return UniPoly(nv, std::vector<MultiPoly>{std::move(value)});
}

void UniPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

std::size_t UniPoly::degree() const {
  return coefficients_.empty() ? 0 : coefficients_.size() - 1;
}

MultiPoly UniPoly::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : MultiPoly(num_vars_);
}

const MultiPoly& UniPoly::leading() const {
  if (coefficients_.empty()) {
    throw DomainError("zero polynomial has no leading coefficient");
  }
  return coefficients_.back();
}

bool UniPoly::is_monic() const {
  return !coefficients_.empty() && coefficients_.back().is_one();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw DomainError("variable-count mismatch between polynomials");
  }
  std::vector<MultiPoly> out(
      std::max(coefficients_.size(), other.coefficients_.size()),
      MultiPoly(num_vars_));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out[i] += coefficients_[i];
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    out[i] += other.coefficients_[i];
  }
  return UniPoly(num_vars_, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw DomainError("variable-count mismatch between polynomials");
  }
  std::vector<MultiPoly> out(
      std::max(coefficients_.size(), other.coefficients_.size()),
      MultiPoly(num_vars_));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out[i] += coefficients_[i];
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    out[i] -= other.coefficients_[i];
  }
  return UniPoly(num_vars_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw DomainError("variable-count mismatch between polynomials");
  }
  if (is_zero() || other.is_zero()) return UniPoly(num_vars_);
  std::vector<MultiPoly> out(
      coefficients_.size() + other.coefficients_.size() - 1,
      MultiPoly(num_vars_));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return UniPoly(num_vars_, std::move(out));
}

bool UniPoly::operator==(const UniPoly& other) const {
  return num_vars_ == other.num_vars_ && coefficients_ == other.coefficients_;
}

std::optional<UniPoly> UniPoly::divided_exactly(const UniPoly& divisor) const {
  if (num_vars_ != divisor.num_vars_) {
    throw DomainError("variable-count mismatch between polynomials");
  }
  if (!divisor.is_monic()) {
    throw DomainError("exact univariate division requires a monic divisor");
  }
  if (is_zero()) return UniPoly(num_vars_);
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<MultiPoly> rem = coefficients_;
  std::vector<MultiPoly> quot(degree() - divisor.degree() + 1,
                              MultiPoly(num_vars_));
  for (std::size_t top = rem.size(); top-- > divisor.degree();) {
    const std::size_t shift = top - divisor.degree();
    if (rem[top].is_zero()) continue;
    quot[shift] = rem[top];
    for (std::size_t i = 0; i <= divisor.degree(); ++i) {
      rem[i + shift] -= quot[shift] * divisor.coefficients()[i];
    }
  }
  for (const MultiPoly& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return UniPoly(num_vars_, std::move(quot));
}

RatUniPoly UniPoly::specialize(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const MultiPoly& c : coefficients_) out.push_back(c.evaluate(point));
  return RatUniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const MultiPoly& c = coefficients_[i];
    if (c.is_zero()) continue;
    // Single-term coefficients are folded into the running sign; multi-term
    // ones are parenthesized, negated when every term is negative.
    std::string body;
    bool negative = false;
    if (c.term_count() == 1) {
      const auto& [mono, coeff] = c.leading_term();
      negative = sgn(coeff) < 0;
      const MultiPoly mag = negative ? -c : c;
      if (i == 0) {
        body = mag.to_string();
      } else if (mag.is_one()) {
        body.clear();
      } else {
        body = mag.to_string() + "*";
      }
    } else {
      bool all_negative = true;
      for (const auto& [mono, coeff] : c.terms()) {
        if (sgn(coeff) > 0) {
          all_negative = false;
          break;
        }
      }
      negative = all_negative;
      const MultiPoly shown = all_negative ? -c : c;
      body = "(" + shown.to_string() + ")";
      if (i != 0) body += "*";
    }
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    out << body;
    if (i >= 1) {
      out << var;
      if (i >= 2) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace chnorm
