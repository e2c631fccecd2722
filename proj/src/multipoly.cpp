#include "chnorm/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chnorm/error.hpp"

namespace chnorm {

namespace {

std::uint64_t monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

}  // namespace

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const std::uint64_t da = monomial_degree(a);
  const std::uint64_t db = monomial_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& value) {
  MultiPoly p(num_vars);
  if (!chnorm::is_zero(value)) {
    p.terms_.emplace(Monomial(num_vars, 0), value);
  }
  return p;
}

MultiPoly MultiPoly::one(std::size_t num_vars) {
  return constant(num_vars, Rational(1));
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) {
    throw DomainError("variable index out of range");
  }
  Monomial m(num_vars, 0);
  m[index] = 1;
  MultiPoly p(num_vars);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::size_t num_vars, Monomial exponents,
                              const Rational& coefficient) {
  if (exponents.size() != num_vars) {
    throw DomainError("monomial exponent vector has wrong length");
  }
  MultiPoly p(num_vars);
  if (!chnorm::is_zero(coefficient)) {
    p.terms_.emplace(std::move(exponents), coefficient);
  }
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0 &&
         terms_.begin()->second == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_coefficient() const {
  return coefficient(Monomial(num_vars_, 0));
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) {
    throw DomainError("zero polynomial has no leading term");
  }
  return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& exponents,
                         const Rational& coefficient) {
  if (exponents.size() != num_vars_) {
    throw DomainError("term exponent vector has wrong length");
  }
  if (chnorm::is_zero(coefficient)) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (chnorm::is_zero(it->second)) terms_.erase(it);
  }
}

void MultiPoly::require_same_vars(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw DomainError("variable-count mismatch between polynomials");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_vars(other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_vars(other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  out -= other;
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  require_same_vars(other);
  MultiPoly out(num_vars_);
  if (terms_.empty() || other.terms_.empty()) return out;
  Monomial mono(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      for (std::size_t v = 0; v < num_vars_; ++v) mono[v] = ma[v] + mb[v];
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(num_vars_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  MultiPoly out(num_vars_);
  if (chnorm::is_zero(scalar)) return out;
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, coeff * scalar);
  }
  return out;
}

MultiPoly operator*(const Rational& scalar, const MultiPoly& poly) {
  return poly * scalar;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return num_vars_ == other.num_vars_ && terms_ == other.terms_;
}

std::size_t MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  // Graded order: the leading term carries the total degree.
  return static_cast<std::size_t>(monomial_degree(terms_.begin()->first));
}

HomogeneityReport MultiPoly::homogeneity() const {
  HomogeneityReport report;
  if (terms_.empty()) {
    report.homogeneous = true;
    report.degree = 0;
    report.zero = true;
    return report;
  }
  const std::uint64_t degree = monomial_degree(terms_.begin()->first);
  for (const auto& [mono, coeff] : terms_) {
    if (monomial_degree(mono) != degree) return report;  // not homogeneous
  }
  report.homogeneous = true;
  report.degree = static_cast<std::size_t>(degree);
  return report;
}

std::optional<MultiPoly> MultiPoly::divided_exactly(
    const MultiPoly& divisor) const {
  require_same_vars(divisor);
  if (divisor.is_zero()) {
    throw DomainError("division by the zero polynomial");
  }
  MultiPoly quotient(num_vars_);
  MultiPoly remainder = *this;
  const auto& [dm, dc] = divisor.leading_term();
  Monomial step(num_vars_);
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (rm[v] < dm[v]) return std::nullopt;
      step[v] = rm[v] - dm[v];
    }
    const MultiPoly factor = MultiPoly::monomial(num_vars_, step, rc / dc);
    quotient += factor;
    remainder -= factor * divisor;
  }
  return quotient;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) {
    throw DomainError("evaluation point has wrong length");
  }
  // Lazily grown power tables, one per variable.
  std::vector<std::vector<Rational>> powers(num_vars_);
  auto power = [&](std::size_t v, std::uint32_t e) -> const Rational& {
    auto& table = powers[v];
    if (table.empty()) table.push_back(Rational(1));
    while (table.size() <= e) table.push_back(table.back() * point[v]);
    return table[e];
  };
  Rational total(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational value = coeff;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (mono[v] != 0) value *= power(v, mono[v]);
    }
    total += value;
  }
  return total;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> forms) const {
  if (forms.size() != num_vars_) {
    throw DomainError("substitution arity mismatch");
  }
  std::size_t target_vars = 0;
  if (!forms.empty()) {
    target_vars = forms[0].num_vars();
    for (const MultiPoly& f : forms) {
      if (f.num_vars() != target_vars) {
        throw DomainError("substitution forms disagree on variable count");
      }
    }
  }
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  auto power = [&](std::size_t v, std::uint32_t e) -> const MultiPoly& {
    auto& table = powers[v];
    if (table.empty()) table.push_back(MultiPoly::one(target_vars));
    while (table.size() <= e) table.push_back(table.back() * forms[v]);
    return table[e];
  };
  MultiPoly total(target_vars);
  for (const auto& [mono, coeff] : terms_) {
    MultiPoly value = MultiPoly::constant(target_vars, coeff);
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (mono[v] != 0) value = value * power(v, mono[v]);
    }
    total += value;
  }
  return total;
}

MultiPoly MultiPoly::with_num_vars(std::size_t wider) const {
  if (wider < num_vars_) {
    throw DomainError("cannot shrink the variable set");
  }
  MultiPoly out(wider);
  for (const auto& [mono, coeff] : terms_) {
    Monomial m(wider, 0);
    std::copy(mono.begin(), mono.end(), m.begin());
    out.terms_.emplace(std::move(m), coeff);
  }
  return out;
}

MultiPoly MultiPoly::pow(std::size_t exponent) const {
  MultiPoly out = MultiPoly::one(num_vars_);
  for (std::size_t i = 0; i < exponent; ++i) out = out * (*this);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = sgn(coeff) < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    std::string vars;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (mono[v] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += 'x' + std::to_string(v + 1);
      if (mono[v] >= 2) vars += '^' + std::to_string(mono[v]);
    }
    if (vars.empty()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << vars;
    } else {
      out << magnitude.get_str() << '*' << vars;
    }
  }
  return out.str();
}

}  // namespace chnorm
