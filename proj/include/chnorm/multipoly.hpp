#ifndef CHNORM_MULTIPOLY_HPP
#define CHNORM_MULTIPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chnorm/rational.hpp"

namespace chnorm {

// Exponent vector of one monomial; length always equals the owning
// polynomial's variable count.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order with x1 > x2 > ... > xm, largest monomial
// first. This is the canonical term order for all rendering.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct HomogeneityReport {
  bool homogeneous = false;
  std::size_t degree = 0;  // reported as 0 for the zero polynomial
  bool zero = false;
};

// Sparse multivariate polynomial over Q in variables x1..xm. No stored
// coefficient is ever zero; two polynomials are equal iff their variable
// counts and term maps are equal.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& value);
  static MultiPoly one(std::size_t num_vars);
  // x_{index+1}: zero-based index into the variable list.
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(std::size_t num_vars, Monomial exponents,
                            const Rational& coefficient);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& exponents) const;
  Rational constant_coefficient() const;
  // Leading term in graded-lex order; polynomial must be nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const;

  // Accumulates coefficient onto the monomial, erasing the term if the sum
  // is zero.
  void add_term(const Monomial& exponents, const Rational& coefficient);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const Rational& scalar) const;
  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  std::size_t total_degree() const;  // 0 for the zero polynomial
  HomogeneityReport homogeneity() const;

  // Exact quotient this/divisor, or nullopt when no polynomial quotient
  // exists. Callers use the nullopt case as a divisibility test.
  std::optional<MultiPoly> divided_exactly(const MultiPoly& divisor) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Substitutes x_i -> forms[i]. All forms must share one variable count,
  // which becomes the variable count of the result.
  MultiPoly substitute(std::span<const MultiPoly> forms) const;

  // Reinterprets the polynomial in a wider variable set; existing variables
  // keep their indices, the new trailing ones do not occur.
  MultiPoly with_num_vars(std::size_t wider) const;

  MultiPoly pow(std::size_t exponent) const;

  // Canonical rendering: graded-lex term order, "a" or "a/b" coefficients
  // in lowest terms, variables x1..xm, e.g. "x1*x4 - x2*x3".
  std::string to_string() const;

 private:
  std::size_t num_vars_;
  TermMap terms_;

  void require_same_vars(const MultiPoly& other) const;
};

MultiPoly operator*(const Rational& scalar, const MultiPoly& poly);

}  // namespace chnorm

#endif  // CHNORM_MULTIPOLY_HPP
