#ifndef CHNORM_UNIPOLY_HPP
#define CHNORM_UNIPOLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chnorm/multipoly.hpp"
#include "chnorm/rat_unipoly.hpp"

namespace chnorm {

// Univariate polynomial in t with MultiPoly coefficients, i.e. an element
// of Q[x1..xm][t]. Dense storage; the leading coefficient is nonzero
// unless the polynomial is zero.
class UniPoly {
 public:
  explicit UniPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  UniPoly(std::size_t num_vars, std::vector<MultiPoly> coefficients);

  static UniPoly constant(MultiPoly value);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return coefficients_.empty(); }
  std::size_t degree() const;  // 0 for the zero polynomial
  const std::vector<MultiPoly>& coefficients() const { return coefficients_; }
  MultiPoly coefficient(std::size_t i) const;
  const MultiPoly& leading() const;
  bool is_monic() const;

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  bool operator==(const UniPoly& other) const;
  bool operator!=(const UniPoly& other) const { return !(*this == other); }

  // Exact quotient by a monic divisor; nullopt when the remainder is
  // nonzero. The monic requirement keeps coefficient arithmetic
  // division-free.
  std::optional<UniPoly> divided_exactly(const UniPoly& divisor) const;

  // Specializes x_i -> point[i] coefficient-wise.
  RatUniPoly specialize(std::span<const Rational> point) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  std::size_t num_vars_;
  std::vector<MultiPoly> coefficients_;

  void trim();
};

}  // namespace chnorm

#endif  // CHNORM_UNIPOLY_HPP
