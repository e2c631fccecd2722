#ifndef CHNORM_BUILDERS_HPP
#define CHNORM_BUILDERS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chnorm/algebra.hpp"

namespace chnorm {

// Full matrix algebra M_n(Q); basis e11, e12, ..., enn in row-major order.
Algebra matrix_algebra(std::size_t n);

// Q + Q*eps with eps^2 = 0.
Algebra dual_numbers();

// Basis 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k.
Algebra quaternion_algebra(const Rational& a, const Rational& b);

// Upper-triangular n x n matrices; basis e_ij (i <= j) in row-major order.
Algebra upper_triangular(std::size_t n);

// Polynomials in n variables truncated at degree 1: basis 1, y1, ..., yn
// with all products y_i y_j = 0.
Algebra truncated_poly(std::size_t n);

// Group algebra from an explicit multiplication table: table[g][h] is the
// index of g*h. The table must describe a group (closure, associativity,
// two-sided identity, inverses); otherwise DomainError.
Algebra group_algebra(std::string name,
                      const std::vector<std::vector<std::size_t>>& table,
                      std::vector<std::string> labels = {});

// Basis concatenation, unit (1, 1); no reordering across summands.
Algebra direct_sum(const Algebra& a, const Algebra& b);

struct SubalgebraResult {
  Algebra sub;
  // dim(parent) x dim(sub); column j holds the parent coordinates of the
  // j-th basis vector of the subalgebra.
  QMatrix inclusion;
};

// Subalgebra on the span of the given vectors (parent coordinates). The
// span must contain the unit and be multiplicatively closed; a non-closing
// span is a hard error, never completed automatically. Dependent spanning
// vectors are dropped (first independent subsequence wins).
SubalgebraResult subalgebra(const Algebra& parent,
                            const std::vector<std::vector<Rational>>& spanning,
                            std::string name);

}  // namespace chnorm

#endif  // CHNORM_BUILDERS_HPP
