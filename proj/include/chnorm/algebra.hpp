#ifndef CHNORM_ALGEBRA_HPP
#define CHNORM_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chnorm/multipoly.hpp"
#include "chnorm/poly_matrix.hpp"
#include "chnorm/qlinalg.hpp"
#include "chnorm/rational.hpp"

namespace chnorm {

// One sparse structure constant: a_i * a_j contains c * a_k.
struct StructureEntry {
  std::size_t i, j, k;
  Rational c;

  bool operator==(const StructureEntry& other) const {
    return i == other.i && j == other.j && k == other.k && c == other.c;
  }
};

// A finite-dimensional unital associative algebra over Q presented by
// structure constants on a chosen basis. Construction enforces shape
// (indices in range, nonzero coefficients, no duplicate (i,j,k)); the
// algebra axioms themselves are checked by validate().
//
// Algebra is an immutable shared value: copies are cheap and Elements keep
// their algebra alive.
class Algebra {
 public:
  Algebra(std::string name, std::vector<std::string> basis,
          std::vector<Rational> unit, std::vector<StructureEntry> table);

  const std::string& name() const { return data_->name; }
  std::size_t dim() const { return data_->basis.size(); }
  const std::vector<std::string>& basis() const { return data_->basis; }
  const std::vector<Rational>& unit() const { return data_->unit; }
  const std::vector<StructureEntry>& table() const { return data_->table; }

  // Sparse product row: a_i * a_j as a list of (k, c).
  const std::vector<std::pair<std::size_t, Rational>>& product(
      std::size_t i, std::size_t j) const {
    return data_->products[i * dim() + j];
  }

  bool same_as(const Algebra& other) const { return data_ == other.data_; }

  std::vector<Rational> multiply_coords(std::span<const Rational> a,
                                        std::span<const Rational> b) const;
  std::vector<MultiPoly> multiply_coords(std::span<const MultiPoly> a,
                                         std::span<const MultiPoly> b) const;

 private:
  struct Data {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Rational> unit;
    std::vector<StructureEntry> table;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> products;
  };
  std::shared_ptr<const Data> data_;
};

class Element {
 public:
  Element(Algebra algebra, std::vector<Rational> coords);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const { return is_zero_vector(coords_); }

  Element operator*(const Element& other) const;
  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Rational& scalar) const;
  bool operator==(const Element& other) const;
  Element pow(std::size_t exponent) const;

  std::string to_string() const;  // "[c1, c2, ...]"

 private:
  Algebra algebra_;
  std::vector<Rational> coords_;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Brute-force check of the unit law and associativity on all basis triples.
// The report lists every failed check.
ValidationReport validate(const Algebra& a);

// Throws DomainError when the algebra fails validation. Entry point for
// operations that require a valid algebra.
void require_valid(const Algebra& a);

Element unit_element(const Algebra& a);
Element basis_element(const Algebra& a, std::size_t i);

// Matrix of left multiplication by a: column j holds the coordinates of
// a * a_j.
QMatrix left_mult_matrix(const Element& a);

// The generic element x = sum x_i a_i in the left regular representation:
// entry (k, j) is sum_i x_i c_{ij}^k, linear in the variables.
PolyMatrix regular_rep_generic(const Algebra& a);

// Coordinates of the generic element: coordinate i is the variable x_{i+1}.
std::vector<MultiPoly> generic_element(const Algebra& a);

std::string coords_to_string(std::span<const Rational> coords);

}  // namespace chnorm

#endif  // CHNORM_ALGEBRA_HPP
