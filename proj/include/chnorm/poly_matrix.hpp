#ifndef CHNORM_POLY_MATRIX_HPP
#define CHNORM_POLY_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chnorm/multipoly.hpp"
#include "chnorm/unipoly.hpp"

namespace chnorm {

// Dense matrix with MultiPoly entries.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

  static PolyMatrix identity(std::size_t n, std::size_t num_vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return num_vars_; }

  MultiPoly& at(std::size_t r, std::size_t c);
  const MultiPoly& at(std::size_t r, std::size_t c) const;

  PolyMatrix operator*(const PolyMatrix& other) const;
  MultiPoly trace() const;
  std::vector<MultiPoly> row(std::size_t r) const;

 private:
  std::size_t rows_, cols_, num_vars_;
  std::vector<MultiPoly> entries_;
};

// det(t*I - M) via the Faddeev-LeVerrier recursion. The integer divisions
// in the recursion are exact over Q. Throws DomainError for non-square
// input.
UniPoly char_poly(const PolyMatrix& m);

// Fraction-free (Bareiss) determinant; all interior divisions are exact.
MultiPoly determinant(const PolyMatrix& m);

struct Dependence {
  // Minimal k such that rows 0..k are linearly dependent over the fraction
  // field, plus polynomial coefficients c0..ck with sum c_i * row_i = 0 and
  // c_k != 0. No rational-function value is ever materialized.
  std::size_t index;
  std::vector<MultiPoly> coefficients;
};

// Incremental fraction-free elimination over the rows, in order. Returns
// nullopt when all rows are independent.
std::optional<Dependence> minimal_dependence(const PolyMatrix& rows);

// Row-by-row variant of minimal_dependence for callers that generate rows
// lazily. Feed rows in order; add_row returns the dependence as soon as one
// appears.
class FractionFreeEchelon {
 public:
  explicit FractionFreeEchelon(std::size_t cols, std::size_t num_vars);

  // Returns the dependence coefficients (length = rows fed so far) when the
  // new row is a combination of its predecessors; otherwise installs the
  // row as a new pivot and returns nullopt.
  std::optional<std::vector<MultiPoly>> add_row(std::vector<MultiPoly> row);

  std::size_t rows_fed() const { return rows_fed_; }

 private:
  struct PivotRow {
    std::size_t col;
    std::vector<MultiPoly> value;
    std::vector<MultiPoly> transform;
  };

  std::size_t cols_;
  std::size_t num_vars_;
  std::size_t rows_fed_ = 0;
  std::vector<PivotRow> pivots_;
};

}  // namespace chnorm

#endif  // CHNORM_POLY_MATRIX_HPP
