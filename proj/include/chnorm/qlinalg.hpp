#ifndef CHNORM_QLINALG_HPP
#define CHNORM_QLINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chnorm/rational.hpp"

namespace chnorm {

// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  QMatrix operator*(const QMatrix& other) const;
  std::vector<Rational> apply(std::span<const Rational> vec) const;
  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;
  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Basis of {v : M v = 0}, one vector per free column, in ascending free
// column order (deterministic).
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// One solution of M x = b, or nullopt when inconsistent. Free variables are
// set to zero.
std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           std::span<const Rational> b);

std::optional<QMatrix> inverse(const QMatrix& m);

// Coordinates of v in the span of the given (independent) rows, or nullopt
// when v lies outside the span.
std::optional<std::vector<Rational>> coordinates_in_span(
    const std::vector<std::vector<Rational>>& span_rows,
    std::span<const Rational> v);

bool is_zero_vector(std::span<const Rational> v);

}  // namespace chnorm

#endif  // CHNORM_QLINALG_HPP
