#include "chnorm/poly_matrix.hpp"

#include <utility>

#include "chnorm/error.hpp"

namespace chnorm {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols,
                       std::size_t num_vars)
    : rows_(rows),
      cols_(cols),
      num_vars_(num_vars),
      entries_(rows * cols, MultiPoly(num_vars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t num_vars) {
  PolyMatrix m(n, n, num_vars);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = MultiPoly::one(num_vars);
  return m;
}

MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  return entries_[r * cols_ + c];
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  return entries_[r * cols_ + c];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_ || num_vars_ != other.num_vars_) {
    throw DomainError("matrix shape mismatch in product");
  }
  PolyMatrix out(rows_, other.cols_, num_vars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const MultiPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const MultiPoly& b = other.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

MultiPoly PolyMatrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
  MultiPoly t(num_vars_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<MultiPoly> PolyMatrix::row(std::size_t r) const {
  std::vector<MultiPoly> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

UniPoly char_poly(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("characteristic polynomial of a non-square matrix");
  }
  const std::size_t n = m.rows();
  const std::size_t nv = m.num_vars();
  std::vector<MultiPoly> coeffs(n + 1, MultiPoly(nv));
  coeffs[n] = MultiPoly::one(nv);
  if (n == 0) return UniPoly(nv, std::move(coeffs));

  // M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A*(M_k + c_{n-k} I).
  PolyMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    MultiPoly ck = mk.trace() * Rational(-1, static_cast<long>(k));
    coeffs[n - k] = ck;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    mk = m * mk;
  }
  return UniPoly(nv, std::move(coeffs));
}

namespace {

MultiPoly bareiss_divide(const MultiPoly& numerator,
                         const MultiPoly& denominator) {
  if (denominator.is_one()) return numerator;
  auto q = numerator.divided_exactly(denominator);
  if (!q) {
    throw InternalError(
        "fraction-free elimination produced a non-exact division");
  }
  return *std::move(q);
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  const std::size_t nv = m.num_vars();
  if (n == 0) return MultiPoly::one(nv);
  std::vector<std::vector<MultiPoly>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
  bool negate = false;
  MultiPoly prev = MultiPoly::one(nv);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return MultiPoly(nv);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = bareiss_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = MultiPoly(nv);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

FractionFreeEchelon::FractionFreeEchelon(std::size_t cols,
                                         std::size_t num_vars)
    : cols_(cols), num_vars_(num_vars) {}

std::optional<std::vector<MultiPoly>> FractionFreeEchelon::add_row(
    std::vector<MultiPoly> row) {
  if (row.size() != cols_) throw DomainError("row length mismatch");
  const std::size_t idx = rows_fed_++;
  std::vector<MultiPoly> transform(idx + 1, MultiPoly(num_vars_));
  transform[idx] = MultiPoly::one(num_vars_);

  // Fold the new row through the existing pivots in installation order;
  // each step is one Bareiss update, so the division by the previous pivot
  // is exact.
  MultiPoly denom = MultiPoly::one(num_vars_);
  for (const PivotRow& pr : pivots_) {
    const MultiPoly factor = row[pr.col];
    const MultiPoly& pivot = pr.value[pr.col];
    if (factor.is_zero()) {
      if (!denom.is_one()) {
        for (MultiPoly& v : row) v = bareiss_divide(v * pivot, denom);
        for (std::size_t c = 0; c < transform.size(); ++c) {
          transform[c] = bareiss_divide(transform[c] * pivot, denom);
        }
      } else {
        for (MultiPoly& v : row) v = v * pivot;
        for (MultiPoly& t : transform) t = t * pivot;
      }
    } else {
      for (std::size_t c = 0; c < cols_; ++c) {
        row[c] = bareiss_divide(row[c] * pivot - factor * pr.value[c], denom);
      }
      for (std::size_t c = 0; c < transform.size(); ++c) {
        const MultiPoly prc = c < pr.transform.size() ? pr.transform[c]
                                                      : MultiPoly(num_vars_);
        transform[c] =
            bareiss_divide(transform[c] * pivot - factor * prc, denom);
      }
    }
    denom = pivot;
  }

  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!row[c].is_zero()) {
      lead = c;
      break;
    }
  }
  if (lead == cols_) return transform;
  pivots_.push_back(PivotRow{lead, std::move(row), std::move(transform)});
  return std::nullopt;
}

std::optional<Dependence> minimal_dependence(const PolyMatrix& rows) {
  FractionFreeEchelon echelon(rows.cols(), rows.num_vars());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (auto dep = echelon.add_row(rows.row(r))) {
      return Dependence{r, *std::move(dep)};
    }
  }
  return std::nullopt;
}

}  // namespace chnorm
