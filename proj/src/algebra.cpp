#include "chnorm/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chnorm/error.hpp"

namespace chnorm {

Algebra::Algebra(std::string name, std::vector<std::string> basis,
                 std::vector<Rational> unit,
                 std::vector<StructureEntry> table) {
  const std::size_t m = basis.size();
  if (m == 0) throw DomainError("algebra dimension must be positive");
  if (unit.size() != m) {
    throw DomainError("unit vector length differs from dimension");
  }
  std::sort(table.begin(), table.end(),
            [](const StructureEntry& a, const StructureEntry& b) {
              return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
            });
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  auto data = std::make_shared<Data>();
  data->products.resize(m * m);
  for (const StructureEntry& e : table) {
    if (e.i >= m || e.j >= m || e.k >= m) {
      throw DomainError("structure-constant index out of range");
    }
    if (is_zero(e.c)) {
      throw DomainError("structure-constant coefficient must be nonzero");
    }
    if (!seen.insert({e.i, e.j, e.k}).second) {
      throw DomainError("duplicate structure-constant entry");
    }
    data->products[e.i * m + e.j].emplace_back(e.k, e.c);
  }
  data->name = std::move(name);
  data->basis = std::move(basis);
  data->unit = std::move(unit);
  data->table = std::move(table);
  data_ = std::move(data);
}

namespace {

bool entry_is_zero(const Rational& r) { return is_zero(r); }
bool entry_is_zero(const MultiPoly& p) { return p.is_zero(); }

template <typename T>
std::vector<T> multiply_impl(const Algebra& alg, std::span<const T> a,
                             std::span<const T> b, const T& zero) {
  const std::size_t m = alg.dim();
  if (a.size() != m || b.size() != m) {
    throw DomainError("coordinate length differs from dimension");
  }
  std::vector<T> out(m, zero);
  for (std::size_t i = 0; i < m; ++i) {
    if (entry_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (entry_is_zero(b[j])) continue;
      const T prod = a[i] * b[j];
      for (const auto& [k, c] : alg.product(i, j)) {
        out[k] += prod * c;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> Algebra::multiply_coords(
    std::span<const Rational> a, std::span<const Rational> b) const {
  return multiply_impl<Rational>(*this, a, b, Rational(0));
}

std::vector<MultiPoly> Algebra::multiply_coords(
    std::span<const MultiPoly> a, std::span<const MultiPoly> b) const {
  std::size_t nv = 0;
  for (const MultiPoly& p : a) nv = std::max(nv, p.num_vars());
  for (const MultiPoly& p : b) nv = std::max(nv, p.num_vars());
  for (const MultiPoly& p : a) {
    if (p.num_vars() != nv) {
      throw DomainError("coordinate polynomials disagree on variable count");
    }
  }
  for (const MultiPoly& p : b) {
    if (p.num_vars() != nv) {
      throw DomainError("coordinate polynomials disagree on variable count");
    }
  }
  return multiply_impl<MultiPoly>(*this, a, b, MultiPoly(nv));
}

Element::Element(Algebra algebra, std::vector<Rational> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) {
    throw DomainError("coordinate length differs from dimension");
  }
}

Element Element::operator*(const Element& other) const {
  if (!algebra_.same_as(other.algebra_)) {
    throw DomainError("elements live in different algebras");
  }
  return Element(algebra_, algebra_.multiply_coords(coords_, other.coords_));
}

Element Element::operator+(const Element& other) const {
  if (!algebra_.same_as(other.algebra_)) {
    throw DomainError("elements live in different algebras");
  }
  std::vector<Rational> out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return Element(algebra_, std::move(out));
}

Element Element::operator-(const Element& other) const {
  if (!algebra_.same_as(other.algebra_)) {
    throw DomainError("elements live in different algebras");
  }
  std::vector<Rational> out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.coords_[i];
  return Element(algebra_, std::move(out));
}

Element Element::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coords_;
  for (Rational& c : out) c *= scalar;
  return Element(algebra_, std::move(out));
}

bool Element::operator==(const Element& other) const {
  return algebra_.same_as(other.algebra_) && coords_ == other.coords_;
}

Element Element::pow(std::size_t exponent) const {
  Element out = unit_element(algebra_);
  for (std::size_t i = 0; i < exponent; ++i) out = out * (*this);
  return out;
}

std::string Element::to_string() const { return coords_to_string(coords_); }

std::string coords_to_string(std::span<const Rational> coords) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ", ";
    out << coords[i].get_str();
  }
  out << ']';
  return out.str();
}

ValidationReport validate(const Algebra& a) {
  ValidationReport report;
  const std::size_t m = a.dim();

  auto basis_coords = [&](std::size_t i) {
    std::vector<Rational> v(m, Rational(0));
    v[i] = 1;
    return v;
  };

  for (std::size_t i = 0; i < m; ++i) {
    const auto ei = basis_coords(i);
    const auto left = a.multiply_coords(a.unit(), ei);
    const auto right = a.multiply_coords(ei, a.unit());
    if (left != ei) {
      report.failures.push_back("unit law fails: 1*" + a.basis()[i] + " = " +
                                coords_to_string(left));
    }
    if (right != ei) {
      report.failures.push_back("unit law fails: " + a.basis()[i] + "*1 = " +
                                coords_to_string(right));
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    const auto ei = basis_coords(i);
    for (std::size_t j = 0; j < m; ++j) {
      const auto ej = basis_coords(j);
      const auto ij = a.multiply_coords(ei, ej);
      for (std::size_t k = 0; k < m; ++k) {
        const auto ek = basis_coords(k);
        const auto lhs = a.multiply_coords(ij, ek);
        const auto rhs = a.multiply_coords(ei, a.multiply_coords(ej, ek));
        if (lhs != rhs) {
          report.failures.push_back(
              "associativity fails at (" + a.basis()[i] + ", " + a.basis()[j] +
              ", " + a.basis()[k] + "): lhs = " + coords_to_string(lhs) +
              ", rhs = " + coords_to_string(rhs));
        }
      }
    }
  }
  return report;
}

void require_valid(const Algebra& a) {
  const ValidationReport report = validate(a);
  if (!report.ok()) {
    throw DomainError("algebra '" + a.name() + "' fails validation: " +
                      report.failures.front());
  }
}

Element unit_element(const Algebra& a) { return Element(a, a.unit()); }

Element basis_element(const Algebra& a, std::size_t i) {
  if (i >= a.dim()) throw DomainError("basis index out of range");
  std::vector<Rational> v(a.dim(), Rational(0));
  v[i] = 1;
  return Element(a, std::move(v));
}

QMatrix left_mult_matrix(const Element& a) {
  const Algebra& alg = a.algebra();
  const std::size_t m = alg.dim();
  QMatrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (is_zero(a.coords()[i])) continue;
      for (const auto& [k, c] : alg.product(i, j)) {
        out.at(k, j) += a.coords()[i] * c;
      }
    }
  }
  return out;
}

PolyMatrix regular_rep_generic(const Algebra& a) {
  const std::size_t m = a.dim();
  PolyMatrix x(m, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [k, c] : a.product(i, j)) {
        Monomial mono(m, 0);
        mono[i] = 1;
        x.at(k, j).add_term(mono, c);
      }
    }
  }
  return x;
}

std::vector<MultiPoly> generic_element(const Algebra& a) {
  const std::size_t m = a.dim();
  std::vector<MultiPoly> coords;
  coords.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    coords.push_back(MultiPoly::variable(m, i));
  }
  return coords;
}

}  // namespace chnorm
