#include "chnorm/structure.hpp"

#include <algorithm>
#include <random>

#include "chnorm/error.hpp"
#include "chnorm/factor_q.hpp"

namespace chnorm {

namespace {

std::vector<Rational> basis_coords(std::size_t m, std::size_t i) {
  std::vector<Rational> v(m, Rational(0));
  v[i] = 1;
  return v;
}

// Span of the pairwise products of two families of vectors, as RREF rows.
std::vector<std::vector<Rational>> product_span(
    const Algebra& a, const std::vector<std::vector<Rational>>& left,
    const std::vector<std::vector<Rational>>& right) {
  std::vector<std::vector<Rational>> products;
  for (const auto& u : left) {
    for (const auto& v : right) {
      auto w = a.multiply_coords(u, v);
      if (!is_zero_vector(w)) products.push_back(std::move(w));
    }
  }
  if (products.empty()) return {};
  QMatrix m = QMatrix::from_rows(products);
  const auto pivots = rref(m);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

RadicalBasis radical(const Algebra& a) {
  require_valid(a);
  const std::size_t m = a.dim();

  // Traces of left multiplication by each basis vector.
  std::vector<Rational> trace_of(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [k, c] : a.product(i, j)) {
        if (k == j) trace_of[i] += c;
      }
    }
  }
  // T(a_i, a_j) = trace(L_{a_i a_j}).
  QMatrix form(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [k, c] : a.product(i, j)) {
        form.at(i, j) += c * trace_of[k];
      }
    }
  }

  RadicalBasis rad;
  rad.vectors = kernel_basis(form);
  {
    // Canonical RREF basis for deterministic output.
    if (!rad.vectors.empty()) {
      QMatrix rows = QMatrix::from_rows(rad.vectors);
      const auto pivots = rref(rows);
      rad.vectors.clear();
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        rad.vectors.push_back(rows.row(r));
      }
    }
  }

  // Two-sided ideal check.
  for (const auto& v : rad.vectors) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto left = a.multiply_coords(basis_coords(m, i), v);
      const auto right = a.multiply_coords(v, basis_coords(m, i));
      if (!coordinates_in_span(rad.vectors, left) ||
          !coordinates_in_span(rad.vectors, right)) {
        throw InternalError("trace-form kernel is not a two-sided ideal");
      }
    }
  }

  // Nilpotency: J, J^2, ... must reach zero. J^s spans are recomputed
  // exactly; the dimension strictly drops, so s <= dim + 1.
  rad.nilpotency_index = 1;
  std::vector<std::vector<Rational>> power = rad.vectors;
  while (!power.empty()) {
    ++rad.nilpotency_index;
    if (rad.nilpotency_index > m + 1) {
      throw InternalError("trace-form kernel is not nilpotent");
    }
    power = product_span(a, power, rad.vectors);
  }
  if (rad.vectors.empty()) rad.nilpotency_index = 1;
  return rad;
}

QuotientResult quotient_algebra(const Algebra& a, const RadicalBasis& rad) {
  require_valid(a);
  const std::size_t m = a.dim();
  const std::size_t r = rad.dim();
  const std::size_t q = m - r;

  // Complement coordinates: the non-pivot columns of the radical rows.
  std::vector<bool> is_pivot(m, false);
  if (r > 0) {
    QMatrix rows = QMatrix::from_rows(rad.vectors);
    for (std::size_t p : rref(rows)) is_pivot[p] = true;
  }
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < m; ++c) {
    if (!is_pivot[c]) complement.push_back(c);
  }
  if (complement.size() != q) {
    throw InternalError("complement size mismatch against the radical");
  }

  // Basis-change matrix B = [complement unit vectors | radical vectors];
  // the projection is the top q rows of B^{-1}.
  QMatrix b(m, m);
  for (std::size_t j = 0; j < q; ++j) b.at(complement[j], j) = 1;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < m; ++i) b.at(i, q + j) = rad.vectors[j][i];
  }
  const auto b_inv = inverse(b);
  if (!b_inv) {
    throw InternalError("radical complement does not span");
  }
  QMatrix projection(q, m);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < m; ++j) projection.at(i, j) = b_inv->at(i, j);
  }
  QMatrix section(m, q);
  for (std::size_t j = 0; j < q; ++j) section.at(complement[j], j) = 1;

  // Structure constants on the complement basis.
  std::vector<StructureEntry> table;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const auto prod = a.multiply_coords(basis_coords(m, complement[i]),
                                          basis_coords(m, complement[j]));
      const auto coords = projection.apply(prod);
      for (std::size_t k = 0; k < q; ++k) {
        if (!is_zero(coords[k])) table.push_back({i, j, k, coords[k]});
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < q; ++j) labels.push_back(a.basis()[complement[j]]);
  Algebra quotient(a.name() + "/rad", std::move(labels),
                   projection.apply(a.unit()), std::move(table));
  require_valid(quotient);

  // The projection must be an algebra homomorphism on all basis products.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto prod = a.multiply_coords(basis_coords(m, i), basis_coords(m, j));
      const auto lhs = projection.apply(prod);
      const auto rhs = quotient.multiply_coords(
          projection.apply(basis_coords(m, i)),
          projection.apply(basis_coords(m, j)));
      if (lhs != rhs) {
        throw InternalError("quotient projection is not an algebra map");
      }
    }
  }
  // And the quotient must be semisimple.
  if (!radical(quotient).vectors.empty()) {
    throw InternalError("quotient by the radical is not semisimple");
  }
  return {std::move(quotient), std::move(projection), std::move(section)};
}

std::vector<Element> center(const Algebra& a) {
  require_valid(a);
  const std::size_t m = a.dim();
  // Unknown z = sum z_i a_i; equations z a_j - a_j z = 0 for all j.
  QMatrix system(m * m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [k, c] : a.product(i, j)) {
        system.at(j * m + k, i) += c;
      }
      for (const auto& [k, c] : a.product(j, i)) {
        system.at(j * m + k, i) -= c;
      }
    }
  }
  std::vector<Element> out;
  for (auto& v : kernel_basis(system)) out.emplace_back(a, std::move(v));
  return out;
}

namespace {

// Minimal polynomial of an element over Q (monic).
RatUniPoly element_min_poly(const Element& z) {
  const Algebra& alg = z.algebra();
  const std::size_t m = alg.dim();
  std::vector<std::vector<Rational>> rows;
  rows.push_back(alg.unit());
  Element power = unit_element(alg);
  for (std::size_t d = 1; d <= m + 1; ++d) {
    power = power * z;
    // Solve power = sum c_i * rows[i] if dependent.
    if (auto coords = coordinates_in_span(rows, power.coords())) {
      std::vector<Rational> coeffs(d + 1, Rational(0));
      for (std::size_t i = 0; i < d; ++i) coeffs[i] = -(*coords)[i];
      coeffs[d] = 1;
      return RatUniPoly(std::move(coeffs));
    }
    rows.push_back(power.coords());
  }
  throw InternalError("element has no minimal polynomial below the dimension");
}

Element evaluate_poly_at(const RatUniPoly& g, const Element& z) {
  const Algebra& alg = z.algebra();
  Element acc = unit_element(alg) * g.coefficient(0);
  Element power = unit_element(alg);
  for (std::size_t i = 1; i < g.coefficients().size(); ++i) {
    power = power * z;
    acc = acc + power * g.coefficient(i);
  }
  return acc;
}

bool commutes_with_basis(const Element& e) {
  const Algebra& alg = e.algebra();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Element b = basis_element(alg, i);
    if (!(e * b == b * e)) return false;
  }
  return true;
}

}  // namespace

std::vector<Element> central_idempotents(const Algebra& semisimple,
                                         std::uint64_t seed) {
  require_valid(semisimple);
  if (!radical(semisimple).vectors.empty()) {
    throw DomainError("central_idempotents requires a semisimple algebra");
  }
  const std::vector<Element> z_basis = center(semisimple);
  const std::size_t h = z_basis.size();

  // Separating-element search: center basis vectors, then small integer
  // combinations (geometric weight rows), then seeded random coordinates.
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<Rational> c(h, Rational(0));
    c[i] = 1;
    candidates.push_back(std::move(c));
  }
  for (long t = 2; t <= 11; ++t) {
    std::vector<Rational> c(h);
    Rational w(1);
    for (std::size_t i = 0; i < h; ++i) {
      c[i] = w;
      w *= t;
    }
    candidates.push_back(std::move(c));
  }
  std::mt19937_64 engine(seed);
  while (candidates.size() < 100) {
    std::vector<Rational> c(h);
    for (auto& x : c) {
      x = Rational(-20 + static_cast<long>(engine() % 41));
    }
    candidates.push_back(std::move(c));
  }

  for (const auto& weights : candidates) {
    Element z = unit_element(semisimple) * Rational(0);
    for (std::size_t i = 0; i < h; ++i) z = z + z_basis[i] * weights[i];
    const RatUniPoly mu = element_min_poly(z);
    if (mu.degree() != h) continue;  // not separating

    const Factorization fac = factor_rational(mu);
    for (const auto& [factor, mult] : fac.factors) {
      if (mult != 1) {
        throw InternalError(
            "separating central element has a non-squarefree minimal "
            "polynomial in a semisimple algebra");
      }
    }
    // e_i = g_i(z) with g_i = 1 mod u_i and 0 mod u_j: take the cofactor
    // M_i = mu / u_i and invert it modulo u_i.
    std::vector<Element> idempotents;
    for (const auto& [factor, mult] : fac.factors) {
      const RatUniPoly cofactor = mu.divmod(factor).first;
      const ExtendedGcd eg = poly_extended_gcd(cofactor, factor);
      if (!eg.g.is_one()) {
        throw InternalError("cofactor not invertible modulo its factor");
      }
      const RatUniPoly g = (eg.s * cofactor).divmod(mu).second;
      idempotents.push_back(evaluate_poly_at(g, z));
    }

    // Idempotent axioms, exactly.
    Element sum = unit_element(semisimple) * Rational(0);
    for (const Element& e : idempotents) sum = sum + e;
    if (!(sum == unit_element(semisimple))) {
      throw InternalError("central idempotents do not sum to the unit");
    }
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
      if (!(idempotents[i] * idempotents[i] == idempotents[i])) {
        throw InternalError("interpolated element is not idempotent");
      }
      if (!commutes_with_basis(idempotents[i])) {
        throw InternalError("interpolated idempotent is not central");
      }
      for (std::size_t j = i + 1; j < idempotents.size(); ++j) {
        if (!(idempotents[i] * idempotents[j]).is_zero()) {
          throw InternalError("central idempotents are not orthogonal");
        }
      }
    }
    return idempotents;
  }
  throw InternalError(
      "no separating central element found within the retry cap");
}

std::vector<SimpleFactor> simple_factors(
    const Algebra& ss, const std::vector<Element>& idempotents) {
  require_valid(ss);
  const std::size_t m = ss.dim();
  std::vector<SimpleFactor> out;
  std::size_t total = 0;
  for (const Element& e : idempotents) {
    // Basis of ss * e from the products of basis vectors with e.
    std::vector<std::vector<Rational>> image;
    for (std::size_t i = 0; i < m; ++i) {
      auto v = ss.multiply_coords(basis_coords(m, i), e.coords());
      if (!is_zero_vector(v)) image.push_back(std::move(v));
    }
    QMatrix rows = QMatrix::from_rows(image);
    const auto pivots = rref(rows);
    std::vector<std::vector<Rational>> block_basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      block_basis.push_back(rows.row(r));
    }
    const std::size_t d = block_basis.size();
    if (d == 0) throw InternalError("idempotent generates a zero block");

    // Structure constants in the block basis.
    std::vector<StructureEntry> table;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto prod = ss.multiply_coords(block_basis[i], block_basis[j]);
        const auto coords = coordinates_in_span(block_basis, prod);
        if (!coords) {
          throw InternalError("block is not multiplicatively closed");
        }
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero((*coords)[k])) table.push_back({i, j, k, (*coords)[k]});
        }
      }
    }
    const auto unit_coords = coordinates_in_span(block_basis, e.coords());
    if (!unit_coords) {
      throw InternalError("idempotent lies outside its own block");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
      labels.push_back("b" + std::to_string(i + 1));
    }
    Algebra block(ss.name() + "_block" + std::to_string(out.size() + 1),
                  std::move(labels), *unit_coords, std::move(table));
    require_valid(block);

    QMatrix inclusion(m, d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < m; ++i) inclusion.at(i, j) = block_basis[j][i];
    }
    QMatrix extraction(d, m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = ss.multiply_coords(basis_coords(m, j), e.coords());
      const auto coords = coordinates_in_span(block_basis, v);
      if (!coords) {
        throw InternalError("multiplication by the idempotent escapes the "
                            "block");
      }
      for (std::size_t i = 0; i < d; ++i) extraction.at(i, j) = (*coords)[i];
    }
    total += d;
    out.push_back({std::move(block), e, std::move(inclusion),
                   std::move(extraction)});
  }
  if (total != m) {
    throw InternalError("block dimensions do not sum to the dimension");
  }
  return out;
}

namespace {

struct FactorPackage {
  SimpleFactor factor;
  IrreducibleNorm norm;
  Element lifted_idempotent;  // preimage of the block identity in R
  bool multiplicative = false;
};

// Shared pipeline for irreducible_multiplicative_maps and decompose.
std::vector<FactorPackage> factor_packages(const Algebra& a,
                                           const QuotientResult& qt,
                                           std::uint64_t seed) {
  const std::size_t m = a.dim();
  const std::vector<Element> idems = central_idempotents(qt.quotient, seed);
  std::vector<SimpleFactor> factors = simple_factors(qt.quotient, idems);

  std::vector<FactorPackage> packages;
  for (SimpleFactor& f : factors) {
    const NormReport block_report = minimal_norm(f.block, VerifyMode::kAuto,
                                                 seed);
    // Pull back along R -> R/J -> block coordinates.
    const QMatrix composite = f.extraction * qt.projection;  // d x m
    std::vector<MultiPoly> forms;
    for (std::size_t i = 0; i < f.block.dim(); ++i) {
      MultiPoly form(m);
      for (std::size_t j = 0; j < m; ++j) {
        if (!is_zero(composite.at(i, j))) {
          form += MultiPoly::variable(m, j) * composite.at(i, j);
        }
      }
      forms.push_back(std::move(form));
    }
    IrreducibleNorm norm{block_report.minimal_norm.substitute(forms),
                         block_report.degree};
    Element lifted(a, qt.section.apply(f.idempotent.coords()));
    packages.push_back({std::move(f), std::move(norm), std::move(lifted)});
  }

  std::sort(packages.begin(), packages.end(),
            [](const FactorPackage& x, const FactorPackage& y) {
              if (x.factor.block.dim() != y.factor.block.dim()) {
                return x.factor.block.dim() < y.factor.block.dim();
              }
              return x.norm.norm.to_string() < y.norm.norm.to_string();
            });

  for (FactorPackage& p : packages) {
    p.multiplicative =
        verify_multiplicative(p.norm.norm, a, VerifyMode::kAuto, seed)
            .multiplicative;
  }
  return packages;
}

}  // namespace

std::vector<IrreducibleNorm> irreducible_multiplicative_maps(
    const Algebra& a, std::uint64_t seed) {
  require_valid(a);
  const RadicalBasis rad = radical(a);
  const QuotientResult qt = quotient_algebra(a, rad);
  std::vector<IrreducibleNorm> out;
  for (auto& p : factor_packages(a, qt, seed)) {
    if (!p.multiplicative) {
      throw InternalError("pulled-back block norm failed the "
                          "multiplicativity check");
    }
    out.push_back(std::move(p.norm));
  }
  return out;
}

namespace {

bool radical_invariance_impl(const Algebra& a, const MultiPoly& norm,
                             const RadicalBasis& rad) {
  const std::size_t m = a.dim();
  const MultiPoly wide = norm.with_num_vars(m + 1);
  for (const auto& j : rad.vectors) {
    // x_i -> x_i + lambda * j_i with lambda the extra variable.
    std::vector<MultiPoly> forms;
    for (std::size_t i = 0; i < m; ++i) {
      MultiPoly form = MultiPoly::variable(m + 1, i);
      if (!is_zero(j[i])) {
        form += MultiPoly::variable(m + 1, m) * j[i];
      }
      forms.push_back(std::move(form));
    }
    if (norm.substitute(forms) != wide) return false;
  }
  return true;
}

MultiPoly minimal_norm_only(const Algebra& a) {
  const MinimalPolynomial p = generic_min_poly(a);
  const MultiPoly constant = p.poly.coefficient(0);
  return p.degree() % 2 == 0 ? constant : -constant;
}

}  // namespace

bool radical_invariance_check(const Algebra& a) {
  require_valid(a);
  return radical_invariance_impl(a, minimal_norm_only(a), radical(a));
}

std::size_t max_element_nilpotency(const Algebra& a, const RadicalBasis& rad) {
  if (rad.vectors.empty()) return 0;
  const std::size_t m = a.dim();
  const std::size_t r = rad.dim();
  // Generic radical element xi = sum lambda_v j_v; its nilpotency degree is
  // the maximum over all elements of J (infinite field).
  std::vector<MultiPoly> xi(m, MultiPoly(r));
  for (std::size_t v = 0; v < r; ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_zero(rad.vectors[v][i])) {
        xi[i] += MultiPoly::variable(r, v) * rad.vectors[v][i];
      }
    }
  }
  std::vector<MultiPoly> power = xi;
  std::size_t d = 1;
  auto all_zero = [](const std::vector<MultiPoly>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
  };
  while (!all_zero(power)) {
    if (d > rad.nilpotency_index) {
      throw InternalError("generic radical element is not nilpotent");
    }
    power = a.multiply_coords(power, xi);
    ++d;
  }
  return d;
}

DecompositionReport decompose(const Algebra& a, std::uint64_t seed) {
  require_valid(a);
  const NormReport norm_report = minimal_norm(a, VerifyMode::kAuto, seed);
  const RadicalBasis rad = radical(a);
  QuotientResult qt = quotient_algebra(a, rad);
  std::vector<FactorPackage> packages = factor_packages(a, qt, seed);

  DecompositionReport report(qt.quotient);
  report.algebra_name = a.name();
  report.dim = a.dim();
  report.radical = rad;
  report.projection = qt.projection;
  report.minimal_norm = norm_report.minimal_norm;
  report.norm_degree = norm_report.degree;
  report.seed = seed;
  report.idempotents_verified = true;  // central_idempotents throws otherwise

  report.norms_multiplicative = true;
  for (const FactorPackage& p : packages) {
    report.idempotents.push_back(p.factor.idempotent);
    report.factors.push_back(p.factor.block);
    report.irreducible_norms.push_back(p.norm);
    if (!p.multiplicative) report.norms_multiplicative = false;
  }

  // Exponents: evaluate N0 on lambda u_i + sum_{j != i} u_j; the value must
  // be a pure monic power of lambda with exponent e_i * n_i.
  const std::size_t m = a.dim();
  for (std::size_t i = 0; i < packages.size(); ++i) {
    std::vector<Rational> base(m, Rational(0));
    for (std::size_t j = 0; j < packages.size(); ++j) {
      if (j == i) continue;
      const auto& u = packages[j].lifted_idempotent.coords();
      for (std::size_t l = 0; l < m; ++l) base[l] += u[l];
    }
    std::vector<MultiPoly> forms;
    for (std::size_t l = 0; l < m; ++l) {
      MultiPoly form = MultiPoly::constant(1, base[l]);
      const Rational& ul = packages[i].lifted_idempotent.coords()[l];
      if (!is_zero(ul)) form += MultiPoly::variable(1, 0) * ul;
      forms.push_back(std::move(form));
    }
    const MultiPoly value = report.minimal_norm.substitute(forms);
    if (value.term_count() != 1) {
      throw InternalError("norm of the lambda-weighted idempotent sum is not "
                          "a pure power");
    }
    const auto& [mono, coeff] = value.leading_term();
    if (coeff != 1) {
      throw InternalError("norm of the lambda-weighted idempotent sum is not "
                          "monic");
    }
    const std::size_t total = mono[0];
    const std::size_t n_i = packages[i].norm.degree;
    if (n_i == 0 || total % n_i != 0 || total == 0) {
      throw InternalError("exponent is not a positive multiple of the block "
                          "norm degree");
    }
    report.exponents.push_back(total / n_i);
  }

  // N0 = prod N_i^{e_i}, exactly; and the degrees balance.
  MultiPoly product = MultiPoly::one(m);
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < packages.size(); ++i) {
    product = product * report.irreducible_norms[i].norm.pow(report.exponents[i]);
    degree_sum += report.exponents[i] * report.irreducible_norms[i].degree;
  }
  report.norm_product_identity = product == report.minimal_norm;
  report.degree_sum_identity = degree_sum == report.norm_degree;
  report.radical_invariance =
      radical_invariance_impl(a, report.minimal_norm, rad);

  // When R/J = Q, record whether the exponent matches the maximal element
  // nilpotency of the radical (observed, never assumed).
  if (qt.quotient.dim() == 1 && !rad.vectors.empty()) {
    report.nilpotency_observation.applicable = true;
    report.nilpotency_observation.exponent = report.exponents[0];
    report.nilpotency_observation.max_element_nilpotency =
        max_element_nilpotency(a, rad);
    report.nilpotency_observation.matches =
        report.nilpotency_observation.exponent ==
        report.nilpotency_observation.max_element_nilpotency;
  }
  return report;
}

}  // namespace chnorm
