#include "chnorm/builders.hpp"

#include <algorithm>

#include "chnorm/error.hpp"

namespace chnorm {

Algebra matrix_algebra(std::size_t n) {
  if (n == 0) throw DomainError("matrix algebra needs n >= 1");
  const std::size_t m = n * n;
  std::vector<std::string> basis;
  basis.reserve(m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      basis.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  }
  std::vector<Rational> unit(m, Rational(0));
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = 1;
  std::vector<StructureEntry> table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        // e_ij * e_jl = e_il
        table.push_back({i * n + j, j * n + l, i * n + l, Rational(1)});
      }
    }
  }
  return Algebra("m" + std::to_string(n), std::move(basis), std::move(unit),
                 std::move(table));
}

Algebra dual_numbers() {
  std::vector<StructureEntry> table = {
      {0, 0, 0, Rational(1)},
      {0, 1, 1, Rational(1)},
      {1, 0, 1, Rational(1)},
      // eps * eps = 0: no entry
  };
  return Algebra("dual-numbers", {"1", "eps"}, {Rational(1), Rational(0)},
                 std::move(table));
}

Algebra quaternion_algebra(const Rational& a, const Rational& b) {
  std::vector<StructureEntry> table;
  auto put = [&table](std::size_t i, std::size_t j, std::size_t k,
                      const Rational& c) {
    if (!is_zero(c)) table.push_back({i, j, k, c});
  };
  const Rational one(1);
  // 1 is the unit.
  for (std::size_t i = 0; i < 4; ++i) {
    put(0, i, i, one);
    if (i != 0) put(i, 0, i, one);
  }
  put(1, 1, 0, a);        // i*i = a
  put(2, 2, 0, b);        // j*j = b
  put(3, 3, 0, -a * b);   // k*k = -ab
  put(1, 2, 3, one);      // i*j = k
  put(2, 1, 3, -one);     // j*i = -k
  put(1, 3, 2, a);        // i*k = a*j
  put(3, 1, 2, -a);       // k*i = -a*j
  put(2, 3, 1, -b);       // j*k = -b*i
  put(3, 2, 1, b);        // k*j = b*i
  return Algebra("quaternion(" + a.get_str() + "," + b.get_str() + ")",
                 {"1", "i", "j", "k"},
                 {Rational(1), Rational(0), Rational(0), Rational(0)},
                 std::move(table));
}

Algebra upper_triangular(std::size_t n) {
  if (n == 0) throw DomainError("upper-triangular algebra needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) cells.emplace_back(r, c);
  }
  auto index_of = [&cells](std::size_t r, std::size_t c) {
    return static_cast<std::size_t>(
        std::find(cells.begin(), cells.end(), std::make_pair(r, c)) -
        cells.begin());
  };
  std::vector<std::string> basis;
  for (const auto& [r, c] : cells) {
    basis.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
  }
  std::vector<Rational> unit(cells.size(), Rational(0));
  for (std::size_t r = 0; r < n; ++r) unit[index_of(r, r)] = 1;
  std::vector<StructureEntry> table;
  for (std::size_t p = 0; p < cells.size(); ++p) {
    for (std::size_t q = 0; q < cells.size(); ++q) {
      if (cells[p].second != cells[q].first) continue;
      table.push_back(
          {p, q, index_of(cells[p].first, cells[q].second), Rational(1)});
    }
  }
  return Algebra("upper-triangular-" + std::to_string(n), std::move(basis),
                 std::move(unit), std::move(table));
}

Algebra truncated_poly(std::size_t n) {
  if (n == 0) throw DomainError("truncated polynomial algebra needs n >= 1");
  const std::size_t m = n + 1;
  std::vector<std::string> basis = {"1"};
  for (std::size_t i = 1; i <= n; ++i) basis.push_back("y" + std::to_string(i));
  std::vector<Rational> unit(m, Rational(0));
  unit[0] = 1;
  std::vector<StructureEntry> table;
  for (std::size_t i = 0; i < m; ++i) {
    table.push_back({0, i, i, Rational(1)});
    if (i != 0) table.push_back({i, 0, i, Rational(1)});
  }
  return Algebra("truncated-poly-" + std::to_string(n), std::move(basis),
                 std::move(unit), std::move(table));
}

Algebra group_algebra(std::string name,
                      const std::vector<std::vector<std::size_t>>& table,
                      std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw DomainError("group table entry out of range");
    }
  }
  // Two-sided identity.
  std::size_t identity = n;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g) {
      if (table[e][g] != g || table[g][e] != g) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == n) throw DomainError("group table has no identity");
  // Associativity.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw DomainError("group table is not associative");
        }
      }
    }
  }
  // Inverses.
  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == identity && table[h][g] == identity) {
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("group table element has no inverse");
  }
  if (labels.empty()) {
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  }
  if (labels.size() != n) throw DomainError("label count mismatch");
  std::vector<Rational> unit(n, Rational(0));
  unit[identity] = 1;
  std::vector<StructureEntry> entries;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      entries.push_back({g, h, table[g][h], Rational(1)});
    }
  }
  return Algebra(std::move(name), std::move(labels), std::move(unit),
                 std::move(entries));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t ma = a.dim();
  const std::size_t mb = b.dim();
  std::vector<std::string> basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  std::vector<Rational> unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<StructureEntry> table = a.table();
  for (const StructureEntry& e : b.table()) {
    table.push_back({e.i + ma, e.j + ma, e.k + ma, e.c});
  }
  (void)mb;
  return Algebra(a.name() + "+" + b.name(), std::move(basis), std::move(unit),
                 std::move(table));
}

SubalgebraResult subalgebra(const Algebra& parent,
                            const std::vector<std::vector<Rational>>& spanning,
                            std::string name) {
  const std::size_t m = parent.dim();
  if (spanning.empty()) throw DomainError("empty spanning set");
  for (const auto& v : spanning) {
    if (v.size() != m) throw DomainError("spanning vector length mismatch");
  }
  // First linearly independent subsequence of the given vectors.
  std::vector<std::vector<Rational>> vectors;
  for (const auto& v : spanning) {
    std::vector<std::vector<Rational>> trial = vectors;
    trial.push_back(v);
    if (rank(QMatrix::from_rows(trial)) == trial.size()) {
      vectors.push_back(v);
    }
  }
  const std::size_t s = vectors.size();

  // Unit must lie in the span.
  const auto unit_coords = coordinates_in_span(vectors, parent.unit());
  if (!unit_coords) {
    throw DomainError("subalgebra span does not contain the unit");
  }

  // Products must close; expressing them in the new basis gives the table.
  std::vector<StructureEntry> table;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const auto prod = parent.multiply_coords(vectors[i], vectors[j]);
      const auto coords = coordinates_in_span(vectors, prod);
      if (!coords) {
        throw DomainError("subalgebra span is not multiplicatively closed "
                          "(product of vectors " +
                          std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " escapes the span)");
      }
      for (std::size_t k = 0; k < s; ++k) {
        if (!is_zero((*coords)[k])) table.push_back({i, j, k, (*coords)[k]});
      }
    }
  }
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < s; ++i) basis.push_back("b" + std::to_string(i + 1));
  Algebra sub(std::move(name), std::move(basis), *unit_coords,
              std::move(table));
  QMatrix inclusion(m, s);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < m; ++i) inclusion.at(i, j) = vectors[j][i];
  }
  return {std::move(sub), std::move(inclusion)};
}

}  // namespace chnorm
