#include "chnorm/catalog.hpp"

#include <array>

#include "chnorm/builders.hpp"
#include "chnorm/error.hpp"

namespace chnorm {

namespace {

Algebra rational_field() {
  return Algebra("q", {"1"}, {Rational(1)}, {{0, 0, 0, Rational(1)}});
}

Algebra gaussian_rationals() {
  // Q[y]/(y^2 + 1)
  return Algebra("q-i", {"1", "y"}, {Rational(1), Rational(0)},
                 {{0, 0, 0, Rational(1)},
                  {0, 1, 1, Rational(1)},
                  {1, 0, 1, Rational(1)},
                  {1, 1, 0, Rational(-1)}});
}

Algebra s3_group_algebra() {
  // Permutations of {0,1,2} in one-line notation; composition (p*q)(x) =
  // p(q(x)).
  const std::array<std::array<std::size_t, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  }};
  auto index_of = [&perms](const std::array<std::size_t, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == p) return i;
    }
    throw InternalError("permutation composition left the group");
  };
  std::vector<std::vector<std::size_t>> table(6,
                                              std::vector<std::size_t>(6, 0));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[g][perms[h][x]];
      table[g][h] = index_of(comp);
    }
  }
  return group_algebra(
      "qs3", table, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "q",
      "dual-numbers",
      "m2",
      "m3",
      "quaternion",
      "upper-triangular-2",
      "upper-triangular-3",
      "truncated-poly-2",
      "truncated-poly-3",
      "qs3",
      "q-i",
      "m2-plus-q",
  };
  return names;
}

bool is_catalog_name(std::string_view name) {
  for (const std::string& n : catalog_names()) {
    if (n == name) return true;
  }
  return false;
}

Algebra catalog_algebra(std::string_view name) {
  if (name == "q") return rational_field();
  if (name == "dual-numbers") return dual_numbers();
  if (name == "m2") return matrix_algebra(2);
  if (name == "m3") return matrix_algebra(3);
  if (name == "quaternion") {
    return quaternion_algebra(Rational(-1), Rational(-1));
  }
  if (name == "upper-triangular-2") return upper_triangular(2);
  if (name == "upper-triangular-3") return upper_triangular(3);
  if (name == "truncated-poly-2") return truncated_poly(2);
  if (name == "truncated-poly-3") return truncated_poly(3);
  if (name == "qs3") return s3_group_algebra();
  if (name == "q-i") return gaussian_rationals();
  if (name == "m2-plus-q") return direct_sum(matrix_algebra(2), rational_field());
  throw DomainError("unknown catalog name: '" + std::string(name) + "'");
}

}  // namespace chnorm
