#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "chnorm/error.hpp"
#include "chnorm/multipoly.hpp"
#include "chnorm/poly_matrix.hpp"
#include "chnorm/qlinalg.hpp"
#include "chnorm/rat_unipoly.hpp"
#include "chnorm/rational.hpp"
#include "chnorm/unipoly.hpp"
#include "oracles.hpp"

using namespace chnorm;
using chnorm::testing::Rng;

namespace {

MultiPoly var(std::size_t nv, std::size_t i) {
  return MultiPoly::variable(nv, i);
}

MultiPoly cst(std::size_t nv, long v) {
  return MultiPoly::constant(nv, Rational(v));
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(rational_from_string("3/6")) == "1/2");
  CHECK(to_string(rational_from_string("-4/2")) == "-2");
  CHECK(to_string(rational_from_string("0")) == "0");
  CHECK(to_string(rational_from_string("+7")) == "7");
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rational_from_string(""), ParseError);
  CHECK_THROWS_AS(rational_from_string("2/-3"), ParseError);
}

TEST_CASE("multipoly arithmetic basics") {
  const std::size_t nv = 2;
  const MultiPoly x1 = var(nv, 0);
  const MultiPoly x2 = var(nv, 1);

  // (x1 + 1)(x1 - 1) = x1^2 - 1
  CHECK((x1 + cst(nv, 1)) * (x1 - cst(nv, 1)) == x1 * x1 - cst(nv, 1));

  // p * 0 = 0
  const MultiPoly p = x1 * x2 + cst(nv, 3) * x1;
  CHECK((p * MultiPoly(nv)).is_zero());

  // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
  CHECK((x1 + x2).pow(2) ==
        x1 * x1 + Rational(2) * (x1 * x2) + x2 * x2);

  CHECK_THROWS_AS(var(2, 0) + var(3, 0), DomainError);
}

TEST_CASE("canonical rendering") {
  const std::size_t nv = 4;
  const MultiPoly det =
      var(nv, 0) * var(nv, 3) - var(nv, 1) * var(nv, 2);
  CHECK(det.to_string() == "x1*x4 - x2*x3");
  CHECK((var(nv, 0) * var(nv, 0)).to_string() == "x1^2");
  CHECK(MultiPoly(nv).to_string() == "0");
  CHECK((-var(nv, 0) + cst(nv, 1)).to_string() == "-x1 + 1");
  const MultiPoly half = MultiPoly::constant(nv, Rational(1, 2));
  CHECK((half * var(nv, 1)).to_string() == "1/2*x2");
}

TEST_CASE("exact division") {
  const std::size_t nv = 4;
  const MultiPoly x1 = var(nv, 0), x2 = var(nv, 1), x3 = var(nv, 2),
                  x4 = var(nv, 3);

  // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
  auto q = (x1 * x1 - x2 * x2).divided_exactly(x1 - x2);
  REQUIRE(q.has_value());
  CHECK(*q == x1 + x2);

  // x1 / x2 fails
  CHECK(!x1.divided_exactly(x2).has_value());

  // (x1 x4 - x2 x3)^2 / (x1 x4 - x2 x3)
  const MultiPoly det = x1 * x4 - x2 * x3;
  auto q2 = det.pow(2).divided_exactly(det);
  REQUIRE(q2.has_value());
  CHECK(*q2 == det);

  CHECK_THROWS_AS(x1.divided_exactly(MultiPoly(nv)), DomainError);
}

TEST_CASE("evaluation") {
  {
    const MultiPoly p = var(1, 0) * var(1, 0);
    const std::vector<Rational> pt = {Rational(3)};
    CHECK(p.evaluate(pt) == Rational(9));
  }
  {
    const std::size_t nv = 4;
    const MultiPoly det = var(nv, 0) * var(nv, 3) - var(nv, 1) * var(nv, 2);
    const std::vector<Rational> identity = {Rational(1), Rational(0),
                                            Rational(0), Rational(1)};
    CHECK(det.evaluate(identity) == Rational(1));
  }
  {
    // Quaternion norm of 1+i+j+k, checked against the q * conj(q) oracle.
    using chnorm::testing::Quat;
    const Quat q = {Rational(1), Rational(1), Rational(1), Rational(1)};
    const Quat n = chnorm::testing::quat_mul(q, chnorm::testing::quat_conj(q));
    CHECK(n[0] == Rational(4));
    CHECK(is_zero(n[1]));
    CHECK(is_zero(n[2]));
    CHECK(is_zero(n[3]));

    const std::size_t nv = 4;
    MultiPoly norm(nv);
    for (std::size_t i = 0; i < 4; ++i) norm += var(nv, i) * var(nv, i);
    const std::vector<Rational> pt(4, Rational(1));
    CHECK(norm.evaluate(pt) == n[0]);
  }
  CHECK_THROWS_AS(var(2, 0).evaluate(std::vector<Rational>{Rational(1)}),
                  DomainError);
}

TEST_CASE("substitution") {
  {
    // x1^2 with x1 -> x1 + lambda (lambda rendered as x2)
    const MultiPoly p = var(1, 0) * var(1, 0);
    const std::vector<MultiPoly> forms = {var(2, 0) + var(2, 1)};
    const MultiPoly expected = var(2, 0) * var(2, 0) +
                               Rational(2) * (var(2, 0) * var(2, 1)) +
                               var(2, 1) * var(2, 1);
    CHECK(p.substitute(forms) == expected);
  }
  {
    // Identity forms leave the polynomial unchanged.
    const std::size_t nv = 3;
    Rng rng(7);
    const MultiPoly p = rng.poly(nv, 6, 3);
    std::vector<MultiPoly> forms;
    for (std::size_t i = 0; i < nv; ++i) forms.push_back(var(nv, i));
    CHECK(p.substitute(forms) == p);
  }
  {
    // The upper-triangular norm x1*x3 does not involve x2: setting x2 to 0
    // is the restriction to the diagonal subalgebra and changes nothing.
    const std::size_t nv = 3;
    const MultiPoly p = var(nv, 0) * var(nv, 2);
    const std::vector<MultiPoly> forms = {var(nv, 0), MultiPoly(nv),
                                          var(nv, 2)};
    CHECK(p.substitute(forms) == p);
  }
  CHECK_THROWS_AS(var(2, 0).substitute(std::vector<MultiPoly>{var(2, 0)}),
                  DomainError);
}

TEST_CASE("homogeneity") {
  const std::size_t nv = 4;
  const MultiPoly det = var(nv, 0) * var(nv, 3) - var(nv, 1) * var(nv, 2);
  auto h = det.homogeneity();
  CHECK(h.homogeneous);
  CHECK(h.degree == 2);
  CHECK(!h.zero);

  auto h2 = (var(nv, 0) + cst(nv, 1)).homogeneity();
  CHECK(!h2.homogeneous);

  auto h3 = MultiPoly(nv).homogeneity();
  CHECK(h3.homogeneous);
  CHECK(h3.degree == 0);
  CHECK(h3.zero);
}

TEST_CASE("minimal dependence examples") {
  {
    // Identity rows are independent.
    PolyMatrix rows = PolyMatrix::identity(3, 0);
    CHECK(!minimal_dependence(rows).has_value());
  }
  {
    // rows (1,0), (x1,0): dependence (-x1, 1) up to scale.
    PolyMatrix rows(2, 2, 1);
    rows.at(0, 0) = MultiPoly::one(1);
    rows.at(1, 0) = var(1, 0);
    auto dep = minimal_dependence(rows);
    REQUIRE(dep.has_value());
    CHECK(dep->index == 1);
    REQUIRE(dep->coefficients.size() == 2);
    // Scale-invariant check: c0 * 1 + c1 * x1 = 0 and c1 != 0.
    CHECK(!dep->coefficients[1].is_zero());
    CHECK(dep->coefficients[0] + dep->coefficients[1] * var(1, 0) ==
          MultiPoly(1));
  }
  {
    // Dual-numbers power rows: recover t^2 - 2 x1 t + x1^2 after
    // normalization.
    PolyMatrix rows(3, 2, 2);
    rows.at(0, 0) = MultiPoly::one(2);
    rows.at(1, 0) = var(2, 0);
    rows.at(1, 1) = var(2, 1);
    rows.at(2, 0) = var(2, 0) * var(2, 0);
    rows.at(2, 1) = Rational(2) * (var(2, 0) * var(2, 1));
    auto dep = minimal_dependence(rows);
    REQUIRE(dep.has_value());
    CHECK(dep->index == 2);
    const MultiPoly& ck = dep->coefficients[2];
    REQUIRE(!ck.is_zero());
    auto c0 = dep->coefficients[0].divided_exactly(ck);
    auto c1 = dep->coefficients[1].divided_exactly(ck);
    REQUIRE(c0.has_value());
    REQUIRE(c1.has_value());
    CHECK(*c0 == var(2, 0) * var(2, 0));
    CHECK(*c1 == Rational(-2) * var(2, 0));
  }
}

TEST_CASE("minimal dependence annihilates rows exactly") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t nv = 2;
    const std::size_t cols = 3;
    // Build rows with a planted dependence: row2 = f*row0 + g*row1.
    PolyMatrix rows(3, cols, nv);
    for (std::size_t c = 0; c < cols; ++c) {
      rows.at(0, c) = rng.poly(nv, 3, 2);
      rows.at(1, c) = rng.poly(nv, 3, 2);
    }
    const MultiPoly f = rng.poly(nv, 2, 1);
    const MultiPoly g = rng.poly(nv, 2, 1);
    for (std::size_t c = 0; c < cols; ++c) {
      rows.at(2, c) = f * rows.at(0, c) + g * rows.at(1, c);
    }
    auto dep = minimal_dependence(rows);
    REQUIRE(dep.has_value());
    // Coefficients annihilate the rows symbolically.
    for (std::size_t c = 0; c < cols; ++c) {
      MultiPoly sum(nv);
      for (std::size_t r = 0; r <= dep->index; ++r) {
        sum += dep->coefficients[r] * rows.at(r, c);
      }
      CHECK(sum.is_zero());
    }
    CHECK(!dep->coefficients[dep->index].is_zero());
  }
}

TEST_CASE("characteristic polynomial examples") {
  {
    PolyMatrix m(1, 1, 1);
    m.at(0, 0) = var(1, 0);
    const UniPoly p = char_poly(m);
    CHECK(p.degree() == 1);
    CHECK(p.to_string() == "t - x1");
  }
  {
    // Generic 2x2 matrix.
    const std::size_t nv = 4;
    PolyMatrix m(2, 2, nv);
    m.at(0, 0) = var(nv, 0);
    m.at(0, 1) = var(nv, 1);
    m.at(1, 0) = var(nv, 2);
    m.at(1, 1) = var(nv, 3);
    const UniPoly p = char_poly(m);
    REQUIRE(p.degree() == 2);
    CHECK(p.coefficient(2) == MultiPoly::one(nv));
    CHECK(p.coefficient(1) == -(var(nv, 0) + var(nv, 3)));
    // Constant term equals the Leibniz determinant.
    CHECK(p.coefficient(0) == chnorm::testing::leibniz_determinant(m));
  }
  {
    PolyMatrix z(2, 2, 0);
    const UniPoly p = char_poly(z);
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "t^2");
  }
  CHECK_THROWS_AS(char_poly(PolyMatrix(2, 3, 0)), DomainError);
}

TEST_CASE("char_poly constant term matches Leibniz determinant") {
  Rng rng(13);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t nv = 2;
      PolyMatrix m(n, n, nv);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.poly(nv, 2, 1);
      }
      const UniPoly p = char_poly(m);
      const MultiPoly det = chnorm::testing::leibniz_determinant(m);
      // det(tI - M) at t=0 is (-1)^n det(M).
      const MultiPoly expected = n % 2 == 0 ? det : -det;
      CHECK(p.coefficient(0) == expected);
      CHECK(determinant(m) == det);
    }
  }
}

TEST_CASE("ring laws on random triples") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t nv = 3;
    const MultiPoly a = rng.poly(nv, 4, 2);
    const MultiPoly b = rng.poly(nv, 4, 2);
    const MultiPoly c = rng.poly(nv, 4, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact_div inverts multiplication") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t nv = 3;
    const MultiPoly p = rng.poly(nv, 4, 2);
    const MultiPoly d = rng.nonzero_poly(nv, 3, 2);
    auto q = (p * d).divided_exactly(d);
    REQUIRE(q.has_value());
    CHECK(*q == p);
  }
}

TEST_CASE("unipoly over the multivariate ring") {
  const std::size_t nv = 2;
  const MultiPoly x1 = var(nv, 0);
  // P = t^2 - 2 x1 t + x1^2
  const UniPoly p(nv, {x1 * x1, Rational(-2) * x1, MultiPoly::one(nv)});
  CHECK(p.is_monic());
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "t^2 - 2*x1*t + x1^2");

  // P = (t - x1)^2: divide exactly by (t - x1).
  const UniPoly lin(nv, {-x1, MultiPoly::one(nv)});
  auto q = p.divided_exactly(lin);
  REQUIRE(q.has_value());
  CHECK(*q == lin);
  CHECK(p.divided_exactly(UniPoly(nv, {x1, MultiPoly::one(nv)})) ==
        std::nullopt);

  // Specialization at x1 = 3, x2 = 5: (t-3)^2.
  const std::vector<Rational> pt = {Rational(3), Rational(5)};
  const RatUniPoly s = p.specialize(pt);
  CHECK(s.to_string() == "t^2 - 6*t + 9");

  // Multi-term coefficients are parenthesized.
  const UniPoly g(nv, {x1 * var(nv, 1), -(x1 + var(nv, 1)),
                       MultiPoly::one(nv)});
  CHECK(g.to_string() == "t^2 - (x1 + x2)*t + x1*x2");
}

TEST_CASE("rational univariate helpers") {
  // (t-1)(t+2) = t^2 + t - 2
  const RatUniPoly a({Rational(-2), Rational(1), Rational(1)});
  const RatUniPoly b({Rational(-1), Rational(1)});  // t - 1
  auto dm = a.divmod(b);
  CHECK(dm.second.is_zero());
  CHECK(dm.first.to_string() == "t + 2");
  CHECK(poly_gcd(a, b) == b.monic());

  auto eg = poly_extended_gcd(b, RatUniPoly({Rational(2), Rational(1)}));
  CHECK(eg.g.is_one());
  // s*(t-1) + t*(t+2) = 1
  const RatUniPoly lhs = eg.s * b + eg.t * RatUniPoly({Rational(2), Rational(1)});
  CHECK(lhs.is_one());

  CHECK(a.derivative().to_string() == "2*t + 1");
  CHECK(a.evaluate(Rational(2)) == Rational(4));
}

TEST_CASE("rational linear algebra") {
  QMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  m.at(2, 0) = 1;
  m.at(2, 1) = 0;
  m.at(2, 2) = 1;
  CHECK(rank(m) == 2);
  auto kernel = kernel_basis(m);
  REQUIRE(kernel.size() == 1);
  // Kernel vectors satisfy M v = 0.
  const auto image = m.apply(kernel[0]);
  CHECK(is_zero_vector(image));

  const std::vector<Rational> b = {Rational(6), Rational(12), Rational(2)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  QMatrix inv_input = QMatrix::identity(2);
  inv_input.at(0, 1) = 5;
  auto inv = inverse(inv_input);
  REQUIRE(inv.has_value());
  CHECK((*inv * inv_input) == QMatrix::identity(2));
  CHECK(!inverse(QMatrix(2, 2)).has_value());
}
