#ifndef CHNORM_CH_NORM_HPP
#define CHNORM_CH_NORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chnorm/algebra.hpp"
#include "chnorm/multipoly.hpp"
#include "chnorm/poly_matrix.hpp"
#include "chnorm/rat_unipoly.hpp"
#include "chnorm/unipoly.hpp"

namespace chnorm {

inline constexpr std::uint64_t kDefaultSeed = 123456789;

// Exact multiplicativity is checked symbolically when the doubled identity
// stays at or below this many variables; beyond it the randomized check is
// used.
inline constexpr std::size_t kExactMultiplicativityVarLimit = 12;

// Coordinates of x^0, x^1, ..., x^m for the generic element x, one power
// per row. Row 0 holds the unit coordinates.
PolyMatrix generic_powers(const Algebra& a);

// Monic minimal polynomial P(t) of the generic element. Coefficients are
// genuine polynomials (never rational functions); P(x) = 0 is verified
// exactly before returning.
struct MinimalPolynomial {
  UniPoly poly;
  std::string algebra_name;

  std::size_t degree() const { return poly.degree(); }
};

MinimalPolynomial generic_min_poly(const Algebra& a);

// Degree of the algebra: deg P.
std::size_t algebra_degree(const Algebra& a);

enum class VerifyMode { kExact, kRandomized, kAuto };

struct MultiplicativityVerdict {
  bool multiplicative = false;
  VerifyMode mode_used = VerifyMode::kExact;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;  // randomized mode only
  std::string note;
  // Counterexample coordinates when not multiplicative.
  std::vector<Rational> witness_a;
  std::vector<Rational> witness_b;
};

// Checks p(xy) = p(x) p(y). Exact mode proves the 2m-variable identity;
// randomized mode samples integer points (50 trials, box [-10, 10]) and
// reports a Schwartz-Zippel confidence note.
MultiplicativityVerdict verify_multiplicative(
    const MultiPoly& p, const Algebra& a, VerifyMode mode = VerifyMode::kAuto,
    std::uint64_t seed = kDefaultSeed);

// Checks that the generic element satisfies its minimal polynomial,
// coefficient row against power row, exactly.
bool verify_ch(const Algebra& a);

struct NormReport {
  std::string algebra_name;
  std::size_t dim = 0;
  MinimalPolynomial min_poly;   // P
  MultiPoly minimal_norm;       // N0 = (-1)^k P(0)
  std::size_t degree = 0;       // k
  MultiPoly regular_norm;       // det X
  UniPoly regular_char_poly;    // Q(t) = det(tI - X)
  UniPoly cofactor;             // Q / P, exact
  bool ch_verified = false;
  bool norm_of_unit_is_one = false;
  bool homogeneous_of_degree_k = false;
  MultiplicativityVerdict multiplicativity;

  bool all_checks_passed() const {
    return ch_verified && norm_of_unit_is_one && homogeneous_of_degree_k &&
           multiplicativity.multiplicative;
  }
};

// The minimal Cayley-Hamilton norm with its verification evidence. The
// divisibility facts (P | Q, N0 | det X) are established exactly during
// assembly; a failure there is an InternalError, not a report flag.
NormReport minimal_norm(const Algebra& a, VerifyMode mode = VerifyMode::kAuto,
                        std::uint64_t seed = kDefaultSeed);

// chi_a(t) = N0(t - a): the degree-k characteristic polynomial of a,
// obtained from P by specializing x_i to the coordinates of a. Substituting
// a back in yields zero, and that is checked exactly.
RatUniPoly char_poly_of(const Element& a);

// Minimal d with 1, a, ..., a^d linearly dependent over Q; always <= the
// algebra degree.
std::size_t element_degree(const Element& a);

struct DegreeCertificate {
  std::vector<std::size_t> columns;  // 0-based columns of the witness minor
  MultiPoly minor;                   // nonzero k x k minor
  // All nonzero k x k minors; their common vanishing is the locus where the
  // element degree drops below k. Empty when some minor is a nonzero
  // constant (the locus is empty).
  std::vector<MultiPoly> locus;
};

// Certifies that the generic degree k is attained: searches the k x m
// power matrix for a nonsingular k x k minor. Column sets are enumerated
// lexicographically; a seeded random-evaluation shortlist runs first and
// every candidate is confirmed symbolically.
DegreeCertificate degree_certificate(const Algebra& a,
                                     std::uint64_t seed = kDefaultSeed);

// Pulls the parent's minimal norm back along an inclusion of algebras
// (columns of `inclusion` are the parent coordinates of sub's basis). The
// inclusion must be a unital homomorphism; this is checked on basis
// products. When the degrees agree the result is checked, exactly, to be
// the subalgebra's own minimal norm.
MultiPoly restrict_norm(const Algebra& parent, const Algebra& sub,
                        const QMatrix& inclusion);

}  // namespace chnorm

#endif  // CHNORM_CH_NORM_HPP
