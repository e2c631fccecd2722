#ifndef CHNORM_STRUCTURE_HPP
#define CHNORM_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chnorm/algebra.hpp"
#include "chnorm/ch_norm.hpp"
#include "chnorm/multipoly.hpp"
#include "chnorm/qlinalg.hpp"

namespace chnorm {

struct RadicalBasis {
  // Basis vectors of the Jacobson radical J in parent coordinates (reduced
  // row echelon rows; empty when semisimple).
  std::vector<std::vector<Rational>> vectors;
  // Smallest s with J^s = 0; equal to 1 when J = 0.
  std::size_t nilpotency_index = 1;

  std::size_t dim() const { return vectors.size(); }
};

// J as the kernel of the trace form T(a, b) = trace(L_ab) of the regular
// representation (valid over Q, characteristic zero). The ideal property
// and nilpotency are verified exactly before returning.
RadicalBasis radical(const Algebra& a);

struct QuotientResult {
  Algebra quotient;   // R/J on a complement basis
  QMatrix projection; // dim(quotient) x dim(parent)
  QMatrix section;    // dim(parent) x dim(quotient); projection * section = 1
};

// Semisimple quotient R/J: picks the standard-basis complement of the
// radical's pivot coordinates, induces structure constants by exact solves,
// and checks that the projection is an algebra map and that the quotient's
// own radical vanishes.
QuotientResult quotient_algebra(const Algebra& a, const RadicalBasis& rad);

// Basis of {z : z a_i = a_i z for all i}, via one exact kernel computation.
std::vector<Element> center(const Algebra& a);

// Primitive central idempotents of a semisimple algebra: a separating
// central element z (minimal polynomial of degree dim center) is located by
// a deterministic-then-seeded search, its minimal polynomial is factored
// into irreducibles, and e_i = g_i(z) interpolates 1 at the i-th factor and
// 0 elsewhere via extended Euclid. All idempotent axioms are verified
// exactly.
std::vector<Element> central_idempotents(const Algebra& semisimple,
                                         std::uint64_t seed = kDefaultSeed);

struct SimpleFactor {
  Algebra block;
  Element idempotent;  // in the ambient semisimple algebra
  QMatrix inclusion;   // dim(ambient) x dim(block)
  QMatrix extraction;  // dim(block) x dim(ambient): y -> coords of y * e
};

// Blocks S_i = ss * e_i with bases from the image of multiplication by e_i.
// Block dimensions sum to dim(ss); every block validates with unit e_i.
std::vector<SimpleFactor> simple_factors(const Algebra& ss,
                                         const std::vector<Element>& idempotents);

struct IrreducibleNorm {
  MultiPoly norm;      // in the parent algebra's variables
  std::size_t degree;  // homogeneity degree n_i
};

// The irreducible multiplicative polynomial maps of the algebra: the
// minimal norms of the simple factors of R/J, pulled back to R. Factor
// order is deterministic: by block dimension, then by the canonical string
// of the pulled-back norm.
std::vector<IrreducibleNorm> irreducible_multiplicative_maps(
    const Algebra& a, std::uint64_t seed = kDefaultSeed);

struct NilpotencyObservation {
  bool applicable = false;  // true iff R/J = Q
  std::size_t exponent = 0;
  std::size_t max_element_nilpotency = 0;
  bool matches = false;
};

struct DecompositionReport {
  std::string algebra_name;
  std::size_t dim = 0;
  RadicalBasis radical;
  Algebra quotient;
  QMatrix projection;
  std::vector<Element> idempotents;     // elements of the quotient
  std::vector<Algebra> factors;         // simple blocks, sorted
  std::vector<IrreducibleNorm> irreducible_norms;
  std::vector<std::size_t> exponents;   // e_i >= 1
  MultiPoly minimal_norm;               // N0 of the parent
  std::size_t norm_degree = 0;
  bool idempotents_verified = false;
  bool norms_multiplicative = false;
  bool norm_product_identity = false;   // N0 = prod N_i^{e_i}, exact
  bool degree_sum_identity = false;     // sum e_i n_i = deg N0
  bool radical_invariance = false;      // N0(x + lambda j) = N0(x), exact
  NilpotencyObservation nilpotency_observation;
  std::uint64_t seed = kDefaultSeed;

  bool all_checks_passed() const {
    return idempotents_verified && norms_multiplicative &&
           norm_product_identity && degree_sum_identity && radical_invariance;
  }

  explicit DecompositionReport(Algebra q) : quotient(std::move(q)) {}
};

// Full decomposition pipeline: radical, quotient, idempotents, blocks,
// irreducible norms, and the exponents e_i with N0 = prod N_i^{e_i}
// verified exactly. Each exponent is read off the evaluation of N0 on
// lambda * u_i + sum_{j != i} u_j, which must be a pure power of lambda.
DecompositionReport decompose(const Algebra& a,
                              std::uint64_t seed = kDefaultSeed);

// Exact check that N0 is unchanged by shifts along every radical basis
// vector: N0(x + lambda j) = N0(x) as a polynomial identity.
bool radical_invariance_check(const Algebra& a);

// Largest d such that some element of J has j^(d-1) != 0 = j^d, computed on
// the generic element of J; 0 when the radical is trivial.
std::size_t max_element_nilpotency(const Algebra& a, const RadicalBasis& rad);

}  // namespace chnorm

#endif  // CHNORM_STRUCTURE_HPP
