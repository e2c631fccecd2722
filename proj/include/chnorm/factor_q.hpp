#ifndef CHNORM_FACTOR_Q_HPP
#define CHNORM_FACTOR_Q_HPP

#include <cstddef>
#include <vector>

#include "chnorm/rat_unipoly.hpp"

namespace chnorm {

struct FactorPower {
  RatUniPoly factor;  // monic
  std::size_t multiplicity;
};

struct Factorization {
  // unit * product(factor^multiplicity) reconstructs the input exactly.
  Rational unit;
  std::vector<FactorPower> factors;
};

// Yun's algorithm over Q: factors are monic, squarefree and pairwise
// coprime; gcd(factor, factor') = 1 is checked before returning.
Factorization squarefree_decomposition(const RatUniPoly& u);

// Full factorization into monic irreducibles over Q: squarefree
// decomposition, factorization modulo a good prime (distinct-degree plus
// equal-degree splitting), Hensel lifting to a coefficient bound, and
// subset recombination. The product is always verified by multiplication,
// and the degree pattern of each squarefree part is cross-checked modulo
// three distinct good primes. Output order is deterministic: factors sorted
// by degree, then by canonical string.
Factorization factor_rational(const RatUniPoly& u);

}  // namespace chnorm

#endif  // CHNORM_FACTOR_Q_HPP
