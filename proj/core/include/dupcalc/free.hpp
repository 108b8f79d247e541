#ifndef DUPCALC_FREE_HPP_
#define DUPCALC_FREE_HPP_

#include <vector>

#include "dupcalc/algebra.hpp"
#include "dupcalc/config.hpp"
#include "dupcalc/hom.hpp"

namespace dupcalc {

// Free algebra on k generators relative to a finite class of algebras,
// realized inside the product over all assignments of the generators
// into each class member.
struct FreeAlgebraResult {
  FiniteAlgebra algebra;
  std::vector<Element> generators;
  // Coordinate vector of each element over the assignment product,
  // retained for diagnostics.  Coordinates run over class members in
  // order, then assignments in row-major order.
  std::vector<std::vector<Element>> embedding;
};

FreeAlgebraResult free_algebra(const std::vector<FiniteAlgebra>& members,
                               int k, const Limits& limits = {});

// Whether homomorphisms into the class members separate the elements
// of `alg`.  On success `witness[p]` records, for the p-th pair (a,b)
// in lexicographic order, a separating member index and homomorphism;
// on failure the first inseparable pair is reported.
struct SeparationResult {
  bool separates = false;
  Element fail_a = -1, fail_b = -1;
  std::vector<std::pair<int, Homomorphism>> witness;
};

SeparationResult separates_into(const FiniteAlgebra& alg,
                                const std::vector<FiniteAlgebra>& members,
                                long long hom_cap = 1'000'000);

}  // namespace dupcalc

#endif  // DUPCALC_FREE_HPP_
