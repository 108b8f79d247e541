#ifndef DUPCALC_SMOKE_HPP_
#define DUPCALC_SMOKE_HPP_

#include <string>
#include <vector>

#include "dupcalc/duplicate.hpp"

namespace dupcalc {

// Spot checks of the equivalence behind a verified duplicator:
// (i)  every homomorphism P(A) -> P(B) is the m-th power of one A -> B;
// (ii) every subuniverse of P(A) is S^m for a subuniverse S of A;
// (iii) Con(P(A)) is exactly { theta^m : theta in Con(A) }.
// Intended for small A and B; each clause lists its failures.
struct SmokeReport {
  bool pass = true;
  int hom_count_base = 0;       // |Hom(A,B)|
  int hom_count_duplicated = 0; // |Hom(P(A),P(B))|
  int subuniverse_count = 0;    // |Sub(P(A))|
  int congruence_count = 0;     // |Con(P(A))|
  std::vector<std::string> failures;
};

SmokeReport equivalence_smoke_test(const Duplicator& g, const FiniteAlgebra& a,
                                   const FiniteAlgebra& b);

}  // namespace dupcalc

#endif  // DUPCALC_SMOKE_HPP_
