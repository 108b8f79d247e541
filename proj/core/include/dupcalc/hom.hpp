#ifndef DUPCALC_HOM_HPP_
#define DUPCALC_HOM_HPP_

#include <optional>
#include <vector>

#include "dupcalc/algebra.hpp"
#include "dupcalc/config.hpp"

namespace dupcalc {

// A map between algebras of the same signature, as an image vector.
struct Homomorphism {
  std::vector<Element> image;  // image[a] in the codomain
  Element operator()(Element a) const { return image[a]; }
  bool operator==(const Homomorphism& other) const {
    return image == other.image;
  }
  bool operator<(const Homomorphism& other) const {
    return image < other.image;
  }
};

bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to,
                     const Homomorphism& h);

// Greedy small generating set: empty if the constants already generate,
// otherwise elements added until the closure is everything.
std::vector<Element> generating_set(const FiniteAlgebra& alg);

// Extends generator images to a full homomorphism by closure, or
// reports failure (conflict or non-homomorphism).
std::optional<Homomorphism> extend_from_generators(
    const FiniteAlgebra& from, const FiniteAlgebra& to,
    const std::vector<Element>& generators,
    const std::vector<Element>& images);

// All homomorphisms from `from` to `to`, sorted.  Throws ResourceError
// if more than `cap` would be produced.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& from,
                                                  const FiniteAlgebra& to,
                                                  long long cap = 1'000'000);

// A bijective homomorphism, or nullopt.  Uses iterated partition
// refinement over the operation tables to prune the search.
std::optional<Homomorphism> find_isomorphism(const FiniteAlgebra& a,
                                             const FiniteAlgebra& b);

}  // namespace dupcalc

#endif  // DUPCALC_HOM_HPP_
