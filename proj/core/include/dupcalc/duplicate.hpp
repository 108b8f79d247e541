#ifndef DUPCALC_DUPLICATE_HPP_
#define DUPCALC_DUPLICATE_HPP_

#include <vector>

#include "dupcalc/duplicator.hpp"
#include "dupcalc/hom.hpp"

namespace dupcalc {

// The duplicated algebra on universe N^m.  Elements are tuples in
// lexicographic order (first coordinate most significant); labels pair
// the base labels, e.g. "(1,0)".
FiniteAlgebra duplicate(const Duplicator& g, const FiniteAlgebra& base);

// Mixed product over m distinct factors; requires disjoint mode so
// that coordinate j's term only ever evaluates inside factor j.
FiniteAlgebra duplicate_mixed(const Duplicator& g,
                              const std::vector<FiniteAlgebra>& factors);

// Tuple <-> flat element conversions for a power universe (all factor
// sizes equal) or a mixed universe.
long long encode_tuple(std::span<const Element> tuple,
                       std::span<const int> sizes);
std::vector<Element> decode_tuple(long long element,
                                  std::span<const int> sizes);

// The m-th power of a homomorphism, as a map between the duplicated
// algebras; validated before return.
Homomorphism lift_morphism(const Duplicator& g, const FiniteAlgebra& from,
                           const FiniteAlgebra& to, const Homomorphism& h);

}  // namespace dupcalc

#endif  // DUPCALC_DUPLICATE_HPP_
