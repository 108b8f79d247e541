#ifndef DUPCALC_CONGRUENCE_HPP_
#define DUPCALC_CONGRUENCE_HPP_

#include <string>
#include <vector>

#include "dupcalc/algebra.hpp"
#include "dupcalc/config.hpp"

namespace dupcalc {

// A partition of {0,...,size-1}, stored as least-representative blocks:
// rep[e] is the smallest element of the block of e.
struct Congruence {
  std::vector<Element> rep;

  int size() const { return static_cast<int>(rep.size()); }
  bool related(Element a, Element b) const { return rep[a] == rep[b]; }
  int block_count() const;
  bool operator==(const Congruence& other) const { return rep == other.rep; }
  bool operator<(const Congruence& other) const { return rep < other.rep; }

  static Congruence identity(int size);
  static Congruence full(int size);
};

// Normalizes an arbitrary block assignment to least-representative form.
Congruence normalize_partition(const std::vector<Element>& block_of);

// True iff every operation of `alg` respects the partition.
bool is_congruence(const FiniteAlgebra& alg, const Congruence& theta);

// Least congruence collapsing every listed pair.
Congruence congruence_generated(const FiniteAlgebra& alg,
                                const std::vector<std::pair<Element, Element>>&
                                    pairs);

// Cg(a, b).
Congruence principal_congruence(const FiniteAlgebra& alg, Element a,
                                Element b);

// Quotient algebra A/theta.  Elements are blocks, ordered by least
// representative; labels join the member labels with '|'.
FiniteAlgebra quotient_by(const FiniteAlgebra& alg, const Congruence& theta);

// The full congruence lattice, with join/meet closure and order data.
struct CongruenceLattice {
  std::vector<Congruence> elements;  // sorted by rep vector
  std::vector<char> leq;             // row-major: leq[i*n+j] iff i <= j
  int index_of(const Congruence& theta) const;
  bool le(int i, int j) const {
    return leq[static_cast<size_t>(i) * elements.size() + j] != 0;
  }
  int join(int i, int j) const;
  int meet(int i, int j) const;
};

CongruenceLattice congruence_lattice(const FiniteAlgebra& alg,
                                     const Limits& limits = {});

// A is subdirectly irreducible iff the identity congruence is
// meet-irreducible, i.e. there is a least nontrivial congruence
// (the monolith).
struct SubdirectIrreducibility {
  bool irreducible = false;
  Congruence monolith;  // set when irreducible and size > 1
};

SubdirectIrreducibility is_subdirectly_irreducible(const FiniteAlgebra& alg,
                                                   const Limits& limits = {});

// Order-isomorphism test between two congruence lattices (as finite
// posets), by backtracking over degree-compatible assignments.
bool lattices_order_isomorphic(const CongruenceLattice& a,
                               const CongruenceLattice& b);

}  // namespace dupcalc

#endif  // DUPCALC_CONGRUENCE_HPP_
