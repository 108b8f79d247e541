#ifndef DUPCALC_OPS_HPP_
#define DUPCALC_OPS_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dupcalc/algebra.hpp"
#include "dupcalc/config.hpp"

namespace dupcalc {

// Componentwise product; element order is lexicographic in factor order
// (leftmost factor most significant).  The empty product is the
// one-element algebra over `sig`.
FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& factors,
                             const Signature& sig_if_empty = {});

// Exchanges the tables of each listed symbol pair (e.g. meet <-> join,
// 0 <-> 1).  Arities must match within each pair.
FiniteAlgebra dual_of(const FiniteAlgebra& alg,
                      const std::vector<std::pair<std::string, std::string>>&
                          swaps);

// Least subuniverse containing `seed` and all constants.
std::vector<Element> subalgebra_generated(const FiniteAlgebra& alg,
                                          const std::set<Element>& seed);

// Restriction of `alg` to a subuniverse (must be closed).
FiniteAlgebra restrict_to(const FiniteAlgebra& alg,
                          const std::vector<Element>& universe,
                          const std::string& name);

// All subuniverses, sorted.  Intended for small algebras; throws
// ResourceError when 2^size would be enumerated beyond `max_size` = 16.
std::vector<std::vector<Element>> enumerate_subuniverses(
    const FiniteAlgebra& alg, int max_size = 16);

// Result of an exhaustive identity check.
struct IdentityCheck {
  bool holds = true;
  std::vector<Element> counterexample;  // assignment, indexed by variable
  long long checked = 0;
};

// Exhaustively evaluates lhs = rhs over all assignments to the
// variables occurring in either side (absent variables are irrelevant
// and pinned to 0).  Throws ResourceError beyond limits.eval_cap.
IdentityCheck check_identity(const FiniteAlgebra& alg, const Term& lhs,
                             const Term& rhs, const Limits& limits = {});

// a <= b iff meet(a,b) = a.  Validates the partial-order laws and that
// `meet` is idempotent/commutative/associative on the relation level;
// throws DomainError otherwise.
struct OrderRelation {
  int size = 0;
  std::vector<char> leq;  // row-major size x size
  bool le(Element a, Element b) const { return leq[a * size + b] != 0; }
};

OrderRelation induced_order(const FiniteAlgebra& alg,
                            const std::string& meet);

// Checks that `op` preserves `order` in every argument.  On failure the
// counterexample holds (argument position, tuple, perturbed element).
struct MonotonicityCheck {
  bool holds = true;
  int argument = -1;
  std::vector<Element> tuple;
  Element replaced = -1;
};

MonotonicityCheck check_monotonicity(const FiniteAlgebra& alg,
                                     const std::string& op,
                                     const OrderRelation& order);

// Residuum of `meet`: a -> c is the largest b with meet(a,b) <= c,
// verified to satisfy adjointness.  On failure returns the offending
// (a, c) pair instead of a table.
struct ResiduumResult {
  bool exists = false;
  std::vector<Element> table;  // size x size when exists
  Element fail_a = -1, fail_c = -1;
};

ResiduumResult residuum(const FiniteAlgebra& alg, const std::string& meet);

// Co-residuum of `join`: a ~> c is the least b with c <= join(a,b).
ResiduumResult coresiduum(const FiniteAlgebra& alg, const std::string& join);

}  // namespace dupcalc

#endif  // DUPCALC_OPS_HPP_
