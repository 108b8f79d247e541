#ifndef DUPCALC_AXIOMS_HPP_
#define DUPCALC_AXIOMS_HPP_

#include <string>
#include <vector>

#include "dupcalc/algebra.hpp"
#include "dupcalc/config.hpp"

namespace dupcalc {

// A single checkable axiom over an algebra's own signature.
struct AxiomObligation {
  enum class Kind { identity, monotone, adjoint } kind;
  std::string id;
  // identity: lhs = rhs, both term texts.
  std::string lhs, rhs;
  // monotone: `op` preserves the order induced by `order_meet`.
  std::string op, order_meet;
  // adjoint: residuation between `op` and `res` in the order induced
  // by `order_meet`.  Side: "heyting" (a op b <= c iff b <= res(a,c)),
  // "left" (ditto for a possibly non-commutative op), "right"
  // (a op b <= c iff a <= res(c,b)), "co" (c <= a op b iff
  // res(a,c) <= b, for a join-like op).
  std::string res, side;

  static AxiomObligation identity_law(std::string id, std::string lhs,
                                      std::string rhs);
  static AxiomObligation monotone_law(std::string id, std::string op,
                                      std::string order_meet);
  static AxiomObligation adjoint_law(std::string id, std::string op,
                                     std::string res, std::string order_meet,
                                     std::string side);
};

struct AxiomSuite {
  std::string key;
  std::vector<AxiomObligation> obligations;
};

struct AxiomFailure {
  std::string obligation_id;
  std::string detail;
};

struct AxiomResult {
  bool pass = true;
  int checked = 0;
  std::vector<AxiomFailure> failures;
};

AxiomResult run_axiom_suite(const FiniteAlgebra& alg, const AxiomSuite& suite,
                            const Limits& limits = {});

}  // namespace dupcalc

#endif  // DUPCALC_AXIOMS_HPP_
