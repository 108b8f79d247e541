#ifndef DUPCALC_DUPLICATOR_HPP_
#define DUPCALC_DUPLICATOR_HPP_

#include <map>
#include <string>
#include <vector>

#include "dupcalc/algebra.hpp"

namespace dupcalc {

// One operation of the duplicated language: a named m-tuple of base
// terms.  An entry of arity n takes n arguments from the m-th power;
// coordinate j of argument i is base variable m(i-1)+j.
struct DuplicatorEntry {
  std::string name;
  int gamma_arity = 0;
  std::vector<Term> terms;  // length m, each with span <= m * gamma_arity
};

enum class DuplicatorMode { linked, disjoint };

// Hand-derived witness terms, written in the duplicated language
// (entry names as operation symbols).
struct WitnessSet {
  // Per base symbol, per coordinate (1-based): a term recovering the
  // symbol on diagonal inputs.  Missing coordinates are allowed; the
  // existential variant only needs one per symbol.
  std::map<std::string, std::map<int, std::string>> recover;
  std::string merge;  // m-ary term selecting coordinate j of argument j
  // One-line permutation string (e.g. "21") -> unary term permuting
  // coordinates; a generating set of the symmetric group suffices.
  std::map<std::string, std::string> permute;
};

struct Duplicator {
  std::string name;
  Signature base_sig;
  int m = 2;
  DuplicatorMode mode = DuplicatorMode::linked;
  std::vector<DuplicatorEntry> entries;
  WitnessSet witnesses;

  const DuplicatorEntry& entry(const std::string& name) const;
  bool has_entry(const std::string& name) const;
};

// The duplicated language as a signature (entry name -> gamma arity).
Signature gamma_signature(const Duplicator& g);

// Structural validation: spans, uniqueness, parseability of witnesses,
// and the syntactic coordinate-disjointness test in disjoint mode.
// Returns human-readable violations; empty means pass.
std::vector<std::string> validate_duplicator(const Duplicator& g);

// Throws DomainError if `t` uses a symbol missing from `sig` or at the
// wrong arity.
void check_symbols_against(const Term& t, const Signature& sig);

// Rewrites a term of the duplicated language into a base-language term
// computing coordinate j (1-based) of its value.  Variables of the
// result follow the block convention: coordinate j' of the duplicated
// variable x_i becomes base variable m(i-1)+j'.
Term expand_gamma(const Duplicator& g, const Term& gamma_term, int coordinate);

}  // namespace dupcalc

#endif  // DUPCALC_DUPLICATOR_HPP_
