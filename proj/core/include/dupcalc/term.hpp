#ifndef DUPCALC_TERM_HPP_
#define DUPCALC_TERM_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dupcalc/error.hpp"

namespace dupcalc {

using Element = int;

// An algebraic language: operation symbols with arities, in a fixed order.
struct Signature {
  std::vector<std::pair<std::string, int>> symbols;

  Signature() = default;
  Signature(std::initializer_list<std::pair<std::string, int>> syms)
      : symbols(syms) {}

  bool contains(const std::string& name) const;
  // Arity of `name`; throws DomainError if the symbol is unknown.
  int arity(const std::string& name) const;
  // Throws DomainError on duplicate names or negative arities.
  void validate() const;

  bool operator==(const Signature&) const = default;
};

// A first-order term: either a variable (1-based index) or an
// application of a signature symbol to child terms.
struct Term {
  int var = 0;                  // > 0 iff this node is a variable
  std::string symbol;           // set iff this node is an application
  std::vector<Term> children;

  bool is_variable() const { return var > 0; }

  static Term variable(int index);
  static Term apply(std::string sym, std::vector<Term> args);

  bool operator==(const Term&) const = default;
};

// Parses prefix/S-expression syntax: `(symbol arg ...)`, bare `x<k>`
// variables, bare nullary symbols, and the indexed shorthand
// `symbol/<width>[i1,...,in]`.  Arities are checked against `sig`.
Term parse_term(const std::string& text, const Signature& sig);

// Inverse of parse_term on well-formed terms.
std::string render_term(const Term& t);

// Largest variable index occurring in `t`; 0 for closed terms.
int free_variable_span(const Term& t);

// Collects the set of variable indices occurring in `t` (sorted, unique).
std::vector<int> occurring_variables(const Term& t);

// The term f(x_{i1},...,x_{in}) with declared width checked against the
// indices.  `indices.size()` must equal the arity of `symbol` in `sig`.
Term indexed_term(const std::string& symbol, int width,
                  const std::vector<int>& indices, const Signature& sig);

// The width-ary term selecting variable i.
Term projection_term(int width, int i);

class FiniteAlgebra;

// Bottom-up evaluation of `t` in `alg` under `assignment` (0-based
// element indices, position k holds the value of x_{k+1}).
Element eval_term(const Term& t, const FiniteAlgebra& alg,
                  std::span<const Element> assignment);

// Substitutes `replacements[i-1]` for variable x_i.  Every occurring
// variable must have a replacement.
Term substitute(const Term& t, const std::vector<Term>& replacements);

}  // namespace dupcalc

#endif  // DUPCALC_TERM_HPP_
