#include <doctest.h>

#include <random>

#include "dupcalc/algebra.hpp"
#include "dupcalc/catalog.hpp"
#include "dupcalc/error.hpp"
#include "dupcalc/term.hpp"

using namespace dupcalc;

namespace {

Signature lattice_sig() { return Signature{{"vee", 2}, {"wedge", 2}}; }

Term random_term(std::mt19937& rng, const Signature& sig, int max_vars,
                 int depth) {
  std::uniform_int_distribution<int> coin(0, 99);
  if (depth == 0 || coin(rng) < 30) {
    std::uniform_int_distribution<int> v(1, max_vars);
    return Term::variable(v(rng));
  }
  std::uniform_int_distribution<size_t> pick(0, sig.symbols.size() - 1);
  const auto& [sym, arity] = sig.symbols[pick(rng)];
  std::vector<Term> children;
  for (int i = 0; i < arity; ++i)
    children.push_back(random_term(rng, sig, max_vars, depth - 1));
  return Term::apply(sym, std::move(children));
}

// Reference evaluator: plain recursion, no sharing.
Element eval_reference(const Term& t, const FiniteAlgebra& alg,
                       const std::vector<Element>& assignment) {
  if (t.is_variable()) return assignment[t.var - 1];
  std::vector<Element> args;
  for (const Term& c : t.children)
    args.push_back(eval_reference(c, alg, assignment));
  return alg.apply(t.symbol, args);
}

}  // namespace

TEST_CASE("parse then render is the identity on rendered forms") {
  Signature sig = lattice_sig();
  for (const char* text :
       {"x1", "(vee x1 x2)", "(wedge (vee x1 x3) (wedge x2 x2))",
        "(vee (vee x1 x2) (vee x3 (wedge x1 x4)))"}) {
    Term t = parse_term(text, sig);
    CHECK(render_term(t) == text);
    CHECK(parse_term(render_term(t), sig) == t);
  }
}

TEST_CASE("indexed shorthand expands to the explicit application") {
  Signature sig = lattice_sig();
  CHECK(parse_term("vee/4[1,3]", sig) == parse_term("(vee x1 x3)", sig));
  CHECK(parse_term("wedge/8[2,6]", sig) == parse_term("(wedge x2 x6)", sig));
  CHECK(indexed_term("vee", 4, {1, 3}, sig) ==
        parse_term("(vee x1 x3)", sig));
  CHECK(projection_term(4, 2) == Term::variable(2));
}

TEST_CASE("parse rejects malformed input") {
  Signature sig = lattice_sig();
  CHECK_THROWS_AS(parse_term("(vee x1)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("(nope x1 x2)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("(vee x1 x2", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x0", sig), ParseError);
  CHECK_THROWS_AS(parse_term("vee/4[1,5]", sig), ParseError);
}

TEST_CASE("eval_term agrees with a reference evaluator on random terms") {
  const FiniteAlgebra& alg = catalog_algebra("3chain");
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<Element> elem(0, alg.size - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Term t = random_term(rng, alg.sig, 4, 6);
    std::vector<Element> assignment(4);
    for (Element& e : assignment) e = elem(rng);
    CHECK(eval_term(t, alg, assignment) ==
          eval_reference(t, alg, assignment));
  }
}

TEST_CASE("free_variable_span and occurring_variables") {
  Signature sig = lattice_sig();
  Term t = parse_term("(vee x2 (wedge x5 x2))", sig);
  CHECK(free_variable_span(t) == 5);
  CHECK(occurring_variables(t) == std::vector<int>{2, 5});
  CHECK(free_variable_span(parse_term("x1", sig)) == 1);
}

TEST_CASE("substitute replaces variables structurally") {
  Signature sig = lattice_sig();
  Term body = parse_term("(vee x1 (wedge x2 x1))", sig);
  std::vector<Term> repl{parse_term("(wedge x3 x4)", sig),
                         parse_term("x1", sig)};
  Term out = substitute(body, repl);
  CHECK(render_term(out) ==
        "(vee (wedge x3 x4) (wedge x1 (wedge x3 x4)))");
}
