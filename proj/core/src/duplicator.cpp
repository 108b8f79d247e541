#include "dupcalc/duplicator.hpp"

#include <set>

#include "dupcalc/error.hpp"

namespace dupcalc {

const DuplicatorEntry& Duplicator::entry(const std::string& ename) const {
  for (const DuplicatorEntry& e : entries)
    if (e.name == ename) return e;
  throw DomainError("duplicator '" + name + "' has no entry '" + ename + "'");
}

bool Duplicator::has_entry(const std::string& ename) const {
  for (const DuplicatorEntry& e : entries)
    if (e.name == ename) return true;
  return false;
}

Signature gamma_signature(const Duplicator& g) {
  Signature sig;
  for (const DuplicatorEntry& e : g.entries)
    sig.symbols.emplace_back(e.name, e.gamma_arity);
  return sig;
}

std::vector<std::string> validate_duplicator(const Duplicator& g) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& msg) { bad.push_back(msg); };
  if (g.m < 1) complain("factor count m must be >= 1");
  try {
    g.base_sig.validate();
  } catch (const DomainError& e) {
    complain(std::string("base signature: ") + e.what());
  }
  std::set<std::string> names;
  for (const DuplicatorEntry& e : g.entries) {
    if (e.name.empty()) complain("entry with empty name");
    if (!names.insert(e.name).second)
      complain("duplicate entry name '" + e.name + "'");
    if (e.gamma_arity < 0)
      complain("entry '" + e.name + "' has negative arity");
    if (static_cast<int>(e.terms.size()) != g.m)
      complain("entry '" + e.name + "' has " + std::to_string(e.terms.size()) +
               " coordinate terms, expected " + std::to_string(g.m));
    int span_limit = g.m * e.gamma_arity;
    for (size_t j = 0; j < e.terms.size(); ++j) {
      const Term& t = e.terms[j];
      if (free_variable_span(t) > span_limit)
        complain("entry '" + e.name + "' coordinate " + std::to_string(j + 1) +
                 " uses variable beyond span " + std::to_string(span_limit));
      try {
        check_symbols_against(t, g.base_sig);
      } catch (const DomainError& err) {
        complain("entry '" + e.name + "' coordinate " + std::to_string(j + 1) +
                 ": " + err.what());
      }
      if (g.mode == DuplicatorMode::disjoint) {
        for (int v : occurring_variables(t))
          if ((v - 1) % g.m + 1 != static_cast<int>(j) + 1)
            complain("entry '" + e.name + "' coordinate " +
                     std::to_string(j + 1) + " reads variable x" +
                     std::to_string(v) + " of another coordinate");
      }
    }
  }
  // Witness terms must at least parse in the duplicated language.
  Signature gsig = gamma_signature(g);
  auto try_parse = [&](const std::string& text, const std::string& where) {
    try {
      parse_term(text, gsig);
    } catch (const std::exception& e) {
      complain("witness " + where + ": " + e.what());
    }
  };
  for (const auto& [sym, per_coord] : g.witnesses.recover) {
    if (!g.base_sig.contains(sym))
      complain("recover witness for unknown base symbol '" + sym + "'");
    for (const auto& [coord, text] : per_coord) {
      if (coord < 1 || coord > g.m)
        complain("recover witness for '" + sym + "' at bad coordinate " +
                 std::to_string(coord));
      try_parse(text, "recover:" + sym);
    }
  }
  if (!g.witnesses.merge.empty()) try_parse(g.witnesses.merge, "merge");
  for (const auto& [perm, text] : g.witnesses.permute) {
    if (static_cast<int>(perm.size()) != g.m)
      complain("permutation witness '" + perm + "' has wrong length");
    else {
      std::set<char> seen;
      for (char c : perm) {
        if (c < '1' || c >= '1' + g.m || !seen.insert(c).second) {
          complain("permutation witness '" + perm + "' is not a permutation");
          break;
        }
      }
    }
    try_parse(text, "permute:" + perm);
  }
  return bad;
}

void check_symbols_against(const Term& t, const Signature& sig) {
  if (t.is_variable()) return;
  if (!sig.contains(t.symbol))
    throw DomainError("unknown symbol '" + t.symbol + "'");
  if (sig.arity(t.symbol) != static_cast<int>(t.children.size()))
    throw DomainError("symbol '" + t.symbol + "' applied to " +
                      std::to_string(t.children.size()) + " arguments");
  for (const Term& c : t.children) check_symbols_against(c, sig);
}

Term expand_gamma(const Duplicator& g, const Term& gamma_term,
                  int coordinate) {
  if (coordinate < 1 || coordinate > g.m)
    throw DomainError("expand_gamma: coordinate out of range");
  if (gamma_term.is_variable())
    return Term::variable(g.m * (gamma_term.var - 1) + coordinate);
  const DuplicatorEntry& e = g.entry(gamma_term.symbol);
  if (static_cast<int>(gamma_term.children.size()) != e.gamma_arity)
    throw DomainError("expand_gamma: arity mismatch at '" + e.name + "'");
  // Coordinate term of the entry reads base variable m(i-1)+j' for
  // coordinate j' of argument i; replace it by the expansion of the
  // i-th subterm at coordinate j'.
  std::vector<Term> repl;
  repl.reserve(static_cast<size_t>(g.m) * e.gamma_arity);
  for (int i = 1; i <= e.gamma_arity; ++i)
    for (int j = 1; j <= g.m; ++j)
      repl.push_back(expand_gamma(g, gamma_term.children[i - 1], j));
  return substitute(e.terms[coordinate - 1], repl);
}

}  // namespace dupcalc
