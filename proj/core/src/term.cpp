#include "dupcalc/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "dupcalc/algebra.hpp"

namespace dupcalc {

bool Signature::contains(const std::string& name) const {
  for (const auto& [sym, ar] : symbols)
    if (sym == name) return true;
  return false;
}

int Signature::arity(const std::string& name) const {
  for (const auto& [sym, ar] : symbols)
    if (sym == name) return ar;
  throw DomainError("unknown symbol '" + name + "'");
}

void Signature::validate() const {
  std::set<std::string> seen;
  for (const auto& [sym, ar] : symbols) {
    if (sym.empty()) throw DomainError("empty symbol name");
    if (ar < 0) throw DomainError("negative arity for '" + sym + "'");
    if (!seen.insert(sym).second)
      throw DomainError("duplicate symbol '" + sym + "'");
  }
}

Term Term::variable(int index) {
  if (index < 1) throw DomainError("variable index must be >= 1");
  Term t;
  t.var = index;
  return t;
}

Term Term::apply(std::string sym, std::vector<Term> args) {
  Term t;
  t.symbol = std::move(sym);
  t.children = std::move(args);
  return t;
}

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of term");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos) + " in '" + text + "'");
    ++pos;
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '\'' || c == '.';
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    if (pos == start)
      throw ParseError("expected identifier at position " +
                       std::to_string(pos) + " in '" + text + "'");
    return text.substr(start, pos - start);
  }
  int integer() {
    std::string s = ident();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw ParseError("expected integer, got '" + s + "'");
    return std::stoi(s);
  }
};

bool is_variable_name(const std::string& s, int* index) {
  if (s.size() < 2 || s[0] != 'x') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  *index = std::stoi(s.substr(1));
  return true;
}

Term parse_expr(Lexer& lx, const Signature& sig) {
  if (lx.peek() == '(') {
    lx.expect('(');
    std::string sym = lx.ident();
    if (!sig.contains(sym)) throw ParseError("unknown symbol '" + sym + "'");
    std::vector<Term> args;
    while (lx.peek() != ')') args.push_back(parse_expr(lx, sig));
    lx.expect(')');
    int ar = sig.arity(sym);
    if (static_cast<int>(args.size()) != ar)
      throw ParseError("symbol '" + sym + "' expects " + std::to_string(ar) +
                       " arguments, got " + std::to_string(args.size()));
    return Term::apply(sym, std::move(args));
  }
  std::string name = lx.ident();
  int index = 0;
  if (is_variable_name(name, &index)) {
    if (index < 1) throw ParseError("variable index must be >= 1");
    return Term::variable(index);
  }
  // Indexed shorthand symbol/<width>[i1,...,in].
  lx.skip_ws();
  if (lx.pos < lx.text.size() && lx.text[lx.pos] == '/') {
    ++lx.pos;
    int width = lx.integer();
    lx.expect('[');
    std::vector<int> indices;
    if (lx.peek() != ']') {
      indices.push_back(lx.integer());
      while (lx.peek() == ',') {
        lx.expect(',');
        indices.push_back(lx.integer());
      }
    }
    lx.expect(']');
    try {
      return indexed_term(name, width, indices, sig);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (!sig.contains(name)) throw ParseError("unknown symbol '" + name + "'");
  if (sig.arity(name) != 0)
    throw ParseError("symbol '" + name +
                     "' is not nullary; use (" + name + " ...)");
  return Term::apply(name, {});
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig) {
  Lexer lx{text};
  Term t = parse_expr(lx, sig);
  if (!lx.eof())
    throw ParseError("trailing input at position " + std::to_string(lx.pos) +
                     " in '" + text + "'");
  return t;
}

std::string render_term(const Term& t) {
  if (t.is_variable()) return "x" + std::to_string(t.var);
  if (t.children.empty()) return t.symbol;
  std::string out = "(" + t.symbol;
  for (const Term& c : t.children) out += " " + render_term(c);
  return out + ")";
}

int free_variable_span(const Term& t) {
  if (t.is_variable()) return t.var;
  int span = 0;
  for (const Term& c : t.children) span = std::max(span, free_variable_span(c));
  return span;
}

static void collect_vars(const Term& t, std::set<int>& out) {
  if (t.is_variable()) {
    out.insert(t.var);
    return;
  }
  for (const Term& c : t.children) collect_vars(c, out);
}

std::vector<int> occurring_variables(const Term& t) {
  std::set<int> s;
  collect_vars(t, s);
  return {s.begin(), s.end()};
}

Term indexed_term(const std::string& symbol, int width,
                  const std::vector<int>& indices, const Signature& sig) {
  int ar = sig.arity(symbol);
  if (static_cast<int>(indices.size()) != ar)
    throw DomainError("indexed term for '" + symbol + "' needs " +
                      std::to_string(ar) + " indices, got " +
                      std::to_string(indices.size()));
  if (width < 1) throw DomainError("width must be positive");
  std::vector<Term> args;
  for (int i : indices) {
    if (i < 1 || i > width)
      throw DomainError("index " + std::to_string(i) + " out of range 1.." +
                        std::to_string(width));
    args.push_back(Term::variable(i));
  }
  return Term::apply(symbol, std::move(args));
}

Term projection_term(int width, int i) {
  if (i < 1 || i > width)
    throw DomainError("projection index " + std::to_string(i) +
                      " out of range 1.." + std::to_string(width));
  return Term::variable(i);
}

Element eval_term(const Term& t, const FiniteAlgebra& alg,
                  std::span<const Element> assignment) {
  if (t.is_variable()) {
    if (t.var > static_cast<int>(assignment.size()))
      throw DomainError("assignment too short: needs x" +
                        std::to_string(t.var));
    return assignment[t.var - 1];
  }
  std::vector<Element> args;
  args.reserve(t.children.size());
  for (const Term& c : t.children) args.push_back(eval_term(c, alg, assignment));
  return alg.apply(t.symbol, args);
}

Term substitute(const Term& t, const std::vector<Term>& replacements) {
  if (t.is_variable()) {
    if (t.var > static_cast<int>(replacements.size()))
      throw DomainError("no replacement for x" + std::to_string(t.var));
    return replacements[t.var - 1];
  }
  std::vector<Term> args;
  args.reserve(t.children.size());
  for (const Term& c : t.children) args.push_back(substitute(c, replacements));
  return Term::apply(t.symbol, std::move(args));
}

}  // namespace dupcalc
