#include "dupcalc/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "dupcalc/duplicate.hpp"
#include "dupcalc/error.hpp"
#include "dupcalc/ops.hpp"

namespace dupcalc {

namespace {

// ---- signatures --------------------------------------------------------

Signature sig_of(std::initializer_list<std::pair<const char*, int>> syms) {
  Signature s;
  for (const auto& [name, ar] : syms) s.symbols.emplace_back(name, ar);
  return s;
}

Signature sig_du() { return sig_of({{"vee", 2}, {"wedge", 2}}); }
Signature sig_d() {
  return sig_of({{"vee", 2}, {"wedge", 2}, {"zero", 0}, {"one", 0}});
}
Signature sig_b() {
  return sig_of(
      {{"vee", 2}, {"wedge", 2}, {"zero", 0}, {"one", 0}, {"cmpl", 1}});
}
Signature sig_dmu() {
  return sig_of({{"vee", 2}, {"wedge", 2}, {"sneg", 1}});
}
Signature sig_dm() {
  return sig_of(
      {{"vee", 2}, {"wedge", 2}, {"zero", 0}, {"one", 0}, {"sneg", 1}});
}
Signature sig_bru() {
  return sig_of({{"vee", 2}, {"wedge", 2}, {"imp", 2}});
}
Signature sig_h() {
  return sig_of(
      {{"vee", 2}, {"wedge", 2}, {"zero", 0}, {"one", 0}, {"imp", 2}});
}
Signature sig_bh() {
  return sig_of({{"vee", 2},
                 {"wedge", 2},
                 {"zero", 0},
                 {"one", 0},
                 {"imp", 2},
                 {"coimp", 2}});
}
Signature sig_rl() {
  return sig_of({{"vee", 2},
                 {"wedge", 2},
                 {"zero", 0},
                 {"one", 0},
                 {"prod", 2},
                 {"ldiv", 2},
                 {"rdiv", 2}});
}
Signature sig_bm() {
  return sig_of({{"vee", 2},
                 {"wedge", 2},
                 {"zero", 0},
                 {"one", 0},
                 {"cmpl", 1},
                 {"boxp", 1},
                 {"boxm", 1}});
}
Signature sig_dbu() {
  return sig_of({{"vee_t", 2},
                 {"wedge_t", 2},
                 {"vee_k", 2},
                 {"wedge_k", 2},
                 {"neg", 1}});
}
Signature sig_db() {
  Signature s = sig_dbu();
  for (const char* c : {"false_t", "true_t", "false_k", "true_k"})
    s.symbols.emplace_back(c, 0);
  return s;
}
Signature sig_dbcu() {
  Signature s = sig_dbu();
  s.symbols.emplace_back("conf", 1);
  return s;
}
Signature sig_pblu() {
  return sig_of(
      {{"vee_t", 2}, {"wedge_t", 2}, {"vee_k", 2}, {"wedge_k", 2}});
}
Signature sig_tl6() {
  return sig_of({{"vee_t", 2},
                 {"wedge_t", 2},
                 {"vee_f", 2},
                 {"wedge_f", 2},
                 {"vee_i", 2},
                 {"wedge_i", 2}});
}
Signature sig_tlt() {
  Signature s = sig_tl6();
  s.symbols.emplace_back("tneg", 1);
  return s;
}

// ---- algebra builders --------------------------------------------------

// Lattice on {0..n-1} from a reflexive partial order; joins/meets must
// exist.
FiniteAlgebra lattice_from_leq(const std::string& name, const Signature& sig,
                               int n, const std::vector<char>& leq) {
  auto le = [&](Element a, Element b) { return leq[a * n + b] != 0; };
  auto join = [&](Element a, Element b) {
    for (Element c = 0; c < n; ++c) {
      if (!le(a, c) || !le(b, c)) continue;
      bool least = true;
      for (Element d = 0; d < n; ++d)
        if (le(a, d) && le(b, d) && !le(c, d)) least = false;
      if (least) return c;
    }
    throw DomainError(name + ": missing join");
  };
  auto meet = [&](Element a, Element b) {
    for (Element c = n - 1; c >= 0; --c) {
      if (!le(c, a) || !le(c, b)) continue;
      bool greatest = true;
      for (Element d = 0; d < n; ++d)
        if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
      if (greatest) return c;
    }
    throw DomainError(name + ": missing meet");
  };
  return make_algebra(name, sig, n,
                      [&](const std::string& sym, std::span<const Element> a) {
                        if (sym == "vee") return join(a[0], a[1]);
                        if (sym == "wedge") return meet(a[0], a[1]);
                        if (sym == "zero") return Element{0};
                        if (sym == "one") return Element{n - 1};
                        throw DomainError(name + ": unexpected symbol " + sym);
                      });
}

std::vector<char> chain_leq(int n) {
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) leq[a * n + b] = 1;
  return leq;
}

// Pair algebra over a base: universe base.size^2, element a*n+b.
FiniteAlgebra pair_algebra(
    const std::string& name, const Signature& sig, const FiniteAlgebra& base,
    const std::function<std::pair<Element, Element>(
        const std::string&, std::span<const std::pair<Element, Element>>)>&
        op) {
  int n = base.size;
  FiniteAlgebra out = make_algebra(
      name, sig, n * n,
      [&](const std::string& sym, std::span<const Element> args) {
        std::vector<std::pair<Element, Element>> pairs;
        for (Element e : args) pairs.emplace_back(e / n, e % n);
        auto [a, b] = op(sym, pairs);
        return a * n + b;
      });
  for (Element e = 0; e < n * n; ++e)
    out.labels.push_back("(" + base.label_of(e / n) + "," +
                         base.label_of(e % n) + ")");
  out.validate();
  return out;
}

// ---- duplicator builders -----------------------------------------------

struct EntrySpec {
  const char* name;
  int arity;
  std::vector<std::string> terms;
};

Duplicator make_dup(std::string name, Signature base_sig, int m,
                    DuplicatorMode mode, const std::vector<EntrySpec>& specs) {
  Duplicator g;
  g.name = std::move(name);
  g.base_sig = std::move(base_sig);
  g.m = m;
  g.mode = mode;
  for (const EntrySpec& s : specs) {
    DuplicatorEntry e;
    e.name = s.name;
    e.gamma_arity = s.arity;
    for (const std::string& t : s.terms)
      e.terms.push_back(parse_term(t, g.base_sig));
    g.entries.push_back(std::move(e));
  }
  return g;
}

// Entries shared by all bilattice-style binary duplicators.
std::vector<EntrySpec> bilattice_entries() {
  return {{"vee_t", 2, {"vee/4[1,3]", "wedge/4[2,4]"}},
          {"wedge_t", 2, {"wedge/4[1,3]", "vee/4[2,4]"}},
          {"vee_k", 2, {"vee/4[1,3]", "vee/4[2,4]"}},
          {"wedge_k", 2, {"wedge/4[1,3]", "wedge/4[2,4]"}},
          {"neg", 1, {"x2", "x1"}}};
}

std::vector<EntrySpec> bound_entries() {
  return {{"false_t", 0, {"zero", "one"}},
          {"true_t", 0, {"one", "zero"}},
          {"false_k", 0, {"zero", "zero"}},
          {"true_k", 0, {"one", "one"}}};
}

std::vector<EntrySpec> concat(std::vector<EntrySpec> a,
                              const std::vector<EntrySpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// The merging term for bilattice-style operation families: the k-style
// pair must be a plain coordinatewise lattice, the t-style pair the
// coordinate-twisted one.
std::string merge_term(const std::string& vk, const std::string& wk,
                       const std::string& vt, const std::string& wt,
                       const std::string& x, const std::string& y) {
  return "(" + vk + " (" + wk + " " + x + " (" + vt + " " + x + " " + y +
         ")) (" + wk + " " + y + " (" + wt + " " + x + " " + y + ")))";
}

void bl_witnesses(Duplicator& g) {
  g.witnesses.recover["vee"] = {{1, "(vee_k x1 x2)"}, {2, "(vee_k x1 x2)"}};
  g.witnesses.recover["wedge"] = {{1, "(wedge_k x1 x2)"},
                                  {2, "(wedge_k x1 x2)"}};
  g.witnesses.merge =
      merge_term("vee_k", "wedge_k", "vee_t", "wedge_t", "x1", "x2");
  g.witnesses.permute = {{"21", "(neg x1)"}};
}

void bl_bound_witnesses(Duplicator& g) {
  bl_witnesses(g);
  g.witnesses.recover["zero"] = {{1, "false_k"}, {2, "false_k"}};
  g.witnesses.recover["one"] = {{1, "true_k"}, {2, "true_k"}};
}

// Composes a merging term with four unary arguments, in the duplicated
// language.
std::string apply_merge4(const Duplicator& g, const std::string& v4,
                         const std::vector<std::string>& args) {
  Signature gsig = gamma_signature(g);
  Term body = parse_term(v4, gsig);
  std::vector<Term> repl;
  for (const std::string& a : args) repl.push_back(parse_term(a, gsig));
  return render_term(substitute(body, repl));
}

// ---- axiom suite builders ----------------------------------------------

using Ob = AxiomObligation;

void add_lattice(AxiomSuite& s, const std::string& j, const std::string& m,
                 const std::string& tag) {
  auto id = [&](const std::string& law) { return tag + ":" + law; };
  s.obligations.push_back(Ob::identity_law(
      id(j + "-comm"), "(" + j + " x1 x2)", "(" + j + " x2 x1)"));
  s.obligations.push_back(Ob::identity_law(
      id(m + "-comm"), "(" + m + " x1 x2)", "(" + m + " x2 x1)"));
  s.obligations.push_back(
      Ob::identity_law(id(j + "-assoc"), "(" + j + " (" + j + " x1 x2) x3)",
                       "(" + j + " x1 (" + j + " x2 x3))"));
  s.obligations.push_back(
      Ob::identity_law(id(m + "-assoc"), "(" + m + " (" + m + " x1 x2) x3)",
                       "(" + m + " x1 (" + m + " x2 x3))"));
  s.obligations.push_back(Ob::identity_law(
      id("absorb1"), "(" + j + " x1 (" + m + " x1 x2))", "x1"));
  s.obligations.push_back(Ob::identity_law(
      id("absorb2"), "(" + m + " x1 (" + j + " x1 x2))", "x1"));
}

void add_distributivity(AxiomSuite& s, const std::vector<std::string>& ops,
                        const std::string& tag) {
  for (const std::string& o : ops)
    for (const std::string& p : ops) {
      if (o == p) continue;
      s.obligations.push_back(Ob::identity_law(
          tag + ":" + o + "-over-" + p, "(" + o + " x1 (" + p + " x2 x3))",
          "(" + p + " (" + o + " x1 x2) (" + o + " x1 x3))"));
    }
}

void add_involution(AxiomSuite& s, const std::string& f,
                    const std::string& tag) {
  s.obligations.push_back(
      Ob::identity_law(tag + ":" + f + "-involution",
                       "(" + f + " (" + f + " x1))", "x1"));
}

// f maps the (j,m) lattice to itself homomorphically.
void add_preserves(AxiomSuite& s, const std::string& f, const std::string& j,
                   const std::string& m, const std::string& tag) {
  s.obligations.push_back(Ob::identity_law(
      tag + ":" + f + "-preserves-" + j, "(" + f + " (" + j + " x1 x2))",
      "(" + j + " (" + f + " x1) (" + f + " x2))"));
  s.obligations.push_back(Ob::identity_law(
      tag + ":" + f + "-preserves-" + m, "(" + f + " (" + m + " x1 x2))",
      "(" + m + " (" + f + " x1) (" + f + " x2))"));
}

// f maps the (j,m) lattice to its dual.
void add_reverses(AxiomSuite& s, const std::string& f, const std::string& j,
                  const std::string& m, const std::string& tag) {
  s.obligations.push_back(Ob::identity_law(
      tag + ":" + f + "-reverses-" + j, "(" + f + " (" + j + " x1 x2))",
      "(" + m + " (" + f + " x1) (" + f + " x2))"));
  s.obligations.push_back(Ob::identity_law(
      tag + ":" + f + "-reverses-" + m, "(" + f + " (" + m + " x1 x2))",
      "(" + j + " (" + f + " x1) (" + f + " x2))"));
}

void add_commute(AxiomSuite& s, const std::string& f, const std::string& h,
                 const std::string& tag) {
  s.obligations.push_back(Ob::identity_law(tag + ":" + f + "-" + h + "-commute",
                                           "(" + f + " (" + h + " x1))",
                                           "(" + h + " (" + f + " x1))"));
}

void add_bounds(AxiomSuite& s, const std::string& j, const std::string& m,
                const std::string& bot, const std::string& top,
                const std::string& tag) {
  s.obligations.push_back(Ob::identity_law(tag + ":" + top + "-absorbing",
                                           "(" + j + " x1 " + top + ")", top));
  s.obligations.push_back(Ob::identity_law(tag + ":" + bot + "-absorbing",
                                           "(" + m + " x1 " + bot + ")", bot));
  s.obligations.push_back(Ob::identity_law(tag + ":" + top + "-neutral",
                                           "(" + m + " x1 " + top + ")", "x1"));
  s.obligations.push_back(Ob::identity_law(tag + ":" + bot + "-neutral",
                                           "(" + j + " x1 " + bot + ")", "x1"));
}

void add_bilattice_core(AxiomSuite& s) {
  add_lattice(s, "vee_t", "wedge_t", "t");
  add_lattice(s, "vee_k", "wedge_k", "k");
  add_distributivity(s, {"vee_t", "wedge_t", "vee_k", "wedge_k"}, "dist");
  add_involution(s, "neg", "neg");
  add_reverses(s, "neg", "vee_t", "wedge_t", "neg");
  add_preserves(s, "neg", "vee_k", "wedge_k", "neg");
}

void add_trilattice_lattices(AxiomSuite& s) {
  add_lattice(s, "vee_t", "wedge_t", "t");
  add_lattice(s, "vee_f", "wedge_f", "f");
  add_lattice(s, "vee_i", "wedge_i", "i");
  add_distributivity(
      s, {"vee_t", "wedge_t", "vee_f", "wedge_f", "vee_i", "wedge_i"}, "dist");
}

// ---- the catalog tables ------------------------------------------------

struct Catalog {
  std::map<std::string, FiniteAlgebra> algebras;
  std::map<std::string, Duplicator> duplicators;
  std::map<std::string, AxiomSuite> suites;
  std::map<std::string, std::string> descriptions;  // "kind/key" -> text
};

void build_algebras(Catalog& cat) {
  auto put = [&](FiniteAlgebra alg, const std::string& desc) {
    cat.descriptions["algebra/" + alg.name] = desc;
    cat.algebras.emplace(alg.name, std::move(alg));
  };

  // Plain lattices.
  put(lattice_from_leq("2Du", sig_du(), 2, chain_leq(2)),
      "two-element lattice, unbounded signature");
  put(lattice_from_leq("3chain", sig_du(), 3, chain_leq(3)),
      "three-element chain");
  {
    FiniteAlgebra two = cat.algebras.at("2Du");
    FiniteAlgebra p = direct_product({two, two});
    p.name = "2x2";
    put(std::move(p), "four-element Boolean lattice reduct");
  }
  {
    // M3: bottom 0, atoms 1,2,3, top 4.
    int n = 5;
    std::vector<char> leq(n * n, 0);
    for (Element a = 0; a < n; ++a) leq[a * n + a] = 1;
    for (Element a : {1, 2, 3}) {
      leq[0 * n + a] = 1;
      leq[a * n + 4] = 1;
    }
    leq[0 * n + 4] = 1;
    put(lattice_from_leq("M3", sig_du(), n, leq),
        "five-element modular non-distributive lattice");
  }
  {
    // N5: 0 < 1 < 3 < 4 and 0 < 2 < 4.
    int n = 5;
    std::vector<char> leq(n * n, 0);
    auto set = [&](Element a, Element b) { leq[a * n + b] = 1; };
    for (Element a = 0; a < n; ++a) set(a, a);
    set(0, 1);
    set(0, 3);
    set(0, 2);
    set(0, 4);
    set(1, 3);
    set(1, 4);
    set(3, 4);
    set(2, 4);
    put(lattice_from_leq("N5", sig_du(), n, leq),
        "five-element non-modular lattice");
  }

  // Bounded lattices and expansions.
  put(lattice_from_leq("2D", sig_d(), 2, chain_leq(2)),
      "two-element bounded lattice");
  put(lattice_from_leq("3D", sig_d(), 3, chain_leq(3)),
      "three-element bounded chain");
  put(make_algebra("2B", sig_b(), 2,
                   [](const std::string& sym, std::span<const Element> a) {
                     if (sym == "vee") return std::max(a[0], a[1]);
                     if (sym == "wedge") return std::min(a[0], a[1]);
                     if (sym == "zero") return Element{0};
                     if (sym == "one") return Element{1};
                     return Element{1 - a[0]};  // cmpl
                   }),
      "two-element Boolean algebra");
  put(make_algebra("3DM", sig_dm(), 3,
                   [](const std::string& sym, std::span<const Element> a) {
                     if (sym == "vee") return std::max(a[0], a[1]);
                     if (sym == "wedge") return std::min(a[0], a[1]);
                     if (sym == "zero") return Element{0};
                     if (sym == "one") return Element{2};
                     return Element{2 - a[0]};  // sneg
                   }),
      "three-element Kleene chain with order-reversing involution");

  // Brouwerian / Heyting / bi-Heyting finite witnesses.
  {
    FiniteAlgebra chain3 = cat.algebras.at("3chain");
    ResiduumResult r = residuum(chain3, "wedge");
    put(make_algebra("3Bru", sig_bru(), 3,
                     [&](const std::string& sym, std::span<const Element> a) {
                       if (sym == "vee") return std::max(a[0], a[1]);
                       if (sym == "wedge") return std::min(a[0], a[1]);
                       return r.table[a[0] * 3 + a[1]];  // imp
                     }),
        "three-element Brouwerian chain");
    put(make_algebra("3H", sig_h(), 3,
                     [&](const std::string& sym, std::span<const Element> a) {
                       if (sym == "vee") return std::max(a[0], a[1]);
                       if (sym == "wedge") return std::min(a[0], a[1]);
                       if (sym == "zero") return Element{0};
                       if (sym == "one") return Element{2};
                       return r.table[a[0] * 3 + a[1]];  // imp
                     }),
        "three-element Heyting chain");
    put(make_algebra("3RL", sig_rl(), 3,
                     [&](const std::string& sym, std::span<const Element> a) {
                       if (sym == "vee") return std::max(a[0], a[1]);
                       if (sym == "wedge" || sym == "prod")
                         return std::min(a[0], a[1]);
                       if (sym == "zero") return Element{0};
                       if (sym == "one") return Element{2};
                       if (sym == "ldiv") return r.table[a[0] * 3 + a[1]];
                       return r.table[a[1] * 3 + a[0]];  // rdiv(x,y) = y -> x
                     }),
        "three-element residuated chain with idempotent product");
  }
  {
    const FiniteAlgebra& sq = cat.algebras.at("2x2");
    ResiduumResult r = residuum(sq, "wedge");
    ResiduumResult c = coresiduum(sq, "vee");
    put(make_algebra("2x2bH", sig_bh(), 4,
                     [&](const std::string& sym, std::span<const Element> a) {
                       if (sym == "vee") return sq.apply("vee", a);
                       if (sym == "wedge") return sq.apply("wedge", a);
                       if (sym == "zero") return Element{0};
                       if (sym == "one") return Element{3};
                       if (sym == "imp") return r.table[a[0] * 4 + a[1]];
                       return c.table[a[0] * 4 + a[1]];  // coimp
                     }),
        "four-element bi-Heyting algebra on the Boolean square");
  }

  // Bi-modal witness: Boolean square, one box from the total frame
  // relation, the other from the point swap.
  put(make_algebra("4BM", sig_bm(), 4,
                   [](const std::string& sym, std::span<const Element> a) {
                     if (sym == "vee") return Element{a[0] | a[1]};
                     if (sym == "wedge") return Element{a[0] & a[1]};
                     if (sym == "zero") return Element{0};
                     if (sym == "one") return Element{3};
                     if (sym == "cmpl") return Element{3 ^ a[0]};
                     if (sym == "boxp") return Element{a[0] == 3 ? 3 : 0};
                     // boxm: swap the two frame points.
                     return Element{((a[0] & 1) << 1) | (a[0] >> 1)};
                   }),
      "four-element bi-modal Boolean algebra over a two-point frame");

  // De Morgan pairs.
  {
    const FiniteAlgebra& two = cat.algebras.at("2Du");
    auto dm_op = [](const std::string& sym,
                    std::span<const std::pair<Element, Element>> p)
        -> std::pair<Element, Element> {
      if (sym == "vee")
        return {std::max(p[0].first, p[1].first),
                std::max(p[0].second, p[1].second)};
      if (sym == "wedge")
        return {std::min(p[0].first, p[1].first),
                std::min(p[0].second, p[1].second)};
      if (sym == "zero") return {0, 0};
      if (sym == "one") return {1, 1};
      return {1 - p[0].second, 1 - p[0].first};  // sneg
    };
    put(pair_algebra("4DMu", sig_dmu(), two, dm_op),
        "four-element De Morgan diamond, unbounded signature");
    put(pair_algebra("4DM", sig_dm(), two, dm_op),
        "four-element De Morgan diamond");
  }

  // Bilattices as pairs over chains.
  auto bilattice_op = [](const FiniteAlgebra& base) {
    int top = base.size - 1;
    return [&base, top](const std::string& sym,
                        std::span<const std::pair<Element, Element>> p)
               -> std::pair<Element, Element> {
      auto j = [&](Element a, Element b) {
        std::vector<Element> ab{a, b};
        return base.apply("vee", ab);
      };
      auto m = [&](Element a, Element b) {
        std::vector<Element> ab{a, b};
        return base.apply("wedge", ab);
      };
      if (sym == "vee_t") return {j(p[0].first, p[1].first),
                                  m(p[0].second, p[1].second)};
      if (sym == "wedge_t") return {m(p[0].first, p[1].first),
                                    j(p[0].second, p[1].second)};
      if (sym == "vee_k") return {j(p[0].first, p[1].first),
                                  j(p[0].second, p[1].second)};
      if (sym == "wedge_k") return {m(p[0].first, p[1].first),
                                    m(p[0].second, p[1].second)};
      if (sym == "neg") return {p[0].second, p[0].first};
      if (sym == "false_t") return {0, top};
      if (sym == "true_t") return {top, 0};
      if (sym == "false_k") return {0, 0};
      return {top, top};  // true_k
    };
  };
  {
    const FiniteAlgebra& two = cat.algebras.at("2Du");
    put(pair_algebra("4DBu", sig_dbu(), two, bilattice_op(two)),
        "four-element distributive bilattice, unbounded signature");
    put(pair_algebra("4DB", sig_db(), two, bilattice_op(two)),
        "four-element bounded distributive bilattice");
    const FiniteAlgebra& three = cat.algebras.at("3chain");
    put(pair_algebra("9DB", sig_db(), three, bilattice_op(three)),
        "nine-element bounded distributive bilattice over the three-chain");
  }

  // Pre-bilattice views.
  put(make_algebra("2pBL", sig_pblu(), 2,
                   [](const std::string& sym, std::span<const Element> a) {
                     if (sym == "vee_t" || sym == "vee_k")
                       return std::max(a[0], a[1]);
                     return std::min(a[0], a[1]);
                   }),
      "two-element pre-bilattice with coinciding orders");
  {
    const FiniteAlgebra& dbu = cat.algebras.at("4DBu");
    FiniteAlgebra p = make_algebra(
        "4pBL", sig_pblu(), 4,
        [&](const std::string& sym, std::span<const Element> a) {
          return dbu.apply(sym, a);
        });
    p.labels = dbu.labels;
    p.validate();
    put(std::move(p), "pre-bilattice reduct of the four-element bilattice");
  }

  // Two-element trilattices: sign s picks the plain or dual order for
  // the t and f reducts; the i reduct is always the plain one.
  auto tiny_trilattice = [&](const std::string& name, bool t_plain,
                             bool f_plain, const std::string& desc) {
    put(make_algebra(name, sig_tl6(), 2,
                     [&](const std::string& sym, std::span<const Element> a) {
                       Element mx = std::max(a[0], a[1]);
                       Element mn = std::min(a[0], a[1]);
                       if (sym == "vee_t") return t_plain ? mx : mn;
                       if (sym == "wedge_t") return t_plain ? mn : mx;
                       if (sym == "vee_f") return f_plain ? mx : mn;
                       if (sym == "wedge_f") return f_plain ? mn : mx;
                       if (sym == "vee_i") return mx;
                       return mn;  // wedge_i
                     }),
        desc);
  };
  tiny_trilattice("2pp", true, true, "two-element trilattice, both plain");
  tiny_trilattice("2pm", true, false,
                  "two-element trilattice, falsity order reversed");
  tiny_trilattice("2mp", false, true,
                  "two-element trilattice, truth order reversed");
  tiny_trilattice("2mm", false, false,
                  "two-element trilattice, both orders reversed");

  // Four-element trilattices with t-involution.
  auto four_trilattice = [&](const std::string& name, bool f_plain,
                             const std::string& desc) {
    const FiniteAlgebra& two = cat.algebras.at("2Du");
    put(pair_algebra(
            name, sig_tlt(), two,
            [f_plain](const std::string& sym,
                      std::span<const std::pair<Element, Element>> p)
                -> std::pair<Element, Element> {
              auto mx = [](Element a, Element b) { return std::max(a, b); };
              auto mn = [](Element a, Element b) { return std::min(a, b); };
              if (sym == "vee_t") return {mx(p[0].first, p[1].first),
                                          mn(p[0].second, p[1].second)};
              if (sym == "wedge_t") return {mn(p[0].first, p[1].first),
                                            mx(p[0].second, p[1].second)};
              if (sym == "vee_f")
                return f_plain ? std::pair<Element, Element>{
                                     mx(p[0].first, p[1].first),
                                     mx(p[0].second, p[1].second)}
                               : std::pair<Element, Element>{
                                     mn(p[0].first, p[1].first),
                                     mn(p[0].second, p[1].second)};
              if (sym == "wedge_f")
                return f_plain ? std::pair<Element, Element>{
                                     mn(p[0].first, p[1].first),
                                     mn(p[0].second, p[1].second)}
                               : std::pair<Element, Element>{
                                     mx(p[0].first, p[1].first),
                                     mx(p[0].second, p[1].second)};
              if (sym == "vee_i") return {mx(p[0].first, p[1].first),
                                          mx(p[0].second, p[1].second)};
              if (sym == "wedge_i") return {mn(p[0].first, p[1].first),
                                            mn(p[0].second, p[1].second)};
              return {p[0].second, p[0].first};  // tneg
            }),
        desc);
  };
  four_trilattice("4p", true,
                  "four-element trilattice with truth involution, plain "
                  "falsity order");
  four_trilattice("4m", false,
                  "four-element trilattice with truth involution, reversed "
                  "falsity order");
}

// Built after duplicators (needs Gamma_DBCu and Gamma_TLtf).
void build_derived_algebras(Catalog& cat) {
  auto put = [&](FiniteAlgebra alg, const std::string& desc) {
    cat.descriptions["algebra/" + alg.name] = desc;
    cat.algebras.emplace(alg.name, std::move(alg));
  };
  {
    FiniteAlgebra s = duplicate(cat.duplicators.at("Gamma_DBCu"),
                                cat.algebras.at("4DMu"));
    s.name = "16DBCu";
    put(std::move(s),
        "sixteen-element distributive bilattice with conflation");
  }
  {
    FiniteAlgebra s = duplicate(cat.duplicators.at("Gamma_TLtf"),
                                cat.algebras.at("4DBu"));
    s.name = "16TLtf";
    put(std::move(s),
        "sixteen-element trilattice with truth and falsity involutions");
  }
  {
    // Pairs over 16DBCu: truth order squared, falsity order from the
    // knowledge square, information order from knowledge times its
    // dual; involutions act coordinatewise except the pair swap.
    const FiniteAlgebra& s = cat.algebras.at("16DBCu");
    Signature sig = sig_tl6();
    for (const char* f : {"tneg", "fneg", "ineg"}) sig.symbols.emplace_back(f, 1);
    put(pair_algebra(
            "256", sig, s,
            [&s](const std::string& sym,
                 std::span<const std::pair<Element, Element>> p)
                -> std::pair<Element, Element> {
              auto ap2 = [&](const char* op, Element a, Element b) {
                std::vector<Element> ab{a, b};
                return s.apply(op, ab);
              };
              auto ap1 = [&](const char* op, Element a) {
                std::vector<Element> aa{a};
                return s.apply(op, aa);
              };
              Element a = p[0].first, b = p[0].second;
              if (sym == "vee_t")
                return {ap2("vee_t", a, p[1].first),
                        ap2("vee_t", b, p[1].second)};
              if (sym == "wedge_t")
                return {ap2("wedge_t", a, p[1].first),
                        ap2("wedge_t", b, p[1].second)};
              if (sym == "vee_f")
                return {ap2("vee_k", a, p[1].first),
                        ap2("vee_k", b, p[1].second)};
              if (sym == "wedge_f")
                return {ap2("wedge_k", a, p[1].first),
                        ap2("wedge_k", b, p[1].second)};
              if (sym == "vee_i")
                return {ap2("vee_k", a, p[1].first),
                        ap2("wedge_k", b, p[1].second)};
              if (sym == "wedge_i")
                return {ap2("wedge_k", a, p[1].first),
                        ap2("vee_k", b, p[1].second)};
              if (sym == "tneg") return {ap1("neg", a), ap1("neg", b)};
              if (sym == "fneg") return {ap1("conf", a), ap1("conf", b)};
              return {b, a};  // ineg
            }),
        "256-element trilattice with three involutions");
  }
}

void build_duplicators(Catalog& cat) {
  auto put = [&](Duplicator g, const std::string& desc) {
    std::vector<std::string> bad = validate_duplicator(g);
    if (!bad.empty())
      throw DomainError("catalog duplicator '" + g.name + "': " + bad.front());
    cat.descriptions["duplicator/" + g.name] = desc;
    cat.duplicators.emplace(g.name, std::move(g));
  };

  {
    Duplicator g = make_dup("Gamma_BLu", sig_du(), 2, DuplicatorMode::linked,
                            bilattice_entries());
    bl_witnesses(g);
    put(std::move(g), "unbounded distributive bilattices over lattices");
  }
  {
    Duplicator g = make_dup("Gamma_b", sig_d(), 2, DuplicatorMode::linked,
                            bound_entries());
    put(std::move(g), "the four bilattice constants over bounded lattices");
  }
  {
    Duplicator g = make_dup("Gamma_BL", sig_d(), 2, DuplicatorMode::linked,
                            concat(bilattice_entries(), bound_entries()));
    bl_bound_witnesses(g);
    put(std::move(g), "bounded distributive bilattices over bounded lattices");
  }
  {
    std::vector<EntrySpec> entries = bilattice_entries();
    entries.push_back({"conf", 1, {"(sneg x2)", "(sneg x1)"}});
    Duplicator g = make_dup("Gamma_DBCu", sig_dmu(), 2,
                            DuplicatorMode::linked, entries);
    bl_witnesses(g);
    g.witnesses.recover["sneg"] = {{1, "(conf x1)"}, {2, "(conf x1)"}};
    put(std::move(g),
        "bilattices with conflation over De Morgan algebras, unbounded");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"conf", 1, {"(sneg x2)", "(sneg x1)"}});
    Duplicator g =
        make_dup("Gamma_DBC", sig_dm(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["sneg"] = {{1, "(conf x1)"}, {2, "(conf x1)"}};
    put(std::move(g), "bounded bilattices with conflation over De Morgan "
                      "algebras");
  }
  {
    Duplicator g = make_dup(
        "Gamma_TLtf", sig_dbu(), 2, DuplicatorMode::linked,
        {{"vee_t", 2, {"vee_t/4[1,3]", "vee_t/4[2,4]"}},
         {"wedge_t", 2, {"wedge_t/4[1,3]", "wedge_t/4[2,4]"}},
         {"vee_i", 2, {"vee_k/4[1,3]", "vee_k/4[2,4]"}},
         {"wedge_i", 2, {"wedge_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"vee_f", 2, {"vee_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"wedge_f", 2, {"wedge_k/4[1,3]", "vee_k/4[2,4]"}},
         {"tneg", 1, {"(neg x1)", "(neg x2)"}},
         {"fneg", 1, {"x2", "x1"}}});
    g.witnesses.recover["vee_t"] = {{1, "(vee_t x1 x2)"},
                                    {2, "(vee_t x1 x2)"}};
    g.witnesses.recover["wedge_t"] = {{1, "(wedge_t x1 x2)"},
                                      {2, "(wedge_t x1 x2)"}};
    g.witnesses.recover["vee_k"] = {{1, "(vee_i x1 x2)"},
                                    {2, "(vee_i x1 x2)"}};
    g.witnesses.recover["wedge_k"] = {{1, "(wedge_i x1 x2)"},
                                      {2, "(wedge_i x1 x2)"}};
    g.witnesses.recover["neg"] = {{1, "(tneg x1)"}, {2, "(tneg x1)"}};
    g.witnesses.merge =
        merge_term("vee_i", "wedge_i", "vee_f", "wedge_f", "x1", "x2");
    g.witnesses.permute = {{"21", "(fneg x1)"}};
    put(std::move(g),
        "trilattices with two involutions over unbounded bilattices");
  }
  {
    Duplicator g = make_dup(
        "Gamma_TLtfi_binary", sig_dbcu(), 2, DuplicatorMode::linked,
        {{"vee_t", 2, {"vee_t/4[1,3]", "vee_t/4[2,4]"}},
         {"wedge_t", 2, {"wedge_t/4[1,3]", "wedge_t/4[2,4]"}},
         {"vee_f", 2, {"vee_k/4[1,3]", "vee_k/4[2,4]"}},
         {"wedge_f", 2, {"wedge_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"vee_i", 2, {"vee_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"wedge_i", 2, {"wedge_k/4[1,3]", "vee_k/4[2,4]"}},
         {"tneg", 1, {"(neg x1)", "(neg x2)"}},
         {"fneg", 1, {"(conf x1)", "(conf x2)"}},
         {"ineg", 1, {"x2", "x1"}}});
    g.witnesses.recover["vee_t"] = {{1, "(vee_t x1 x2)"},
                                    {2, "(vee_t x1 x2)"}};
    g.witnesses.recover["wedge_t"] = {{1, "(wedge_t x1 x2)"},
                                      {2, "(wedge_t x1 x2)"}};
    g.witnesses.recover["vee_k"] = {{1, "(vee_f x1 x2)"},
                                    {2, "(vee_f x1 x2)"}};
    g.witnesses.recover["wedge_k"] = {{1, "(wedge_f x1 x2)"},
                                      {2, "(wedge_f x1 x2)"}};
    g.witnesses.recover["neg"] = {{1, "(tneg x1)"}, {2, "(tneg x1)"}};
    g.witnesses.recover["conf"] = {{1, "(fneg x1)"}, {2, "(fneg x1)"}};
    g.witnesses.merge =
        merge_term("vee_f", "wedge_f", "vee_i", "wedge_i", "x1", "x2");
    g.witnesses.permute = {{"21", "(ineg x1)"}};
    put(std::move(g), "trilattices with three involutions over bilattices "
                      "with conflation");
  }
  {
    Duplicator g = make_dup(
        "Gamma_TLtf_4ary", sig_du(), 4, DuplicatorMode::linked,
        {{"vee_t", 2,
          {"vee/8[1,5]", "wedge/8[2,6]", "vee/8[3,7]", "wedge/8[4,8]"}},
         {"wedge_t", 2,
          {"wedge/8[1,5]", "vee/8[2,6]", "wedge/8[3,7]", "vee/8[4,8]"}},
         {"vee_i", 2,
          {"vee/8[1,5]", "vee/8[2,6]", "vee/8[3,7]", "vee/8[4,8]"}},
         {"wedge_i", 2,
          {"wedge/8[1,5]", "wedge/8[2,6]", "wedge/8[3,7]", "wedge/8[4,8]"}},
         {"vee_f", 2,
          {"vee/8[1,5]", "vee/8[2,6]", "wedge/8[3,7]", "wedge/8[4,8]"}},
         {"wedge_f", 2,
          {"wedge/8[1,5]", "wedge/8[2,6]", "vee/8[3,7]", "vee/8[4,8]"}},
         {"tneg", 1, {"x2", "x1", "x4", "x3"}},
         {"fneg", 1, {"x3", "x4", "x1", "x2"}}});
    for (const char* sym : {"vee", "wedge"}) {
      std::string t = std::string("(") + sym + "_i x1 x2)";
      g.witnesses.recover[sym] = {{1, t}, {2, t}, {3, t}, {4, t}};
    }
    std::string vin12 =
        merge_term("vee_i", "wedge_i", "vee_t", "wedge_t", "x1", "x2");
    std::string vin34 =
        merge_term("vee_i", "wedge_i", "vee_t", "wedge_t", "x3", "x4");
    g.witnesses.merge = merge_term("vee_i", "wedge_i", "vee_f", "wedge_f",
                                   vin12, vin34);
    g.witnesses.permute = {
        {"2134",
         apply_merge4(g, g.witnesses.merge,
                      {"(tneg x1)", "(tneg x1)", "x1", "x1"})},
        {"2341",
         apply_merge4(g, g.witnesses.merge,
                      {"(tneg x1)", "(tneg (fneg x1))", "(tneg x1)",
                       "(tneg (fneg x1))"})}};
    put(std::move(g), "four-factor trilattice duplicator over lattices");
  }
  {
    Duplicator g = make_dup(
        "Gamma_TLtfi_4ary", sig_dmu(), 4, DuplicatorMode::linked,
        {{"vee_t", 2,
          {"vee/8[1,5]", "wedge/8[2,6]", "vee/8[3,7]", "wedge/8[4,8]"}},
         {"wedge_t", 2,
          {"wedge/8[1,5]", "vee/8[2,6]", "wedge/8[3,7]", "vee/8[4,8]"}},
         {"vee_f", 2,
          {"vee/8[1,5]", "vee/8[2,6]", "vee/8[3,7]", "vee/8[4,8]"}},
         {"wedge_f", 2,
          {"wedge/8[1,5]", "wedge/8[2,6]", "wedge/8[3,7]", "wedge/8[4,8]"}},
         {"vee_i", 2,
          {"vee/8[1,5]", "vee/8[2,6]", "wedge/8[3,7]", "wedge/8[4,8]"}},
         {"wedge_i", 2,
          {"wedge/8[1,5]", "wedge/8[2,6]", "vee/8[3,7]", "vee/8[4,8]"}},
         {"tneg", 1, {"x2", "x1", "x4", "x3"}},
         {"fneg", 1, {"(sneg x2)", "(sneg x1)", "(sneg x4)", "(sneg x3)"}},
         {"ineg", 1, {"x3", "x4", "x1", "x2"}}});
    for (const char* sym : {"vee", "wedge"}) {
      std::string t = std::string("(") + sym + "_f x1 x2)";
      g.witnesses.recover[sym] = {{1, t}, {2, t}, {3, t}, {4, t}};
    }
    g.witnesses.recover["sneg"] = {{1, "(fneg x1)"},
                                   {2, "(fneg x1)"},
                                   {3, "(fneg x1)"},
                                   {4, "(fneg x1)"}};
    std::string vin12 =
        merge_term("vee_f", "wedge_f", "vee_t", "wedge_t", "x1", "x2");
    std::string vin34 =
        merge_term("vee_f", "wedge_f", "vee_t", "wedge_t", "x3", "x4");
    g.witnesses.merge = merge_term("vee_f", "wedge_f", "vee_i", "wedge_i",
                                   vin12, vin34);
    g.witnesses.permute = {
        {"2134",
         apply_merge4(g, g.witnesses.merge,
                      {"(tneg x1)", "(tneg x1)", "x1", "x1"})},
        {"2341",
         apply_merge4(g, g.witnesses.merge,
                      {"(tneg x1)", "(tneg (ineg x1))", "(tneg x1)",
                       "(tneg (ineg x1))"})}};
    put(std::move(g),
        "four-factor three-involution trilattice duplicator over De Morgan "
        "algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"imp_k", 2, {"imp/4[1,3]", "imp/4[2,4]"}});
    Duplicator g =
        make_dup("Gamma_H", sig_h(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["imp"] = {{1, "(imp_k x1 x2)"}, {2, "(imp_k x1 x2)"}};
    put(std::move(g),
        "bilattices with knowledge implication over Heyting algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"bimp", 2, {"imp/4[1,3]", "wedge/4[1,4]"}});
    Duplicator g =
        make_dup("Gamma_Hprime", sig_h(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["imp"] = {{1, "(bimp x1 x2)"},
                                  {2, "(neg (bimp x1 x2))"}};
    put(std::move(g),
        "implicative-style bilattices over Heyting algebras");
  }
  {
    std::vector<EntrySpec> entries = bilattice_entries();
    entries.push_back({"bimp", 2, {"imp/4[1,3]", "wedge/4[1,4]"}});
    Duplicator g =
        make_dup("Gamma_BR", sig_bru(), 2, DuplicatorMode::linked, entries);
    bl_witnesses(g);
    g.witnesses.recover["imp"] = {{1, "(bimp x1 x2)"},
                                  {2, "(neg (bimp x1 x2))"}};
    put(std::move(g),
        "Brouwerian bilattices over Brouwerian algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"imp_t", 2, {"imp/4[1,3]", "coimp/4[2,4]"}});
    Duplicator g =
        make_dup("Gamma_bH", sig_bh(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["imp"] = {{1, "(imp_t x1 x2)"},
                                  {2, "(neg (imp_t x1 x2))"}};
    g.witnesses.recover["coimp"] = {{1, "(neg (imp_t x1 x2))"},
                                    {2, "(imp_t x1 x2)"}};
    put(std::move(g),
        "bilattices with truth implication over bi-Heyting algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"guard", 2, {"wedge/4[1,3]", "wedge/4[1,4]"}});
    Duplicator g =
        make_dup("Gamma_guard", sig_d(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    put(std::move(g),
        "bilattices with a guard operation over bounded lattices");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"slash", 1, {"(sneg x1)", "x2"}});
    Duplicator g =
        make_dup("Gamma_slash", sig_dm(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["sneg"] = {{1, "(slash x1)"},
                                   {2, "(neg (slash x1))"}};
    put(std::move(g), "bilattices with a consensus-slash operation over "
                      "Kleene algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"imp", 2, {"(vee (cmpl x1) x3)", "wedge/4[1,4]"}});
    Duplicator g =
        make_dup("Gamma_implic", sig_b(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["cmpl"] = {{1, "(imp x1 false_k)"},
                                   {2, "(neg (imp x1 false_k))"}};
    put(std::move(g), "implicative bilattices over Boolean algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"moore", 1, {"x1", "(cmpl x1)"}});
    Duplicator g =
        make_dup("Gamma_L", sig_b(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["cmpl"] = {{1, "(neg (moore x1))"},
                                   {2, "(moore x1)"}};
    put(std::move(g), "bilattices with a Moore-style closure over Boolean "
                      "algebras");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"ld", 2, {"ldiv/4[1,3]", "prod/4[4,1]"}});
    entries.push_back({"rd", 2, {"rdiv/4[1,3]", "prod/4[3,2]"}});
    Duplicator g =
        make_dup("Gamma_RBL", sig_rl(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["prod"] = {{1, "(neg (ld x2 x1))"},
                                   {2, "(ld x2 x1)"}};
    g.witnesses.recover["ldiv"] = {{1, "(ld x1 x2)"},
                                   {2, "(neg (ld x1 x2))"}};
    g.witnesses.recover["rdiv"] = {{1, "(rd x1 x2)"},
                                   {2, "(neg (rd x1 x2))"}};
    put(std::move(g), "residuated bilattices over residuated lattices");
  }
  {
    std::vector<EntrySpec> entries =
        concat(bilattice_entries(), bound_entries());
    entries.push_back({"imp", 2, {"(vee (cmpl x1) x3)", "wedge/4[1,4]"}});
    entries.push_back(
        {"box", 1,
         {"(wedge (boxp x1) (boxm (cmpl x2)))", "(cmpl (boxp (cmpl x2)))"}});
    Duplicator g =
        make_dup("Gamma_MBL", sig_bm(), 2, DuplicatorMode::linked, entries);
    bl_bound_witnesses(g);
    g.witnesses.recover["cmpl"] = {{1, "(imp x1 false_k)"},
                                   {2, "(neg (imp x1 false_k))"}};
    std::string v = merge_term("vee_k", "wedge_k", "vee_t", "wedge_t", "%A",
                               "%B");
    auto splice = [&](const std::string& a, const std::string& b) {
      std::string out = v;
      out.replace(out.find("%A"), 2, a);
      while (out.find("%A") != std::string::npos)
        out.replace(out.find("%A"), 2, a);
      while (out.find("%B") != std::string::npos)
        out.replace(out.find("%B"), 2, b);
      return out;
    };
    g.witnesses.recover["boxp"] = {
        {1, "(box " + splice("x1", "false_k") + ")"},
        {2, "(neg (box " + splice("x1", "false_k") + "))"}};
    g.witnesses.recover["boxm"] = {
        {1, "(box " + splice("true_k", "(neg (imp x1 false_k))") + ")"},
        {2,
         "(neg (box " + splice("true_k", "(neg (imp x1 false_k))") + "))"}};
    put(std::move(g), "modal bilattices over bi-modal Boolean algebras");
  }
  {
    Duplicator g = make_dup(
        "Gamma_preBLu", sig_du(), 2, DuplicatorMode::disjoint,
        {{"vee_t", 2, {"vee/4[1,3]", "wedge/4[2,4]"}},
         {"wedge_t", 2, {"wedge/4[1,3]", "vee/4[2,4]"}},
         {"vee_k", 2, {"vee/4[1,3]", "vee/4[2,4]"}},
         {"wedge_k", 2, {"wedge/4[1,3]", "wedge/4[2,4]"}}});
    g.witnesses.recover["vee"] = {{1, "(vee_k x1 x2)"}, {2, "(vee_k x1 x2)"}};
    g.witnesses.recover["wedge"] = {{1, "(wedge_k x1 x2)"},
                                    {2, "(wedge_k x1 x2)"}};
    g.witnesses.merge =
        merge_term("vee_k", "wedge_k", "vee_t", "wedge_t", "x1", "x2");
    put(std::move(g), "interlaced pre-bilattices as mixed lattice products");
  }
  {
    Duplicator g = make_dup(
        "Gamma_IT", sig_pblu(), 2, DuplicatorMode::disjoint,
        {{"wedge_t", 2, {"wedge_t/4[1,3]", "wedge_t/4[2,4]"}},
         {"vee_t", 2, {"vee_t/4[1,3]", "vee_t/4[2,4]"}},
         {"vee_i", 2, {"vee_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"wedge_i", 2, {"wedge_k/4[1,3]", "vee_k/4[2,4]"}},
         {"wedge_f", 2, {"wedge_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"vee_f", 2, {"vee_k/4[1,3]", "vee_k/4[2,4]"}}});
    g.witnesses.recover["vee_t"] = {{1, "(vee_t x1 x2)"},
                                    {2, "(vee_t x1 x2)"}};
    g.witnesses.recover["wedge_t"] = {{1, "(wedge_t x1 x2)"},
                                      {2, "(wedge_t x1 x2)"}};
    g.witnesses.recover["vee_k"] = {{1, "(vee_f x1 x2)"},
                                    {2, "(vee_f x1 x2)"}};
    g.witnesses.recover["wedge_k"] = {{1, "(wedge_f x1 x2)"},
                                      {2, "(wedge_f x1 x2)"}};
    g.witnesses.merge =
        merge_term("vee_f", "wedge_f", "vee_i", "wedge_i", "x1", "x2");
    put(std::move(g),
        "interlaced trilattices as mixed pre-bilattice products");
  }
  {
    Duplicator g = make_dup(
        "Gamma_ITmt", sig_dbu(), 2, DuplicatorMode::disjoint,
        {{"wedge_t", 2, {"wedge_t/4[1,3]", "wedge_t/4[2,4]"}},
         {"vee_t", 2, {"vee_t/4[1,3]", "vee_t/4[2,4]"}},
         {"vee_i", 2, {"vee_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"wedge_i", 2, {"wedge_k/4[1,3]", "vee_k/4[2,4]"}},
         {"wedge_f", 2, {"wedge_k/4[1,3]", "wedge_k/4[2,4]"}},
         {"vee_f", 2, {"vee_k/4[1,3]", "vee_k/4[2,4]"}},
         {"tneg", 1, {"(neg x1)", "(neg x2)"}}});
    g.witnesses.recover["vee_t"] = {{1, "(vee_t x1 x2)"},
                                    {2, "(vee_t x1 x2)"}};
    g.witnesses.recover["wedge_t"] = {{1, "(wedge_t x1 x2)"},
                                      {2, "(wedge_t x1 x2)"}};
    g.witnesses.recover["vee_k"] = {{1, "(vee_f x1 x2)"},
                                    {2, "(vee_f x1 x2)"}};
    g.witnesses.recover["wedge_k"] = {{1, "(wedge_f x1 x2)"},
                                      {2, "(wedge_f x1 x2)"}};
    g.witnesses.recover["neg"] = {{1, "(tneg x1)"}, {2, "(tneg x1)"}};
    g.witnesses.merge =
        merge_term("vee_f", "wedge_f", "vee_i", "wedge_i", "x1", "x2");
    put(std::move(g), "interlaced trilattices with truth involution as "
                      "mixed bilattice products");
  }
  {
    Duplicator g = make_dup(
        "Gamma_TL_4ary", sig_du(), 4, DuplicatorMode::disjoint,
        {{"vee_t", 2,
          {"vee/8[1,5]", "wedge/8[2,6]", "vee/8[3,7]", "wedge/8[4,8]"}},
         {"wedge_t", 2,
          {"wedge/8[1,5]", "vee/8[2,6]", "wedge/8[3,7]", "vee/8[4,8]"}},
         {"vee_i", 2,
          {"vee/8[1,5]", "vee/8[2,6]", "vee/8[3,7]", "vee/8[4,8]"}},
         {"wedge_i", 2,
          {"wedge/8[1,5]", "wedge/8[2,6]", "wedge/8[3,7]", "wedge/8[4,8]"}},
         {"vee_f", 2,
          {"vee/8[1,5]", "vee/8[2,6]", "wedge/8[3,7]", "wedge/8[4,8]"}},
         {"wedge_f", 2,
          {"wedge/8[1,5]", "wedge/8[2,6]", "vee/8[3,7]", "vee/8[4,8]"}}});
    for (const char* sym : {"vee", "wedge"}) {
      std::string t = std::string("(") + sym + "_i x1 x2)";
      g.witnesses.recover[sym] = {{1, t}, {2, t}, {3, t}, {4, t}};
    }
    std::string vin12 =
        merge_term("vee_i", "wedge_i", "vee_t", "wedge_t", "x1", "x2");
    std::string vin34 =
        merge_term("vee_i", "wedge_i", "vee_t", "wedge_t", "x3", "x4");
    g.witnesses.merge = merge_term("vee_i", "wedge_i", "vee_f", "wedge_f",
                                   vin12, vin34);
    put(std::move(g),
        "involution-free trilattices as four-factor lattice products");
  }
  {
    Duplicator g = make_dup(
        "Gamma_Ex51_1", sig_b(), 2, DuplicatorMode::linked,
        {{"em", 2, {"wedge/4[1,3]", "wedge/4[2,4]"}},
         {"ej", 2, {"vee/4[1,3]", "vee/4[2,4]"}},
         {"en", 1, {"(cmpl x2)", "(cmpl x1)"}},
         {"e0", 0, {"zero", "zero"}},
         {"e1", 0, {"one", "one"}}});
    g.witnesses.recover["vee"] = {{1, "(ej x1 x2)"}, {2, "(ej x1 x2)"}};
    g.witnesses.recover["wedge"] = {{1, "(em x1 x2)"}, {2, "(em x1 x2)"}};
    g.witnesses.recover["zero"] = {{1, "e0"}, {2, "e0"}};
    g.witnesses.recover["one"] = {{1, "e1"}, {2, "e1"}};
    g.witnesses.recover["cmpl"] = {{1, "(en x1)"}, {2, "(en x1)"}};
    put(std::move(g),
        "De Morgan-style duplicator that recovers operations but cannot "
        "swap coordinates");
  }
  {
    Duplicator g = make_dup(
        "Gamma_Ex51_2", sig_b(), 2, DuplicatorMode::linked,
        {{"em", 2, {"wedge/4[1,3]", "vee/4[2,4]"}},
         {"ej", 2, {"vee/4[1,3]", "wedge/4[2,4]"}},
         {"es", 1, {"x2", "x1"}},
         {"e0", 0, {"zero", "one"}},
         {"e1", 0, {"one", "zero"}}});
    g.witnesses.permute = {{"21", "(es x1)"}};
    put(std::move(g),
        "De Morgan-style duplicator that swaps coordinates but cannot "
        "recover complement");
  }
}

void build_suites(Catalog& cat) {
  auto put = [&](AxiomSuite s, const std::string& desc) {
    cat.descriptions["axiom-suite/" + s.key] = desc;
    cat.suites.emplace(s.key, std::move(s));
  };

  {
    AxiomSuite s{"lattice", {}};
    add_lattice(s, "vee", "wedge", "lat");
    put(std::move(s), "lattice laws for vee and wedge");
  }
  {
    AxiomSuite s{"distributive-lattice", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    put(std::move(s), "distributive lattice laws");
  }
  {
    AxiomSuite s{"bounded-distributive-lattice", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    put(std::move(s), "bounded distributive lattice laws");
  }
  {
    AxiomSuite s{"de-morgan", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    add_involution(s, "sneg", "dm");
    add_reverses(s, "sneg", "vee", "wedge", "dm");
    put(std::move(s), "De Morgan algebra laws");
  }
  {
    AxiomSuite s{"de-morgan-unbounded", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_involution(s, "sneg", "dm");
    add_reverses(s, "sneg", "vee", "wedge", "dm");
    put(std::move(s), "De Morgan lattice laws, no bounds");
  }
  {
    AxiomSuite s{"brouwerian", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    s.obligations.push_back(
        Ob::adjoint_law("br:residuum", "wedge", "imp", "wedge", "heyting"));
    put(std::move(s), "Brouwerian algebra laws");
  }
  {
    AxiomSuite s{"kleene", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    add_involution(s, "sneg", "dm");
    add_reverses(s, "sneg", "vee", "wedge", "dm");
    s.obligations.push_back(Ob::identity_law(
        "kleene:normality",
        "(wedge (wedge x1 (sneg x1)) (vee x2 (sneg x2)))",
        "(wedge x1 (sneg x1))"));
    put(std::move(s), "Kleene algebra laws");
  }
  {
    AxiomSuite s{"boolean", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    add_involution(s, "cmpl", "bool");
    s.obligations.push_back(Ob::identity_law(
        "bool:excluded-middle", "(vee x1 (cmpl x1))", "one"));
    s.obligations.push_back(Ob::identity_law(
        "bool:contradiction", "(wedge x1 (cmpl x1))", "zero"));
    put(std::move(s), "Boolean algebra laws");
  }
  {
    AxiomSuite s{"distributive-bilattice", {}};
    add_bilattice_core(s);
    put(std::move(s), "distributive bilattice laws: two lattices, twelve "
                      "distributivities, negation laws");
  }
  {
    AxiomSuite s{"distributive-bilattice-bounded", {}};
    add_bilattice_core(s);
    add_bounds(s, "vee_t", "wedge_t", "false_t", "true_t", "t-bounds");
    add_bounds(s, "vee_k", "wedge_k", "false_k", "true_k", "k-bounds");
    put(std::move(s), "bounded distributive bilattice laws");
  }
  {
    AxiomSuite s{"conflation", {}};
    add_bilattice_core(s);
    add_involution(s, "conf", "conf");
    add_preserves(s, "conf", "vee_t", "wedge_t", "conf");
    add_reverses(s, "conf", "vee_k", "wedge_k", "conf");
    add_commute(s, "conf", "neg", "conf");
    put(std::move(s), "bilattice-with-conflation laws");
  }
  {
    AxiomSuite s{"trilattice-tf", {}};
    add_trilattice_lattices(s);
    add_involution(s, "tneg", "tneg");
    add_reverses(s, "tneg", "vee_t", "wedge_t", "tneg");
    add_preserves(s, "tneg", "vee_f", "wedge_f", "tneg");
    add_preserves(s, "tneg", "vee_i", "wedge_i", "tneg");
    add_involution(s, "fneg", "fneg");
    add_reverses(s, "fneg", "vee_f", "wedge_f", "fneg");
    add_preserves(s, "fneg", "vee_t", "wedge_t", "fneg");
    add_preserves(s, "fneg", "vee_i", "wedge_i", "fneg");
    add_commute(s, "tneg", "fneg", "inv");
    put(std::move(s),
        "distributive trilattice with truth and falsity involutions");
  }
  {
    AxiomSuite s{"trilattice-tfi", {}};
    add_trilattice_lattices(s);
    add_involution(s, "tneg", "tneg");
    add_reverses(s, "tneg", "vee_t", "wedge_t", "tneg");
    add_preserves(s, "tneg", "vee_f", "wedge_f", "tneg");
    add_preserves(s, "tneg", "vee_i", "wedge_i", "tneg");
    add_involution(s, "fneg", "fneg");
    add_reverses(s, "fneg", "vee_f", "wedge_f", "fneg");
    add_preserves(s, "fneg", "vee_t", "wedge_t", "fneg");
    add_involution(s, "ineg", "ineg");
    add_reverses(s, "ineg", "vee_i", "wedge_i", "ineg");
    add_preserves(s, "ineg", "vee_t", "wedge_t", "ineg");
    add_preserves(s, "ineg", "vee_f", "wedge_f", "ineg");
    add_commute(s, "tneg", "fneg", "inv");
    add_commute(s, "tneg", "ineg", "inv");
    add_commute(s, "fneg", "ineg", "inv");
    put(std::move(s),
        "distributive trilattice with three pairwise-commuting involutions");
  }
  {
    AxiomSuite s{"trilattice-t", {}};
    add_trilattice_lattices(s);
    add_involution(s, "tneg", "tneg");
    add_reverses(s, "tneg", "vee_t", "wedge_t", "tneg");
    add_preserves(s, "tneg", "vee_f", "wedge_f", "tneg");
    add_preserves(s, "tneg", "vee_i", "wedge_i", "tneg");
    put(std::move(s), "distributive trilattice with truth involution");
  }
  {
    AxiomSuite s{"distributive-trilattice", {}};
    add_trilattice_lattices(s);
    put(std::move(s), "distributive trilattice lattice laws");
  }
  {
    AxiomSuite s{"interlaced-prebilattice", {}};
    add_lattice(s, "vee_t", "wedge_t", "t");
    add_lattice(s, "vee_k", "wedge_k", "k");
    for (const char* op : {"vee_t", "wedge_t", "vee_k", "wedge_k"}) {
      s.obligations.push_back(
          Ob::monotone_law(std::string("mono:") + op + ":t", op, "wedge_t"));
      s.obligations.push_back(
          Ob::monotone_law(std::string("mono:") + op + ":k", op, "wedge_k"));
    }
    put(std::move(s), "pre-bilattice with interlacing monotonicities");
  }
  {
    AxiomSuite s{"interlaced-bilattice", {}};
    add_lattice(s, "vee_t", "wedge_t", "t");
    add_lattice(s, "vee_k", "wedge_k", "k");
    for (const char* op : {"vee_t", "wedge_t", "vee_k", "wedge_k"}) {
      s.obligations.push_back(
          Ob::monotone_law(std::string("mono:") + op + ":t", op, "wedge_t"));
      s.obligations.push_back(
          Ob::monotone_law(std::string("mono:") + op + ":k", op, "wedge_k"));
    }
    add_involution(s, "neg", "neg");
    add_reverses(s, "neg", "vee_t", "wedge_t", "neg");
    add_preserves(s, "neg", "vee_k", "wedge_k", "neg");
    put(std::move(s), "interlaced bilattice laws with negation");
  }
  {
    AxiomSuite s{"interlaced-trilattice", {}};
    add_lattice(s, "vee_t", "wedge_t", "t");
    add_lattice(s, "vee_f", "wedge_f", "f");
    add_lattice(s, "vee_i", "wedge_i", "i");
    for (const char* op :
         {"vee_t", "wedge_t", "vee_f", "wedge_f", "vee_i", "wedge_i"})
      for (const char* ord : {"wedge_t", "wedge_f", "wedge_i"})
        s.obligations.push_back(Ob::monotone_law(
            std::string("mono:") + op + ":" + ord, op, ord));
    put(std::move(s), "trilattice with all interlacing monotonicities");
  }
  {
    AxiomSuite s{"interlaced-trilattice-t", {}};
    add_lattice(s, "vee_t", "wedge_t", "t");
    add_lattice(s, "vee_f", "wedge_f", "f");
    add_lattice(s, "vee_i", "wedge_i", "i");
    for (const char* op :
         {"vee_t", "wedge_t", "vee_f", "wedge_f", "vee_i", "wedge_i"})
      for (const char* ord : {"wedge_t", "wedge_f", "wedge_i"})
        s.obligations.push_back(Ob::monotone_law(
            std::string("mono:") + op + ":" + ord, op, ord));
    add_involution(s, "tneg", "tneg");
    add_reverses(s, "tneg", "vee_t", "wedge_t", "tneg");
    add_preserves(s, "tneg", "vee_f", "wedge_f", "tneg");
    add_preserves(s, "tneg", "vee_i", "wedge_i", "tneg");
    put(std::move(s), "interlaced trilattice with truth involution");
  }
  {
    AxiomSuite s{"bilattice-k-implication", {}};
    add_bilattice_core(s);
    add_bounds(s, "vee_t", "wedge_t", "false_t", "true_t", "t-bounds");
    add_bounds(s, "vee_k", "wedge_k", "false_k", "true_k", "k-bounds");
    s.obligations.push_back(Ob::adjoint_law("impk:residuum", "wedge_k",
                                            "imp_k", "wedge_k", "heyting"));
    put(std::move(s),
        "bounded distributive bilattice with knowledge residuum");
  }
  {
    AxiomSuite s{"bilattice-t-implication", {}};
    add_bilattice_core(s);
    add_bounds(s, "vee_t", "wedge_t", "false_t", "true_t", "t-bounds");
    add_bounds(s, "vee_k", "wedge_k", "false_k", "true_k", "k-bounds");
    s.obligations.push_back(Ob::adjoint_law("impt:residuum", "wedge_t",
                                            "imp_t", "wedge_t", "heyting"));
    put(std::move(s), "bounded distributive bilattice with truth residuum");
  }
  {
    AxiomSuite s{"heyting", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    s.obligations.push_back(
        Ob::adjoint_law("heyting:residuum", "wedge", "imp", "wedge",
                        "heyting"));
    put(std::move(s), "Heyting algebra laws with residuation");
  }
  {
    AxiomSuite s{"bi-heyting", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    s.obligations.push_back(
        Ob::adjoint_law("bih:residuum", "wedge", "imp", "wedge", "heyting"));
    s.obligations.push_back(
        Ob::adjoint_law("bih:coresiduum", "vee", "coimp", "wedge", "co"));
    put(std::move(s), "bi-Heyting algebra laws with both adjoints");
  }
  {
    AxiomSuite s{"residuated", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    s.obligations.push_back(Ob::identity_law(
        "res:prod-assoc", "(prod (prod x1 x2) x3)", "(prod x1 (prod x2 x3))"));
    s.obligations.push_back(
        Ob::adjoint_law("res:left", "prod", "ldiv", "wedge", "left"));
    s.obligations.push_back(
        Ob::adjoint_law("res:right", "prod", "rdiv", "wedge", "right"));
    put(std::move(s), "bounded residuated lattice laws");
  }
  {
    AxiomSuite s{"bimodal", {}};
    add_lattice(s, "vee", "wedge", "lat");
    add_distributivity(s, {"vee", "wedge"}, "dist");
    add_bounds(s, "vee", "wedge", "zero", "one", "bounds");
    add_involution(s, "cmpl", "bool");
    s.obligations.push_back(Ob::identity_law(
        "bool:excluded-middle", "(vee x1 (cmpl x1))", "one"));
    s.obligations.push_back(Ob::identity_law(
        "bool:contradiction", "(wedge x1 (cmpl x1))", "zero"));
    for (const char* box : {"boxp", "boxm"}) {
      s.obligations.push_back(Ob::identity_law(
          std::string(box) + ":top", std::string("(") + box + " one)", "one"));
      s.obligations.push_back(Ob::identity_law(
          std::string(box) + ":meet",
          std::string("(") + box + " (wedge x1 x2))",
          std::string("(wedge (") + box + " x1) (" + box + " x2))"));
    }
    put(std::move(s), "bi-modal Boolean algebra laws");
  }
  {
    AxiomSuite s{"modal-bilattice", {}};
    add_bilattice_core(s);
    add_bounds(s, "vee_t", "wedge_t", "false_t", "true_t", "t-bounds");
    add_bounds(s, "vee_k", "wedge_k", "false_k", "true_k", "k-bounds");
    s.obligations.push_back(
        Ob::identity_law("box:top", "(box true_t)", "true_t"));
    s.obligations.push_back(Ob::identity_law(
        "box:meet", "(box (wedge_t x1 x2))",
        "(wedge_t (box x1) (box x2))"));
    s.obligations.push_back(Ob::identity_law(
        "box:guard", "(box (imp false_k x1))", "(imp false_k (box x1))"));
    put(std::move(s), "modal bilattice box laws over the bounded bilattice "
                      "base");
  }
}

const Catalog& the_catalog() {
  static const Catalog cat = [] {
    Catalog c;
    build_algebras(c);
    build_duplicators(c);
    build_derived_algebras(c);
    build_suites(c);
    for (const auto& [key, alg] : c.algebras) alg.validate();
    return c;
  }();
  return cat;
}

}  // namespace

const FiniteAlgebra& catalog_algebra(const std::string& key) {
  const Catalog& cat = the_catalog();
  std::string canonical = key == "2chain" ? "2Du" : key;
  auto it = cat.algebras.find(canonical);
  if (it == cat.algebras.end())
    throw DomainError("unknown catalog algebra '" + key + "'");
  return it->second;
}

const Duplicator& catalog_duplicator(const std::string& key) {
  const Catalog& cat = the_catalog();
  auto it = cat.duplicators.find(key);
  if (it == cat.duplicators.end())
    throw DomainError("unknown catalog duplicator '" + key + "'");
  return it->second;
}

const AxiomSuite& catalog_axiom_suite(const std::string& key) {
  const Catalog& cat = the_catalog();
  auto it = cat.suites.find(key);
  if (it == cat.suites.end())
    throw DomainError("unknown catalog axiom suite '" + key + "'");
  return it->second;
}

bool catalog_has_algebra(const std::string& key) {
  const Catalog& cat = the_catalog();
  return cat.algebras.count(key == "2chain" ? "2Du" : key) > 0;
}

bool catalog_has_duplicator(const std::string& key) {
  return the_catalog().duplicators.count(key) > 0;
}

std::vector<CatalogInfo> catalog_list(const std::string& kind) {
  const Catalog& cat = the_catalog();
  std::vector<CatalogInfo> out;
  auto add = [&](const std::string& k, const std::string& key) {
    if (!kind.empty() && kind != k) return;
    auto it = cat.descriptions.find(k + "/" + key);
    out.push_back({key, k, it == cat.descriptions.end() ? "" : it->second});
  };
  for (const auto& [key, alg] : cat.algebras) add("algebra", key);
  for (const auto& [key, g] : cat.duplicators) add("duplicator", key);
  for (const auto& [key, s] : cat.suites) add("axiom-suite", key);
  std::sort(out.begin(), out.end(),
            [](const CatalogInfo& a, const CatalogInfo& b) {
              return std::tie(a.kind, a.key) < std::tie(b.kind, b.key);
            });
  return out;
}

}  // namespace dupcalc
