#include "dupcalc/conditions.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "dupcalc/error.hpp"
#include "dupcalc/ops.hpp"

namespace dupcalc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "unknown";
  }
}

namespace {

Verdict aggregate(const std::vector<Obligation>& obligations) {
  Verdict out = Verdict::pass;
  for (const Obligation& o : obligations) {
    if (o.verdict == Verdict::fail) return Verdict::fail;
    if (o.verdict == Verdict::unknown) out = Verdict::unknown;
  }
  return out;
}

std::string render_assignment(const FiniteAlgebra& alg,
                              const std::vector<Element>& assignment) {
  std::string out = "[";
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (i) out += ",";
    out += alg.label_of(assignment[i]);
  }
  return out + "]";
}

// Exhaustive lhs = rhs over every member; empty string on success.
std::string check_over_members(const std::vector<FiniteAlgebra>& members,
                               const Term& lhs, const Term& rhs) {
  for (const FiniteAlgebra& n : members) {
    IdentityCheck c = check_identity(n, lhs, rhs);
    if (!c.holds)
      return "fails on " + n.name + " at " +
             render_assignment(n, c.counterexample);
  }
  return "";
}

// Rewrites a diagonal evaluation: base variable m(i-1)+j denotes
// coordinate j of the duplicated variable x_i, which on diagonal
// inputs equals the base value a_i regardless of j.
Term diagonal_collapse(const Term& t, int m) {
  if (t.is_variable()) return Term::variable((t.var - 1) / m + 1);
  std::vector<Term> args;
  args.reserve(t.children.size());
  for (const Term& c : t.children) args.push_back(diagonal_collapse(c, m));
  return Term::apply(t.symbol, std::move(args));
}

Term symbol_applied_to_variables(const std::string& sym, int arity) {
  std::vector<Term> args;
  for (int i = 1; i <= arity; ++i) args.push_back(Term::variable(i));
  return Term::apply(sym, std::move(args));
}

// ---- exact closure search ----------------------------------------------

struct ClosureResult {
  std::vector<std::vector<Element>> states;  // concatenated member tables
  std::vector<Term> terms;                   // minimal witnesses
  bool complete = false;
  int hit = -1;
};

struct Layout {
  std::vector<long long> dom;     // domain size per member
  std::vector<long long> offset;  // state offset per member
  long long total = 0;
};

Layout make_layout(const std::vector<FiniteAlgebra>& members, int m, int k,
                   Restriction restriction) {
  Layout lay;
  for (const FiniteAlgebra& n : members) {
    long long point = 1;
    if (restriction == Restriction::diagonal) {
      for (int i = 0; i < k; ++i) point *= n.size;
    } else {
      long long cube = 1;
      for (int j = 0; j < m; ++j) cube *= n.size;
      for (int i = 0; i < k; ++i) point *= cube;
    }
    lay.offset.push_back(lay.total);
    lay.dom.push_back(point);
    lay.total += point;
  }
  return lay;
}

ClosureResult grow_closure(
    const Duplicator& g, const std::vector<FiniteAlgebra>& members, int k,
    Restriction restriction,
    const std::function<bool(const std::vector<Element>&)>* accept,
    const SearchBudget& budget) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  auto timed_out = [&] {
    if (budget.millis <= 0) return false;
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               Clock::now() - start)
               .count() > budget.millis;
  };

  int m = g.m;
  Layout lay = make_layout(members, m, k, restriction);

  ClosureResult out;
  std::set<std::vector<Element>> seen;
  auto try_add = [&](std::vector<Element> state, Term term) -> bool {
    auto [it, fresh] = seen.emplace(std::move(state));
    if (!fresh) return false;
    out.states.push_back(*it);
    out.terms.push_back(std::move(term));
    if (accept && out.hit < 0 && (*accept)(out.states.back()))
      out.hit = static_cast<int>(out.states.size()) - 1;
    return true;
  };

  // Projections.  Diagonal: x_i maps assignment (a_1..a_k) to the
  // constant tuple (a_i,..,a_i); full: to the i-th argument itself.
  for (int i = 1; i <= k; ++i) {
    std::vector<Element> state(lay.total);
    for (size_t mi = 0; mi < members.size(); ++mi) {
      const FiniteAlgebra& n = members[mi];
      long long cube = 1;
      for (int j = 0; j < m; ++j) cube *= n.size;
      for (long long d = 0; d < lay.dom[mi]; ++d) {
        long long rest = d;
        if (restriction == Restriction::diagonal) {
          // extract a_i (leftmost argument most significant)
          long long div = 1;
          for (int t = i; t < k; ++t) div *= n.size;
          Element ai = static_cast<Element>(rest / div % n.size);
          long long v = 0;
          for (int j = 0; j < m; ++j) v = v * n.size + ai;
          state[lay.offset[mi] + d] = static_cast<Element>(v);
        } else {
          long long div = 1;
          for (int t = i; t < k; ++t) div *= cube;
          state[lay.offset[mi] + d] =
              static_cast<Element>(rest / div % cube);
        }
      }
    }
    try_add(std::move(state), Term::variable(i));
    if (out.hit >= 0) return out;
  }

  // Nullary entries contribute constant functions once.
  for (const DuplicatorEntry& entry : g.entries) {
    if (entry.gamma_arity != 0) continue;
    std::vector<Element> state(lay.total);
    for (size_t mi = 0; mi < members.size(); ++mi) {
      const FiniteAlgebra& n = members[mi];
      long long v = 0;
      for (int j = 0; j < m; ++j)
        v = v * n.size + eval_term(entry.terms[j], n, {});
      for (long long d = 0; d < lay.dom[mi]; ++d)
        state[lay.offset[mi] + d] = static_cast<Element>(v);
    }
    try_add(std::move(state), Term::apply(entry.name, {}));
    if (out.hit >= 0) return out;
  }

  // Breadth-first waves: a state of depth d+1 applies some entry to
  // arguments of depth <= d, at least one of depth exactly d.
  size_t wave_start = 0;
  std::vector<Element> base_assign;
  std::vector<std::vector<Element>> arg_coords;
  while (true) {
    size_t wave_end = out.states.size();
    if (wave_start == wave_end) break;
    bool grew = false;
    for (const DuplicatorEntry& entry : g.entries) {
      int n_args = entry.gamma_arity;
      if (n_args == 0) continue;
      std::vector<size_t> idx(n_args, 0);
      while (true) {
        bool fresh = false;
        for (size_t i : idx)
          if (i >= wave_start) fresh = true;
        if (fresh) {
          std::vector<Element> state(lay.total);
          for (size_t mi = 0; mi < members.size(); ++mi) {
            const FiniteAlgebra& n = members[mi];
            base_assign.assign(static_cast<size_t>(m) * n_args, 0);
            for (long long d = 0; d < lay.dom[mi]; ++d) {
              for (int i = 0; i < n_args; ++i) {
                long long v = out.states[idx[i]][lay.offset[mi] + d];
                for (int j = m - 1; j >= 0; --j) {
                  base_assign[static_cast<size_t>(m) * i + j] =
                      static_cast<Element>(v % n.size);
                  v /= n.size;
                }
              }
              long long r = 0;
              for (int j = 0; j < m; ++j)
                r = r * n.size + eval_term(entry.terms[j], n, base_assign);
              state[lay.offset[mi] + d] = static_cast<Element>(r);
            }
          }
          std::vector<Term> children;
          for (int i = 0; i < n_args; ++i) children.push_back(out.terms[idx[i]]);
          if (try_add(std::move(state),
                      Term::apply(entry.name, std::move(children))))
            grew = true;
          if (out.hit >= 0) return out;
          if (static_cast<long long>(out.states.size()) >
                  budget.function_cap ||
              timed_out())
            return out;  // incomplete
        }
        int i = n_args - 1;
        while (i >= 0 && idx[i] == wave_end - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
      }
    }
    wave_start = wave_end;
    if (!grew) break;
  }
  out.complete = true;
  return out;
}

}  // namespace

SearchResult clone_search_predicate(
    const Duplicator& g, const std::vector<FiniteAlgebra>& members, int k,
    Restriction restriction,
    const std::function<bool(const std::vector<Element>&)>& accept,
    const SearchBudget& budget) {
  ClosureResult closure =
      grow_closure(g, members, k, restriction, &accept, budget);
  SearchResult out;
  out.functions_explored = static_cast<long long>(closure.states.size());
  if (closure.hit >= 0) {
    out.outcome = SearchOutcome::found;
    out.witness = closure.terms[closure.hit];
  } else if (closure.complete) {
    out.outcome = SearchOutcome::exhausted;
  } else {
    out.outcome = SearchOutcome::capped;
  }
  return out;
}

SearchResult clone_search(const Duplicator& g,
                          const std::vector<FiniteAlgebra>& members, int k,
                          Restriction restriction,
                          const std::vector<std::vector<Element>>& target,
                          const SearchBudget& budget) {
  Layout lay = make_layout(members, g.m, k, restriction);
  if (target.size() != members.size())
    throw DomainError("clone_search: one target table per member required");
  for (size_t mi = 0; mi < members.size(); ++mi)
    if (static_cast<long long>(target[mi].size()) != lay.dom[mi])
      throw DomainError("clone_search: target table has wrong domain size");
  auto accept = [&](const std::vector<Element>& state) {
    for (size_t mi = 0; mi < members.size(); ++mi)
      for (long long d = 0; d < lay.dom[mi]; ++d)
        if (state[lay.offset[mi] + d] != target[mi][d]) return false;
    return true;
  };
  return clone_search_predicate(g, members, k, restriction, accept, budget);
}

// ---- condition checks --------------------------------------------------

namespace {

void require_members(const Duplicator& g,
                     const std::vector<FiniteAlgebra>& members) {
  if (members.empty()) throw DomainError("condition check: empty base class");
  for (const FiniteAlgebra& n : members)
    if (!(n.sig == g.base_sig))
      throw DomainError("condition check: member '" + n.name +
                        "' does not match the base signature");
}

// Verifies one recovery witness: coordinate `coord` of `gterm` on
// diagonal inputs equals `sym` on every member.
std::string verify_recovery(const Duplicator& g,
                            const std::vector<FiniteAlgebra>& members,
                            const std::string& sym, int coord,
                            const Term& gterm) {
  int r = g.base_sig.arity(sym);
  if (free_variable_span(gterm) > r)
    return "witness uses more than " + std::to_string(r) + " variables";
  Term lhs = diagonal_collapse(expand_gamma(g, gterm, coord), g.m);
  Term rhs = symbol_applied_to_variables(sym, r);
  return check_over_members(members, lhs, rhs);
}

std::vector<Element> diagonal_target_for(const FiniteAlgebra& n,
                                         const std::string& sym, int m) {
  int r = n.sig.arity(sym);
  std::vector<Element> tab;
  for_each_tuple(n.size, r, [&](std::span<const Element> args) {
    tab.push_back(n.apply(sym, args));
  });
  (void)m;
  return tab;
}

}  // namespace

ConditionReport check_condition_L(const Duplicator& g,
                                  const std::vector<FiniteAlgebra>& members,
                                  CheckMode mode, const SearchBudget& budget,
                                  bool existential) {
  require_members(g, members);
  ConditionReport rep;
  rep.condition = existential ? "Lprime" : "L";
  Signature gsig = gamma_signature(g);

  if (mode == CheckMode::witness) {
    for (const auto& [sym, arity] : g.base_sig.symbols) {
      auto it = g.witnesses.recover.find(sym);
      const std::map<int, std::string> empty;
      const std::map<int, std::string>& per_coord =
          it == g.witnesses.recover.end() ? empty : it->second;
      if (existential) {
        Obligation o;
        o.id = "L':" + sym;
        o.verdict = Verdict::fail;
        o.detail = "no verifying witness coordinate";
        for (const auto& [coord, text] : per_coord) {
          Term gterm = parse_term(text, gsig);
          std::string err = verify_recovery(g, members, sym, coord, gterm);
          if (err.empty()) {
            o.verdict = Verdict::pass;
            o.witness = text;
            o.detail = "coordinate " + std::to_string(coord);
            break;
          }
          o.detail = err;
        }
        rep.obligations.push_back(std::move(o));
      } else {
        for (int coord = 1; coord <= g.m; ++coord) {
          Obligation o;
          o.id = "L:" + sym + ":" + std::to_string(coord);
          auto ct = per_coord.find(coord);
          if (ct == per_coord.end()) {
            o.verdict = Verdict::fail;
            o.detail = "no witness provided";
          } else {
            Term gterm = parse_term(ct->second, gsig);
            std::string err = verify_recovery(g, members, sym, coord, gterm);
            if (err.empty()) {
              o.verdict = Verdict::pass;
              o.witness = ct->second;
            } else {
              o.verdict = Verdict::fail;
              o.detail = err;
            }
          }
          rep.obligations.push_back(std::move(o));
        }
      }
      (void)arity;
    }
    rep.verdict = aggregate(rep.obligations);
    return rep;
  }

  // Search mode: one diagonal closure per base-symbol arity, scanned
  // for each obligation.
  std::map<int, ClosureResult> closures;
  for (const auto& [sym, arity] : g.base_sig.symbols)
    if (!closures.count(arity))
      closures.emplace(arity, grow_closure(g, members, arity,
                                           Restriction::diagonal, nullptr,
                                           budget));
  for (const auto& [sym, arity] : g.base_sig.symbols) {
    const ClosureResult& closure = closures.at(arity);
    rep.functions_explored = std::max(
        rep.functions_explored, static_cast<long long>(closure.states.size()));
    Layout lay = make_layout(members, g.m, arity, Restriction::diagonal);
    std::vector<std::vector<Element>> want;
    for (const FiniteAlgebra& n : members)
      want.push_back(diagonal_target_for(n, sym, g.m));
    // matches(state, coord): coordinate `coord` equals the symbol on
    // the diagonal for every member.
    auto matches = [&](const std::vector<Element>& state, int coord) {
      for (size_t mi = 0; mi < members.size(); ++mi) {
        const FiniteAlgebra& n = members[mi];
        long long shift = 1;
        for (int j = coord; j < g.m; ++j) shift *= n.size;
        for (long long d = 0; d < lay.dom[mi]; ++d)
          if (state[lay.offset[mi] + d] / shift % n.size != want[mi][d])
            return false;
      }
      return true;
    };
    auto scan = [&](int coord) -> int {
      for (size_t s = 0; s < closure.states.size(); ++s)
        if (matches(closure.states[s], coord)) return static_cast<int>(s);
      return -1;
    };
    if (existential) {
      Obligation o;
      o.id = "L':" + sym;
      int best = -1, best_coord = 0;
      for (int coord = 1; coord <= g.m; ++coord) {
        int s = scan(coord);
        if (s >= 0 && (best < 0 || s < best)) {
          best = s;
          best_coord = coord;
        }
      }
      if (best >= 0) {
        o.verdict = Verdict::pass;
        o.witness = render_term(closure.terms[best]);
        o.detail = "coordinate " + std::to_string(best_coord);
      } else if (closure.complete) {
        o.verdict = Verdict::fail;
        o.detail = "exhausted diagonal closure of " +
                   std::to_string(closure.states.size()) +
                   " functions, no coordinate recovers the symbol";
      } else {
        o.verdict = Verdict::unknown;
        o.detail = "search capped at " +
                   std::to_string(closure.states.size()) + " functions";
      }
      rep.obligations.push_back(std::move(o));
    } else {
      for (int coord = 1; coord <= g.m; ++coord) {
        Obligation o;
        o.id = "L:" + sym + ":" + std::to_string(coord);
        int s = scan(coord);
        if (s >= 0) {
          o.verdict = Verdict::pass;
          o.witness = render_term(closure.terms[s]);
        } else if (closure.complete) {
          o.verdict = Verdict::fail;
          o.detail = "exhausted diagonal closure of " +
                     std::to_string(closure.states.size()) + " functions";
        } else {
          o.verdict = Verdict::unknown;
          o.detail = "search capped at " +
                     std::to_string(closure.states.size()) + " functions";
        }
        rep.obligations.push_back(std::move(o));
      }
    }
  }
  rep.verdict = aggregate(rep.obligations);
  return rep;
}

ConditionReport check_condition_M(const Duplicator& g,
                                  const std::vector<FiniteAlgebra>& members,
                                  CheckMode mode, const SearchBudget& budget) {
  require_members(g, members);
  ConditionReport rep;
  rep.condition = "M";
  if (g.m == 1) {
    rep.obligations.push_back({"M", Verdict::pass, "", "trivial at m=1"});
    rep.verdict = Verdict::pass;
    return rep;
  }
  if (mode == CheckMode::witness) {
    Obligation o;
    o.id = "M";
    if (g.witnesses.merge.empty()) {
      o.verdict = Verdict::fail;
      o.detail = "no witness provided";
    } else {
      Term v = parse_term(g.witnesses.merge, gamma_signature(g));
      if (free_variable_span(v) > g.m) {
        o.verdict = Verdict::fail;
        o.detail = "witness is not m-ary";
      } else {
        o.verdict = Verdict::pass;
        o.witness = g.witnesses.merge;
        for (int j = 1; j <= g.m && o.verdict == Verdict::pass; ++j) {
          // Coordinate j of v(a^1,..,a^m) must be coordinate j of a^j,
          // i.e. base variable m(j-1)+j.
          Term lhs = expand_gamma(g, v, j);
          Term rhs = Term::variable(g.m * (j - 1) + j);
          std::string err = check_over_members(members, lhs, rhs);
          if (!err.empty()) {
            o.verdict = Verdict::fail;
            o.detail = "coordinate " + std::to_string(j) + " " + err;
            o.witness.clear();
          }
        }
      }
    }
    rep.obligations.push_back(std::move(o));
    rep.verdict = aggregate(rep.obligations);
    return rep;
  }

  // Search mode: full-function closure at arity m, exact target.
  std::vector<std::vector<Element>> target;
  Layout lay = make_layout(members, g.m, g.m, Restriction::full);
  for (size_t mi = 0; mi < members.size(); ++mi) {
    const FiniteAlgebra& n = members[mi];
    long long cube = 1;
    for (int j = 0; j < g.m; ++j) cube *= n.size;
    std::vector<Element> tab(lay.dom[mi]);
    for (long long d = 0; d < lay.dom[mi]; ++d) {
      // decode m arguments, each a flattened m-tuple
      long long rest = d, r = 0;
      std::vector<long long> args(g.m);
      for (int i = g.m - 1; i >= 0; --i) {
        args[i] = rest % cube;
        rest /= cube;
      }
      for (int j = 0; j < g.m; ++j) {
        long long shift = 1;
        for (int t = j + 1; t < g.m; ++t) shift *= n.size;
        r = r * n.size + args[j] / shift % n.size;
      }
      tab[d] = static_cast<Element>(r);
    }
    target.push_back(std::move(tab));
  }
  SearchResult sr =
      clone_search(g, members, g.m, Restriction::full, target, budget);
  rep.functions_explored = sr.functions_explored;
  Obligation o;
  o.id = "M";
  if (sr.outcome == SearchOutcome::found) {
    o.verdict = Verdict::pass;
    o.witness = render_term(sr.witness);
  } else if (sr.outcome == SearchOutcome::exhausted) {
    o.verdict = Verdict::fail;
    o.detail = "exhausted full closure of " +
               std::to_string(sr.functions_explored) + " functions";
  } else {
    o.verdict = Verdict::unknown;
    o.detail = "search capped at " + std::to_string(sr.functions_explored) +
               " functions";
  }
  rep.obligations.push_back(std::move(o));
  rep.verdict = aggregate(rep.obligations);
  return rep;
}

namespace {

std::vector<std::string> all_permutations(int m) {
  std::string id;
  for (int j = 1; j <= m; ++j) id += static_cast<char>('0' + j);
  std::vector<std::string> out;
  std::string p = id;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// One-line composition: (sigma . tau)(j) = sigma(tau(j)).
std::string compose_perm(const std::string& sigma, const std::string& tau) {
  std::string out = tau;
  for (size_t j = 0; j < tau.size(); ++j) out[j] = sigma[tau[j] - '1'];
  return out;
}

}  // namespace

ConditionReport check_condition_P(const Duplicator& g,
                                  const std::vector<FiniteAlgebra>& members,
                                  CheckMode mode, const SearchBudget& budget) {
  require_members(g, members);
  ConditionReport rep;
  rep.condition = "P";
  if (g.m == 1) {
    rep.obligations.push_back({"P", Verdict::pass, "", "trivial at m=1"});
    rep.verdict = Verdict::pass;
    return rep;
  }
  std::vector<std::string> perms = all_permutations(g.m);
  std::string identity = perms.front();
  for (const std::string& p : perms)
    if (std::is_sorted(p.begin(), p.end())) identity = p;

  if (mode == CheckMode::witness) {
    // Verify provided generators, then compose to cover all of S_m.
    Signature gsig = gamma_signature(g);
    std::map<std::string, Term> realized;
    realized[identity] = Term::variable(1);
    std::vector<std::pair<std::string, Term>> gens;
    for (const auto& [perm, text] : g.witnesses.permute) {
      Term t = parse_term(text, gsig);
      Obligation o;
      o.id = "P:" + perm;
      if (free_variable_span(t) > 1) {
        o.verdict = Verdict::fail;
        o.detail = "witness is not unary";
        rep.obligations.push_back(std::move(o));
        continue;
      }
      // Coordinate j of s(a) must be a_{sigma(j)}.
      std::string err;
      for (int j = 1; j <= g.m && err.empty(); ++j) {
        Term lhs = expand_gamma(g, t, j);
        Term rhs = Term::variable(perm[j - 1] - '0');
        err = check_over_members(members, lhs, rhs);
      }
      if (!err.empty()) {
        o.verdict = Verdict::fail;
        o.detail = err;
        rep.obligations.push_back(std::move(o));
        continue;
      }
      o.verdict = Verdict::pass;
      o.witness = text;
      rep.obligations.push_back(std::move(o));
      gens.emplace_back(perm, t);
      realized.emplace(perm, t);
    }
    if (aggregate(rep.obligations) == Verdict::fail) {
      rep.verdict = Verdict::fail;
      return rep;
    }
    // A term realizing sigma substituted into one realizing tau realizes
    // the composite, so the remaining permutations only need a group
    // closure over the verified generators.  Composing the terms
    // themselves can grow them exponentially; record recipes instead.
    std::map<std::string, std::string> recipes;
    recipes[identity] = "x1";
    for (const auto& [perm, t] : gens) recipes[perm] = "p" + perm + "(x1)";
    bool grew = true;
    while (grew && recipes.size() < perms.size()) {
      grew = false;
      std::vector<std::pair<std::string, std::string>> snapshot(
          recipes.begin(), recipes.end());
      for (const auto& [sigma, recipe] : snapshot)
        for (const auto& [tau, tg] : gens) {
          // tg applied after sigma's term realizes j -> sigma(tau(j)).
          std::string comp = compose_perm(sigma, tau);
          if (!recipes.count(comp)) {
            std::string inner = recipe;
            std::string r = "p" + tau + "(x1)";
            r.replace(r.find("x1"), 2, inner);
            recipes.emplace(comp, std::move(r));
            grew = true;
          }
        }
    }
    for (const std::string& perm : perms) {
      if (perm == identity || g.witnesses.permute.count(perm)) continue;
      auto it = recipes.find(perm);
      Obligation o;
      o.id = "P:" + perm;
      if (it == recipes.end()) {
        o.verdict = Verdict::fail;
        o.detail = "not generated by the provided witnesses";
      } else {
        o.verdict = Verdict::pass;
        o.witness = it->second;
        o.detail = "composed from verified generators";
      }
      rep.obligations.push_back(std::move(o));
    }
    rep.verdict = aggregate(rep.obligations);
    return rep;
  }

  // Search mode: one unary full closure, scanned per permutation.
  ClosureResult closure =
      grow_closure(g, members, 1, Restriction::full, nullptr, budget);
  rep.functions_explored = static_cast<long long>(closure.states.size());
  Layout lay = make_layout(members, g.m, 1, Restriction::full);
  for (const std::string& perm : perms) {
    if (perm == identity) continue;
    Obligation o;
    o.id = "P:" + perm;
    int found = -1;
    for (size_t s = 0; s < closure.states.size() && found < 0; ++s) {
      bool ok = true;
      for (size_t mi = 0; mi < members.size() && ok; ++mi) {
        const FiniteAlgebra& n = members[mi];
        for (long long d = 0; d < lay.dom[mi] && ok; ++d) {
          long long rest = d, want = 0;
          std::vector<Element> in(g.m);
          for (int j = g.m - 1; j >= 0; --j) {
            in[j] = static_cast<Element>(rest % n.size);
            rest /= n.size;
          }
          for (int j = 0; j < g.m; ++j)
            want = want * n.size + in[perm[j] - '1'];
          if (closure.states[s][lay.offset[mi] + d] != want) ok = false;
        }
      }
      if (ok) found = static_cast<int>(s);
    }
    if (found >= 0) {
      o.verdict = Verdict::pass;
      o.witness = render_term(closure.terms[found]);
    } else if (closure.complete) {
      o.verdict = Verdict::fail;
      o.detail = "exhausted full closure of " +
                 std::to_string(closure.states.size()) + " functions";
    } else {
      o.verdict = Verdict::unknown;
      o.detail = "search capped at " +
                 std::to_string(closure.states.size()) + " functions";
    }
    rep.obligations.push_back(std::move(o));
  }
  rep.verdict = aggregate(rep.obligations);
  return rep;
}

ConditionReport check_condition_D(const Duplicator& g) {
  ConditionReport rep;
  rep.condition = "D";
  for (const DuplicatorEntry& e : g.entries) {
    Obligation o;
    o.id = "D:" + e.name;
    o.verdict = Verdict::pass;
    for (size_t j = 0; j < e.terms.size() && o.verdict == Verdict::pass; ++j)
      for (int v : occurring_variables(e.terms[j]))
        if ((v - 1) % g.m + 1 != static_cast<int>(j) + 1) {
          o.verdict = Verdict::fail;
          o.detail = "coordinate " + std::to_string(j + 1) +
                     " term reads variable x" + std::to_string(v) +
                     " of another coordinate";
          break;
        }
    rep.obligations.push_back(std::move(o));
  }
  if (rep.obligations.empty())
    rep.obligations.push_back({"D", Verdict::pass, "", "no entries"});
  rep.verdict = aggregate(rep.obligations);
  return rep;
}

}  // namespace dupcalc
