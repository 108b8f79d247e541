#include "dupcalc/ops.hpp"

#include <algorithm>
#include <deque>

#include "dupcalc/error.hpp"

namespace dupcalc {

FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& factors,
                             const Signature& sig_if_empty) {
  if (factors.empty()) {
    return make_algebra("1", sig_if_empty, 1,
                        [](const std::string&, std::span<const Element>) {
                          return 0;
                        });
  }
  const Signature& sig = factors.front().sig;
  for (const FiniteAlgebra& f : factors)
    if (!(f.sig == sig))
      throw DomainError("direct_product: signature mismatch between '" +
                        factors.front().name + "' and '" + f.name + "'");
  long long total = 1;
  for (const FiniteAlgebra& f : factors) {
    total *= f.size;
    if (total > (1LL << 30))
      throw ResourceError("direct_product: universe too large");
  }
  std::string name = factors.front().name;
  for (size_t i = 1; i < factors.size(); ++i) name += "x" + factors[i].name;

  int k = static_cast<int>(factors.size());
  // decode[e] = coordinate vector of product element e
  auto decode = [&](Element e, std::vector<Element>& coords) {
    coords.resize(k);
    for (int i = k - 1; i >= 0; --i) {
      coords[i] = e % factors[i].size;
      e /= factors[i].size;
    }
  };
  std::vector<Element> coords;
  std::vector<std::vector<Element>> arg_coords;
  std::vector<Element> sub;
  FiniteAlgebra prod = make_algebra(
      name, sig, static_cast<int>(total),
      [&](const std::string& sym, std::span<const Element> args) {
        arg_coords.resize(args.size());
        for (size_t j = 0; j < args.size(); ++j)
          decode(args[j], arg_coords[j]);
        Element out = 0;
        for (int i = 0; i < k; ++i) {
          sub.resize(args.size());
          for (size_t j = 0; j < args.size(); ++j) sub[j] = arg_coords[j][i];
          out = out * factors[i].size + factors[i].apply(sym, sub);
        }
        return out;
      });
  return prod;
}

FiniteAlgebra dual_of(
    const FiniteAlgebra& alg,
    const std::vector<std::pair<std::string, std::string>>& swaps) {
  FiniteAlgebra out = alg;
  out.name = alg.name + "^op";
  for (const auto& [a, b] : swaps) {
    if (alg.sig.arity(a) != alg.sig.arity(b))
      throw DomainError("dual_of: arity mismatch between '" + a + "' and '" +
                        b + "'");
    out.tables[a] = alg.table(b);
    out.tables[b] = alg.table(a);
  }
  out.validate();
  return out;
}

std::vector<Element> subalgebra_generated(const FiniteAlgebra& alg,
                                          const std::set<Element>& seed) {
  std::vector<char> in(alg.size, 0);
  std::vector<Element> universe;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      universe.push_back(e);
    }
  };
  for (Element e : seed) {
    if (e < 0 || e >= alg.size)
      throw DomainError("subalgebra_generated: seed element out of range");
    add(e);
  }
  for (const auto& [sym, ar] : alg.sig.symbols)
    if (ar == 0) add(alg.apply(sym, {}));

  // Round-based closure: rescan until no growth.
  bool grew = true;
  std::vector<Element> args;
  while (grew) {
    grew = false;
    size_t snapshot = universe.size();
    if (snapshot == 0) break;
    for (const auto& [sym, ar] : alg.sig.symbols) {
      if (ar == 0) continue;
      args.assign(ar, 0);
      std::vector<size_t> idx(ar, 0);
      while (true) {
        for (int i = 0; i < ar; ++i) args[i] = universe[idx[i]];
        Element r = alg.apply(sym, args);
        if (!in[r]) {
          in[r] = 1;
          universe.push_back(r);
        }
        int i = ar - 1;
        while (i >= 0 && idx[i] == snapshot - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
      }
    }
    if (universe.size() > snapshot) grew = true;
  }
  std::sort(universe.begin(), universe.end());
  return universe;
}

FiniteAlgebra restrict_to(const FiniteAlgebra& alg,
                          const std::vector<Element>& universe,
                          const std::string& name) {
  std::vector<Element> position(alg.size, -1);
  for (size_t i = 0; i < universe.size(); ++i) {
    Element e = universe[i];
    if (e < 0 || e >= alg.size)
      throw DomainError("restrict_to: element out of range");
    if (position[e] != -1) throw DomainError("restrict_to: duplicate element");
    position[e] = static_cast<Element>(i);
  }
  std::vector<Element> args;
  FiniteAlgebra out = make_algebra(
      name, alg.sig, static_cast<int>(universe.size()),
      [&](const std::string& sym, std::span<const Element> small_args) {
        args.resize(small_args.size());
        for (size_t j = 0; j < small_args.size(); ++j)
          args[j] = universe[small_args[j]];
        Element r = alg.apply(sym, args);
        if (position[r] == -1)
          throw DomainError("restrict_to: universe of '" + name +
                            "' is not closed under '" + sym + "'");
        return position[r];
      });
  if (!alg.labels.empty()) {
    for (Element e : universe) out.labels.push_back(alg.labels[e]);
    out.validate();
  }
  return out;
}

std::vector<std::vector<Element>> enumerate_subuniverses(
    const FiniteAlgebra& alg, int max_size) {
  if (alg.size > max_size)
    throw ResourceError("enumerate_subuniverses: algebra too large");
  std::vector<std::vector<Element>> out;
  // Closure of each subset; dedupe via sort at the end.
  for (unsigned mask = 0; mask < (1u << alg.size); ++mask) {
    std::set<Element> seed;
    for (int e = 0; e < alg.size; ++e)
      if (mask & (1u << e)) seed.insert(e);
    std::vector<Element> closed = subalgebra_generated(alg, seed);
    if (closed.empty()) continue;  // no constants, empty seed
    out.push_back(std::move(closed));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Postfix program with pre-resolved tables, for the exhaustive scans.
struct CompiledTerm {
  struct Op {
    int var;  // > 0: push assignment[var-1]; else apply `table`
    const std::vector<Element>* table;
    int arity;
  };
  std::vector<Op> ops;
};

void flatten_term(const Term& t, const FiniteAlgebra& alg,
                  CompiledTerm& out) {
  if (t.is_variable()) {
    out.ops.push_back({t.var, nullptr, 0});
    return;
  }
  for (const Term& c : t.children) flatten_term(c, alg, out);
  out.ops.push_back(
      {0, &alg.table(t.symbol), static_cast<int>(t.children.size())});
}

Element run_compiled(const CompiledTerm& c, std::span<const Element> a,
                     int size, std::vector<Element>& stack) {
  stack.clear();
  for (const CompiledTerm::Op& op : c.ops) {
    if (op.var > 0) {
      stack.push_back(a[op.var - 1]);
      continue;
    }
    size_t base = stack.size() - op.arity;
    long long idx = 0;
    for (int i = 0; i < op.arity; ++i) idx = idx * size + stack[base + i];
    stack.resize(base);
    stack.push_back((*op.table)[idx]);
  }
  return stack.back();
}

}  // namespace

IdentityCheck check_identity(const FiniteAlgebra& alg, const Term& lhs,
                             const Term& rhs, const Limits& limits) {
  std::vector<int> vars = occurring_variables(lhs);
  for (int v : occurring_variables(rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      vars.push_back(v);
  std::sort(vars.begin(), vars.end());

  int span = vars.empty() ? 0 : vars.back();
  long long count = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    count *= alg.size;
    if (count > limits.eval_cap)
      throw ResourceError("check_identity: assignment count exceeds cap");
  }

  CompiledTerm cl, cr;
  flatten_term(lhs, alg, cl);
  flatten_term(rhs, alg, cr);
  std::vector<Element> stack;

  IdentityCheck result;
  std::vector<Element> assignment(span, 0);
  std::vector<Element> values(vars.size(), 0);
  while (true) {
    for (size_t i = 0; i < vars.size(); ++i)
      assignment[vars[i] - 1] = values[i];
    ++result.checked;
    if (run_compiled(cl, assignment, alg.size, stack) !=
        run_compiled(cr, assignment, alg.size, stack)) {
      result.holds = false;
      result.counterexample = assignment;
      return result;
    }
    int i = static_cast<int>(vars.size()) - 1;
    while (i >= 0 && values[i] == alg.size - 1) values[i--] = 0;
    if (i < 0) break;
    ++values[i];
  }
  return result;
}

OrderRelation induced_order(const FiniteAlgebra& alg,
                            const std::string& meet) {
  if (alg.sig.arity(meet) != 2)
    throw DomainError("induced_order: '" + meet + "' is not binary");
  OrderRelation ord;
  ord.size = alg.size;
  ord.leq.assign(static_cast<size_t>(alg.size) * alg.size, 0);
  for (Element a = 0; a < alg.size; ++a)
    for (Element b = 0; b < alg.size; ++b) {
      std::vector<Element> args{a, b};
      if (alg.apply(meet, args) == a) ord.leq[a * alg.size + b] = 1;
    }
  for (Element a = 0; a < alg.size; ++a)
    if (!ord.le(a, a))
      throw DomainError("induced_order: relation from '" + meet +
                        "' is not reflexive");
  for (Element a = 0; a < alg.size; ++a)
    for (Element b = 0; b < alg.size; ++b) {
      if (a != b && ord.le(a, b) && ord.le(b, a))
        throw DomainError("induced_order: relation from '" + meet +
                          "' is not antisymmetric");
      for (Element c = 0; c < alg.size; ++c)
        if (ord.le(a, b) && ord.le(b, c) && !ord.le(a, c))
          throw DomainError("induced_order: relation from '" + meet +
                            "' is not transitive");
    }
  return ord;
}

MonotonicityCheck check_monotonicity(const FiniteAlgebra& alg,
                                     const std::string& op,
                                     const OrderRelation& order) {
  int ar = alg.sig.arity(op);
  MonotonicityCheck result;
  bool done = false;
  for_each_tuple(alg.size, ar, [&](std::span<const Element> tuple) {
    if (done) return;
    Element base = alg.apply(op, tuple);
    std::vector<Element> probe(tuple.begin(), tuple.end());
    for (int i = 0; i < ar && !done; ++i) {
      Element orig = probe[i];
      for (Element e = 0; e < alg.size; ++e) {
        if (!order.le(orig, e)) continue;
        probe[i] = e;
        if (!order.le(base, alg.apply(op, probe))) {
          result.holds = false;
          result.argument = i;
          result.tuple.assign(tuple.begin(), tuple.end());
          result.replaced = e;
          done = true;
          break;
        }
      }
      probe[i] = orig;
    }
  });
  return result;
}

ResiduumResult residuum(const FiniteAlgebra& alg, const std::string& meet) {
  OrderRelation ord = induced_order(alg, meet);
  int n = alg.size;
  ResiduumResult res;
  res.table.assign(static_cast<size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      // Candidate: join of {b : a /\ b <= c}, computed as a maximum
      // among the admissible set; existence requires that maximum to be
      // admissible itself and above every admissible b.
      Element best = -1;
      for (Element b = 0; b < n; ++b) {
        std::vector<Element> args{a, b};
        if (!ord.le(alg.apply(meet, args), c)) continue;
        if (best == -1 || ord.le(best, b)) best = b;
      }
      bool ok = best != -1;
      if (ok)
        for (Element b = 0; b < n; ++b) {
          std::vector<Element> args{a, b};
          if (ord.le(alg.apply(meet, args), c) && !ord.le(b, best)) ok = false;
        }
      if (!ok) {
        res.exists = false;
        res.fail_a = a;
        res.fail_c = c;
        res.table.clear();
        return res;
      }
      res.table[a * n + c] = best;
    }
  res.exists = true;
  return res;
}

ResiduumResult coresiduum(const FiniteAlgebra& alg, const std::string& join) {
  // Order with a <= b iff a \/ b = b.
  if (alg.sig.arity(join) != 2)
    throw DomainError("coresiduum: '" + join + "' is not binary");
  int n = alg.size;
  OrderRelation ord;
  ord.size = n;
  ord.leq.assign(static_cast<size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::vector<Element> args{a, b};
      if (alg.apply(join, args) == b) ord.leq[a * n + b] = 1;
    }
  ResiduumResult res;
  res.table.assign(static_cast<size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      Element best = -1;
      for (Element b = 0; b < n; ++b) {
        std::vector<Element> args{a, b};
        if (!ord.le(c, alg.apply(join, args))) continue;
        if (best == -1 || ord.le(b, best)) best = b;
      }
      bool ok = best != -1;
      if (ok)
        for (Element b = 0; b < n; ++b) {
          std::vector<Element> args{a, b};
          if (ord.le(c, alg.apply(join, args)) && !ord.le(best, b)) ok = false;
        }
      if (!ok) {
        res.exists = false;
        res.fail_a = a;
        res.fail_c = c;
        res.table.clear();
        return res;
      }
      res.table[a * n + c] = best;
    }
  res.exists = true;
  return res;
}

}  // namespace dupcalc
