#include "dupcalc/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dupcalc/error.hpp"

namespace dupcalc {

int Congruence::block_count() const {
  int count = 0;
  for (size_t e = 0; e < rep.size(); ++e)
    if (rep[e] == static_cast<Element>(e)) ++count;
  return count;
}

Congruence Congruence::identity(int size) {
  Congruence c;
  c.rep.resize(size);
  std::iota(c.rep.begin(), c.rep.end(), 0);
  return c;
}

Congruence Congruence::full(int size) {
  Congruence c;
  c.rep.assign(size, 0);
  return c;
}

Congruence normalize_partition(const std::vector<Element>& block_of) {
  int n = static_cast<int>(block_of.size());
  std::vector<Element> least(n, -1);  // block id -> least member
  Congruence c;
  c.rep.resize(n);
  for (Element e = 0; e < n; ++e) {
    Element b = block_of[e];
    if (b < 0 || b >= n) throw DomainError("normalize_partition: bad block id");
    if (least[b] == -1) least[b] = e;
  }
  for (Element e = 0; e < n; ++e) c.rep[e] = least[block_of[e]];
  return c;
}

bool is_congruence(const FiniteAlgebra& alg, const Congruence& theta) {
  if (theta.size() != alg.size)
    throw DomainError("is_congruence: size mismatch");
  bool ok = true;
  for (const auto& [sym, ar] : alg.sig.symbols) {
    if (!ok) break;
    if (ar == 0) continue;
    for_each_tuple(alg.size, ar, [&](std::span<const Element> tuple) {
      if (!ok) return;
      Element base = alg.apply(sym, tuple);
      std::vector<Element> probe(tuple.begin(), tuple.end());
      for (int i = 0; i < ar; ++i) {
        Element orig = probe[i];
        for (Element e = 0; e < alg.size; ++e) {
          if (!theta.related(orig, e)) continue;
          probe[i] = e;
          if (!theta.related(base, alg.apply(sym, probe))) {
            ok = false;
            return;
          }
        }
        probe[i] = orig;
      }
    });
  }
  return ok;
}

namespace {

// Union-find with least-element representatives on completion.
struct UnionFind {
  std::vector<Element> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Element find(Element e) {
    while (parent[e] != e) {
      parent[e] = parent[parent[e]];
      e = parent[e];
    }
    return e;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence congruence_generated(
    const FiniteAlgebra& alg,
    const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(alg.size);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= alg.size || b < 0 || b >= alg.size)
      throw DomainError("congruence_generated: element out of range");
    uf.unite(a, b);
  }
  // Close under unary polynomial operations: whenever a ~ b, force
  // f(..., a, ...) ~ f(..., b, ...) with the other slots fixed.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [sym, ar] : alg.sig.symbols) {
      if (ar == 0) continue;
      for_each_tuple(alg.size, ar, [&](std::span<const Element> tuple) {
        Element base = alg.apply(sym, tuple);
        std::vector<Element> probe(tuple.begin(), tuple.end());
        for (int i = 0; i < ar; ++i) {
          Element orig = probe[i];
          for (Element e = orig + 1; e < alg.size; ++e) {
            if (uf.find(orig) != uf.find(e)) continue;
            probe[i] = e;
            if (uf.unite(base, alg.apply(sym, probe))) changed = true;
          }
          probe[i] = orig;
        }
      });
    }
  }
  Congruence c;
  c.rep.resize(alg.size);
  for (Element e = 0; e < alg.size; ++e) c.rep[e] = uf.find(e);
  return c;
}

Congruence principal_congruence(const FiniteAlgebra& alg, Element a,
                                Element b) {
  return congruence_generated(alg, {{a, b}});
}

FiniteAlgebra quotient_by(const FiniteAlgebra& alg, const Congruence& theta) {
  if (theta.size() != alg.size) throw DomainError("quotient_by: size mismatch");
  if (!is_congruence(alg, theta))
    throw DomainError("quotient_by: partition is not a congruence of '" +
                      alg.name + "'");
  std::vector<Element> reps;
  std::vector<Element> block(alg.size, -1);
  for (Element e = 0; e < alg.size; ++e)
    if (theta.rep[e] == e) {
      block[e] = static_cast<Element>(reps.size());
      reps.push_back(e);
    }
  for (Element e = 0; e < alg.size; ++e) block[e] = block[theta.rep[e]];

  std::vector<Element> args;
  FiniteAlgebra out = make_algebra(
      alg.name + "/theta", alg.sig, static_cast<int>(reps.size()),
      [&](const std::string& sym, std::span<const Element> small_args) {
        args.resize(small_args.size());
        for (size_t j = 0; j < small_args.size(); ++j)
          args[j] = reps[small_args[j]];
        return block[alg.apply(sym, args)];
      });
  if (!alg.labels.empty()) {
    out.labels.resize(reps.size());
    for (Element e = 0; e < alg.size; ++e) {
      std::string& lab = out.labels[block[e]];
      if (!lab.empty()) lab += "|";
      lab += alg.labels[e];
    }
    out.validate();
  }
  return out;
}

namespace {

Congruence join_congruences(const FiniteAlgebra& alg, const Congruence& a,
                            const Congruence& b) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element e = 0; e < alg.size; ++e) {
    pairs.emplace_back(e, a.rep[e]);
    pairs.emplace_back(e, b.rep[e]);
  }
  return congruence_generated(alg, pairs);
}

Congruence meet_congruences(const Congruence& a, const Congruence& b) {
  int n = a.size();
  std::vector<Element> block(n);
  std::map<std::pair<Element, Element>, Element> seen;
  for (Element e = 0; e < n; ++e) {
    auto key = std::make_pair(a.rep[e], b.rep[e]);
    auto [it, fresh] = seen.emplace(key, e);
    block[e] = it->second;
  }
  Congruence c;
  c.rep = std::move(block);
  return c;
}

}  // namespace

int CongruenceLattice::index_of(const Congruence& theta) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), theta);
  if (it == elements.end() || !(*it == theta))
    throw DomainError("congruence not in lattice");
  return static_cast<int>(it - elements.begin());
}

int CongruenceLattice::join(int i, int j) const {
  int n = static_cast<int>(elements.size());
  int best = -1;
  for (int k = 0; k < n; ++k) {
    if (!le(i, k) || !le(j, k)) continue;
    if (best == -1 || le(k, best)) best = k;
  }
  return best;
}

int CongruenceLattice::meet(int i, int j) const {
  int n = static_cast<int>(elements.size());
  int best = -1;
  for (int k = 0; k < n; ++k) {
    if (!le(k, i) || !le(k, j)) continue;
    if (best == -1 || le(best, k)) best = k;
  }
  return best;
}

CongruenceLattice congruence_lattice(const FiniteAlgebra& alg,
                                     const Limits& limits) {
  if (alg.size > limits.con_universe_cap)
    throw ResourceError("congruence_lattice: universe exceeds cap");
  std::set<Congruence> found;
  found.insert(Congruence::identity(alg.size));
  // Principal congruences, then closure under binary joins.  Meets of
  // congruences are congruences automatically, and every congruence is
  // a join of principal ones, so this generates Con(A).
  for (Element a = 0; a < alg.size; ++a)
    for (Element b = a + 1; b < alg.size; ++b)
      found.insert(principal_congruence(alg, a, b));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Congruence> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        Congruence joined = join_congruences(alg, snapshot[i], snapshot[j]);
        if (found.insert(joined).second) grew = true;
      }
  }
  CongruenceLattice lat;
  lat.elements.assign(found.begin(), found.end());
  int n = static_cast<int>(lat.elements.size());
  lat.leq.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // theta_i <= theta_j iff theta_i refines theta_j.
      bool below = true;
      for (Element e = 0; e < alg.size && below; ++e)
        if (!lat.elements[j].related(e, lat.elements[i].rep[e])) below = false;
      if (below) lat.leq[static_cast<size_t>(i) * n + j] = 1;
    }
  return lat;
}

SubdirectIrreducibility is_subdirectly_irreducible(const FiniteAlgebra& alg,
                                                   const Limits& limits) {
  SubdirectIrreducibility out;
  if (alg.size <= 1) return out;  // trivial algebra is not SI
  // The monolith, if it exists, is the meet of all principal
  // congruences Cg(a,b) with a != b.
  Congruence candidate = Congruence::full(alg.size);
  bool first = true;
  for (Element a = 0; a < alg.size; ++a)
    for (Element b = a + 1; b < alg.size; ++b) {
      Congruence p = principal_congruence(alg, a, b);
      if (first) {
        candidate = p;
        first = false;
        continue;
      }
      candidate = meet_congruences(candidate, p);
    }
  (void)limits;
  if (candidate == Congruence::identity(alg.size)) return out;
  out.irreducible = true;
  out.monolith = candidate;
  return out;
}

bool lattices_order_isomorphic(const CongruenceLattice& a,
                               const CongruenceLattice& b) {
  int n = static_cast<int>(a.elements.size());
  if (n != static_cast<int>(b.elements.size())) return false;
  // Invariants per element: (down-set size, up-set size).
  auto profile = [](const CongruenceLattice& lat) {
    int m = static_cast<int>(lat.elements.size());
    std::vector<std::pair<int, int>> prof(m, {0, 0});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (lat.le(j, i)) ++prof[i].first;
        if (lat.le(i, j)) ++prof[i].second;
      }
    return prof;
  };
  auto pa = profile(a);
  auto pb = profile(b);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || pa[i] != pb[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        if (a.le(i, k) != b.le(j, image[k])) ok = false;
        if (a.le(k, i) != b.le(image[k], j)) ok = false;
      }
      if (!ok) continue;
      image[i] = j;
      used[j] = 1;
      if (assign(i + 1)) return true;
      used[j] = 0;
      image[i] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace dupcalc
