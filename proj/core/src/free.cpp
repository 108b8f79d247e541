#include "dupcalc/free.hpp"

#include <algorithm>
#include <map>

#include "dupcalc/error.hpp"

namespace dupcalc {

FreeAlgebraResult free_algebra(const std::vector<FiniteAlgebra>& members,
                               int k, const Limits& limits) {
  if (members.empty()) throw DomainError("free_algebra: empty class");
  if (k < 0) throw DomainError("free_algebra: negative generator count");
  const Signature& sig = members.front().sig;
  for (const FiniteAlgebra& m : members)
    if (!(m.sig == sig)) throw DomainError("free_algebra: signature mismatch");

  // One coordinate per (member, assignment of the k generators).
  struct Coord {
    int member;
    std::vector<Element> assignment;  // length k
  };
  std::vector<Coord> coords;
  for (size_t mi = 0; mi < members.size(); ++mi) {
    for_each_tuple(members[mi].size, k, [&](std::span<const Element> a) {
      coords.push_back({static_cast<int>(mi),
                        std::vector<Element>(a.begin(), a.end())});
    });
  }
  size_t width = coords.size();

  std::map<std::vector<Element>, Element> dict;
  std::vector<std::vector<Element>> vectors;
  auto intern = [&](std::vector<Element> v) -> Element {
    auto [it, fresh] = dict.emplace(std::move(v), vectors.size());
    if (fresh) {
      if (static_cast<long long>(vectors.size()) >= limits.free_cap)
        throw ResourceError("free_algebra: cap exceeded at " +
                            std::to_string(vectors.size()) + " elements");
      vectors.push_back(it->first);
    }
    return it->second;
  };

  FreeAlgebraResult out;
  for (int g = 0; g < k; ++g) {
    std::vector<Element> v(width);
    for (size_t c = 0; c < width; ++c) v[c] = coords[c].assignment[g];
    out.generators.push_back(intern(std::move(v)));
  }
  for (const auto& [sym, ar] : sig.symbols) {
    if (ar != 0) continue;
    std::vector<Element> v(width);
    for (size_t c = 0; c < width; ++c)
      v[c] = members[coords[c].member].apply(sym, {});
    intern(std::move(v));
  }
  if (vectors.empty())
    throw DomainError("free_algebra: no generators and no constants");

  // Closure: apply each operation pointwise to known vectors until no
  // new element appears.
  size_t frontier = 0;
  std::vector<Element> pointwise(width);
  std::vector<Element> args;
  while (frontier < vectors.size()) {
    size_t limit = vectors.size();
    for (const auto& [sym, ar] : sig.symbols) {
      if (ar == 0) continue;
      std::vector<size_t> idx(ar, 0);
      while (true) {
        bool fresh_arg = false;
        for (size_t i : idx)
          if (i >= frontier) fresh_arg = true;
        if (fresh_arg) {
          for (size_t c = 0; c < width; ++c) {
            args.resize(ar);
            for (int i = 0; i < ar; ++i) args[i] = vectors[idx[i]][c];
            pointwise[c] = members[coords[c].member].apply(sym, args);
          }
          intern(pointwise);
        }
        int i = ar - 1;
        while (i >= 0 && idx[i] == limit - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
      }
    }
    frontier = limit;
  }

  int n = static_cast<int>(vectors.size());
  out.algebra = make_algebra(
      "free", sig, n,
      [&](const std::string& sym, std::span<const Element> tuple) {
        std::vector<Element> v(width);
        std::vector<Element> a(tuple.size());
        for (size_t c = 0; c < width; ++c) {
          for (size_t i = 0; i < tuple.size(); ++i) a[i] = vectors[tuple[i]][c];
          v[c] = members[coords[c].member].apply(sym, a);
        }
        auto it = dict.find(v);
        if (it == dict.end())
          throw DomainError("free_algebra: closure incomplete");
        return it->second;
      });
  out.embedding = std::move(vectors);
  return out;
}

SeparationResult separates_into(const FiniteAlgebra& alg,
                                const std::vector<FiniteAlgebra>& members,
                                long long hom_cap) {
  SeparationResult out;
  std::vector<std::vector<Homomorphism>> homs;
  for (const FiniteAlgebra& m : members)
    homs.push_back(enumerate_homomorphisms(alg, m, hom_cap));
  for (Element a = 0; a < alg.size; ++a)
    for (Element b = a + 1; b < alg.size; ++b) {
      bool split = false;
      for (size_t mi = 0; mi < members.size() && !split; ++mi)
        for (const Homomorphism& h : homs[mi]) {
          if (h(a) != h(b)) {
            out.witness.emplace_back(static_cast<int>(mi), h);
            split = true;
            break;
          }
        }
      if (!split) {
        out.separates = false;
        out.fail_a = a;
        out.fail_b = b;
        out.witness.clear();
        return out;
      }
    }
  out.separates = true;
  return out;
}

}  // namespace dupcalc
