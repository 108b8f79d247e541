#include "dupcalc/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dupcalc/error.hpp"
#include "dupcalc/ops.hpp"

namespace dupcalc {

bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to,
                     const Homomorphism& h) {
  if (!(from.sig == to.sig))
    throw DomainError("is_homomorphism: signature mismatch");
  if (static_cast<int>(h.image.size()) != from.size)
    throw DomainError("is_homomorphism: image vector has wrong length");
  for (Element e : h.image)
    if (e < 0 || e >= to.size)
      throw DomainError("is_homomorphism: image out of range");
  bool ok = true;
  std::vector<Element> mapped;
  for (const auto& [sym, ar] : from.sig.symbols) {
    if (!ok) break;
    for_each_tuple(from.size, ar, [&](std::span<const Element> tuple) {
      if (!ok) return;
      mapped.resize(tuple.size());
      for (size_t j = 0; j < tuple.size(); ++j) mapped[j] = h.image[tuple[j]];
      if (h.image[from.apply(sym, tuple)] != to.apply(sym, mapped)) ok = false;
    });
  }
  return ok;
}

std::vector<Element> generating_set(const FiniteAlgebra& alg) {
  std::vector<Element> gens;
  std::set<Element> seed;
  std::vector<Element> closed = subalgebra_generated(alg, seed);
  while (static_cast<int>(closed.size()) < alg.size) {
    Element next = 0;
    std::vector<char> in(alg.size, 0);
    for (Element e : closed) in[e] = 1;
    while (in[next]) ++next;
    gens.push_back(next);
    seed.insert(next);
    closed = subalgebra_generated(alg, seed);
  }
  return gens;
}

std::optional<Homomorphism> extend_from_generators(
    const FiniteAlgebra& from, const FiniteAlgebra& to,
    const std::vector<Element>& generators,
    const std::vector<Element>& images) {
  if (!(from.sig == to.sig))
    throw DomainError("extend_from_generators: signature mismatch");
  if (generators.size() != images.size())
    throw DomainError("extend_from_generators: generator/image count mismatch");
  std::vector<Element> image(from.size, -1);
  std::vector<Element> known;  // domain elements with an assigned image
  auto set_image = [&](Element a, Element v) -> bool {
    if (image[a] == v) return true;
    if (image[a] != -1) return false;
    image[a] = v;
    known.push_back(a);
    return true;
  };
  for (size_t i = 0; i < generators.size(); ++i) {
    Element g = generators[i], v = images[i];
    if (g < 0 || g >= from.size || v < 0 || v >= to.size)
      throw DomainError("extend_from_generators: element out of range");
    if (!set_image(g, v)) return std::nullopt;
  }
  for (const auto& [sym, ar] : from.sig.symbols)
    if (ar == 0 && !set_image(from.apply(sym, {}), to.apply(sym, {})))
      return std::nullopt;

  // Close the assigned domain under the operations, propagating forced
  // images; a conflict means no homomorphism with these images exists.
  size_t frontier = 0;
  std::vector<Element> args, mapped;
  while (frontier < known.size()) {
    size_t limit = known.size();
    for (const auto& [sym, ar] : from.sig.symbols) {
      if (ar == 0) continue;
      std::vector<size_t> idx(ar, 0);
      while (true) {
        // At least one index must touch the new frontier slice.
        bool fresh = false;
        for (size_t i : idx)
          if (i >= frontier) fresh = true;
        if (fresh) {
          args.resize(ar);
          mapped.resize(ar);
          for (int i = 0; i < ar; ++i) {
            args[i] = known[idx[i]];
            mapped[i] = image[args[i]];
          }
          if (!set_image(from.apply(sym, args), to.apply(sym, mapped)))
            return std::nullopt;
        }
        int i = ar - 1;
        while (i >= 0 && idx[i] == limit - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
      }
    }
    frontier = limit;
  }
  if (known.size() != static_cast<size_t>(from.size)) return std::nullopt;
  Homomorphism h{std::move(image)};
  if (!is_homomorphism(from, to, h)) return std::nullopt;
  return h;
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& from,
                                                  const FiniteAlgebra& to,
                                                  long long cap) {
  std::vector<Element> gens = generating_set(from);
  std::vector<Homomorphism> out;
  std::vector<Element> images(gens.size(), 0);
  auto attempt = [&]() {
    auto h = extend_from_generators(from, to, gens, images);
    if (h) {
      out.push_back(std::move(*h));
      if (static_cast<long long>(out.size()) > cap)
        throw ResourceError("enumerate_homomorphisms: cap exceeded");
    }
  };
  if (gens.empty()) {
    attempt();
  } else {
    while (true) {
      attempt();
      int i = static_cast<int>(gens.size()) - 1;
      while (i >= 0 && images[i] == to.size - 1) images[i--] = 0;
      if (i < 0) break;
      ++images[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Joint iterated partition refinement over both algebras' tables.
// Returns per-element colors drawn from a shared palette, so equal
// colors across the two algebras mean "indistinguishable so far".
std::pair<std::vector<int>, std::vector<int>> joint_refine(
    const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<int> ca(a.size, 0), cb(b.size, 0);
  int palette = 1;
  for (int round = 0; round < a.size + b.size; ++round) {
    using Sig = std::vector<long long>;
    auto signature_of = [&](const FiniteAlgebra& alg, const std::vector<int>& c,
                            Element e) {
      Sig s{c[e]};
      for (const auto& [sym, ar] : alg.sig.symbols) {
        if (ar == 0) {
          s.push_back(alg.apply(sym, {}) == e ? 1 : 0);
        } else if (ar == 1) {
          std::vector<Element> args{e};
          s.push_back(c[alg.apply(sym, args)]);
        } else if (ar == 2) {
          std::vector<long long> rows;
          for (Element f = 0; f < alg.size; ++f) {
            std::vector<Element> ef{e, f}, fe{f, e};
            rows.push_back(static_cast<long long>(c[f]) * 1000003 * 1000003 +
                           static_cast<long long>(c[alg.apply(sym, ef)]) *
                               1000003 +
                           c[alg.apply(sym, fe)]);
          }
          std::sort(rows.begin(), rows.end());
          s.insert(s.end(), rows.begin(), rows.end());
        }
        // Higher arities are skipped; refinement is only a pruning aid.
      }
      return s;
    };
    std::map<Sig, int> dict;
    std::vector<int> na(a.size), nb(b.size);
    int fresh = 0;
    auto color = [&](const Sig& s) {
      auto [it, inserted] = dict.emplace(s, fresh);
      if (inserted) ++fresh;
      return it->second;
    };
    for (Element e = 0; e < a.size; ++e) na[e] = color(signature_of(a, ca, e));
    for (Element e = 0; e < b.size; ++e) nb[e] = color(signature_of(b, cb, e));
    if (fresh == palette && na == ca && nb == cb) break;
    palette = fresh;
    ca = std::move(na);
    cb = std::move(nb);
  }
  return {ca, cb};
}

}  // namespace

std::optional<Homomorphism> find_isomorphism(const FiniteAlgebra& a,
                                             const FiniteAlgebra& b) {
  if (!(a.sig == b.sig))
    throw DomainError("find_isomorphism: signature mismatch");
  if (a.size != b.size) return std::nullopt;
  auto [ca, cb] = joint_refine(a, b);
  {
    std::map<int, int> ha, hb;
    for (int c : ca) ++ha[c];
    for (int c : cb) ++hb[c];
    if (ha != hb) return std::nullopt;
  }
  std::vector<Element> gens = generating_set(a);
  if (gens.empty()) {
    // Constants generate everything; at most one candidate.
    auto h = extend_from_generators(a, b, {}, {});
    if (h) {
      std::set<Element> range(h->image.begin(), h->image.end());
      if (static_cast<int>(range.size()) == b.size) return h;
    }
    return std::nullopt;
  }
  std::vector<Element> images(gens.size(), 0);
  std::function<std::optional<Homomorphism>(size_t)> search =
      [&](size_t i) -> std::optional<Homomorphism> {
    if (i == gens.size()) {
      auto h = extend_from_generators(a, b, gens, images);
      if (h) {
        std::set<Element> range(h->image.begin(), h->image.end());
        if (static_cast<int>(range.size()) == b.size) return h;
      }
      return std::nullopt;
    }
    for (Element v = 0; v < b.size; ++v) {
      if (cb[v] != ca[gens[i]]) continue;
      images[i] = v;
      if (auto h = search(i + 1)) return h;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace dupcalc
