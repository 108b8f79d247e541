#include "dupcalc/duplicate.hpp"

#include <algorithm>

#include "dupcalc/error.hpp"

namespace dupcalc {

long long encode_tuple(std::span<const Element> tuple,
                       std::span<const int> sizes) {
  long long idx = 0;
  for (size_t j = 0; j < tuple.size(); ++j) idx = idx * sizes[j] + tuple[j];
  return idx;
}

std::vector<Element> decode_tuple(long long element,
                                  std::span<const int> sizes) {
  std::vector<Element> tuple(sizes.size());
  for (int j = static_cast<int>(sizes.size()) - 1; j >= 0; --j) {
    tuple[j] = static_cast<Element>(element % sizes[j]);
    element /= sizes[j];
  }
  return tuple;
}

namespace {

FiniteAlgebra duplicate_impl(const Duplicator& g,
                             const std::vector<FiniteAlgebra>& factors,
                             const std::string& name) {
  for (const FiniteAlgebra& f : factors)
    if (!(f.sig == g.base_sig))
      throw DomainError("duplicate: factor '" + f.name +
                        "' does not match the base signature of '" + g.name +
                        "'");
  std::vector<int> sizes;
  long long total = 1;
  for (const FiniteAlgebra& f : factors) {
    sizes.push_back(f.size);
    total *= f.size;
    if (total > (1LL << 24))
      throw ResourceError("duplicate: universe too large");
  }

  Signature gsig = gamma_signature(g);
  FiniteAlgebra out;
  out.name = name;
  out.sig = gsig;
  out.size = static_cast<int>(total);
  for (long long e = 0; e < total; ++e) {
    std::vector<Element> tup = decode_tuple(e, sizes);
    std::string lab = "(";
    for (int j = 0; j < g.m; ++j) {
      if (j) lab += ",";
      lab += factors[j].label_of(tup[j]);
    }
    out.labels.push_back(lab + ")");
  }

  // Flattened base assignment: coordinate j of duplicated argument i
  // sits at base variable m(i-1)+j.
  for (const DuplicatorEntry& entry : g.entries) {
    std::vector<Element>& tab = out.tables[entry.name];
    int n = entry.gamma_arity;
    std::vector<Element> base_assign(static_cast<size_t>(g.m) * n);
    std::vector<Element> result(g.m);
    for_each_tuple(out.size, n, [&](std::span<const Element> args) {
      for (int i = 0; i < n; ++i) {
        std::vector<Element> tup = decode_tuple(args[i], sizes);
        for (int j = 0; j < g.m; ++j) base_assign[g.m * i + j] = tup[j];
      }
      for (int j = 0; j < g.m; ++j)
        result[j] = eval_term(entry.terms[j], factors[j], base_assign);
      tab.push_back(static_cast<Element>(encode_tuple(result, sizes)));
    });
  }
  out.validate();
  return out;
}

}  // namespace

FiniteAlgebra duplicate(const Duplicator& g, const FiniteAlgebra& base) {
  std::vector<FiniteAlgebra> factors(g.m, base);
  return duplicate_impl(g, factors, "P_" + g.name + "(" + base.name + ")");
}

FiniteAlgebra duplicate_mixed(const Duplicator& g,
                              const std::vector<FiniteAlgebra>& factors) {
  if (g.mode != DuplicatorMode::disjoint)
    throw DomainError("duplicate_mixed: duplicator '" + g.name +
                      "' is not in disjoint mode");
  if (static_cast<int>(factors.size()) != g.m)
    throw DomainError("duplicate_mixed: expected " + std::to_string(g.m) +
                      " factors, got " + std::to_string(factors.size()));
  std::string name = factors.front().name;
  for (size_t i = 1; i < factors.size(); ++i) name += "(x)" + factors[i].name;
  return duplicate_impl(g, factors, name + "_" + g.name);
}

Homomorphism lift_morphism(const Duplicator& g, const FiniteAlgebra& from,
                           const FiniteAlgebra& to, const Homomorphism& h) {
  if (!(from.sig == g.base_sig) || !(to.sig == g.base_sig))
    throw DomainError("lift_morphism: algebras do not match the base signature");
  if (static_cast<int>(h.image.size()) != from.size)
    throw DomainError("lift_morphism: map length mismatch");
  FiniteAlgebra pfrom = duplicate(g, from);
  FiniteAlgebra pto = duplicate(g, to);
  std::vector<int> from_sizes(g.m, from.size), to_sizes(g.m, to.size);
  Homomorphism lifted;
  lifted.image.resize(pfrom.size);
  for (Element e = 0; e < pfrom.size; ++e) {
    std::vector<Element> tup = decode_tuple(e, from_sizes);
    for (Element& c : tup) c = h.image[c];
    lifted.image[e] = static_cast<Element>(encode_tuple(tup, to_sizes));
  }
  if (!is_homomorphism(pfrom, pto, lifted))
    throw DomainError("lift_morphism: lifted map failed validation (engine bug "
                      "or non-homomorphic input)");
  return lifted;
}

}  // namespace dupcalc
