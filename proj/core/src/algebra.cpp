#include "dupcalc/algebra.hpp"

#include <cmath>

namespace dupcalc {

const std::vector<Element>& FiniteAlgebra::table(
    const std::string& symbol) const {
  auto it = tables.find(symbol);
  if (it == tables.end())
    throw DomainError("algebra '" + name + "' has no table for '" + symbol +
                      "'");
  return it->second;
}

long long FiniteAlgebra::flat_index(std::span<const Element> args) const {
  long long idx = 0;
  for (Element a : args) idx = idx * size + a;
  return idx;
}

Element FiniteAlgebra::apply(const std::string& symbol,
                             std::span<const Element> args) const {
  const auto& tab = table(symbol);
  return tab[flat_index(args)];
}

void FiniteAlgebra::validate() const {
  sig.validate();
  if (size < 1) throw DomainError("algebra '" + name + "' has empty universe");
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    throw DomainError("algebra '" + name + "': label count != size");
  for (const auto& [sym, ar] : sig.symbols) {
    auto it = tables.find(sym);
    if (it == tables.end())
      throw DomainError("algebra '" + name + "': missing table for '" + sym +
                        "'");
    long long expect = 1;
    for (int i = 0; i < ar; ++i) expect *= size;
    if (static_cast<long long>(it->second.size()) != expect)
      throw DomainError("algebra '" + name + "': table for '" + sym +
                        "' has wrong length");
    for (Element e : it->second)
      if (e < 0 || e >= size)
        throw DomainError("algebra '" + name + "': table entry for '" + sym +
                          "' out of range");
  }
  if (tables.size() != sig.symbols.size())
    throw DomainError("algebra '" + name + "': extra tables present");
}

std::string FiniteAlgebra::label_of(Element e) const {
  if (!labels.empty()) return labels[e];
  return std::to_string(e);
}

void for_each_tuple(int n, int arity,
                    const std::function<void(std::span<const Element>)>& fn) {
  std::vector<Element> tuple(arity, 0);
  if (arity == 0) {
    fn(tuple);
    return;
  }
  while (true) {
    fn(tuple);
    int i = arity - 1;
    while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
    if (i < 0) return;
    ++tuple[i];
  }
}

FiniteAlgebra make_algebra(
    std::string name, Signature sig, int size,
    const std::function<Element(const std::string&,
                                std::span<const Element>)>& op) {
  FiniteAlgebra alg;
  alg.name = std::move(name);
  alg.sig = std::move(sig);
  alg.size = size;
  for (const auto& [sym, ar] : alg.sig.symbols) {
    std::vector<Element>& tab = alg.tables[sym];
    for_each_tuple(size, ar, [&](std::span<const Element> args) {
      tab.push_back(op(sym, args));
    });
  }
  alg.validate();
  return alg;
}

}  // namespace dupcalc
