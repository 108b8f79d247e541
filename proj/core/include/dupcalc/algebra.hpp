#ifndef DUPCALC_ALGEBRA_HPP_
#define DUPCALC_ALGEBRA_HPP_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dupcalc/term.hpp"

namespace dupcalc {

// A finite algebra given by one flattened operation table per symbol.
//
// Tables are row-major with the leftmost argument most significant:
//   index(a_1,...,a_k) = sum_j a_j * n^(k-1-j).
class FiniteAlgebra {
 public:
  std::string name;
  Signature sig;
  int size = 0;
  std::vector<std::string> labels;  // optional, size 0 or `size`
  std::map<std::string, std::vector<Element>> tables;

  const std::vector<Element>& table(const std::string& symbol) const;

  Element apply(const std::string& symbol,
                std::span<const Element> args) const;

  // Flattened index of an argument tuple.
  long long flat_index(std::span<const Element> args) const;

  // Throws DomainError if tables/labels do not match the signature/size.
  void validate() const;

  std::string label_of(Element e) const;
};

// Builds an algebra from a table-filling callback: for each symbol the
// callback receives the argument tuple and returns the result element.
FiniteAlgebra make_algebra(
    std::string name, Signature sig, int size,
    const std::function<Element(const std::string&,
                                std::span<const Element>)>& op);

// Enumerates all argument tuples of length `arity` over {0,...,n-1} in
// flattened (row-major) order, invoking `fn` on each.
void for_each_tuple(int n, int arity,
                    const std::function<void(std::span<const Element>)>& fn);

}  // namespace dupcalc

#endif  // DUPCALC_ALGEBRA_HPP_
