#ifndef DUPCALC_ERROR_HPP_
#define DUPCALC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dupcalc {

// Malformed textual input (term syntax, JSON layout, bad references).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid data: arity mismatches, tables of the wrong
// length, incompatible partitions, signature mismatches.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured cap was exceeded (evaluation budget, universe size,
// free-algebra materialisation bound).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dupcalc

#endif  // DUPCALC_ERROR_HPP_
