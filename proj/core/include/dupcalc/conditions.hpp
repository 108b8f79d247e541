#ifndef DUPCALC_CONDITIONS_HPP_
#define DUPCALC_CONDITIONS_HPP_

#include <string>
#include <vector>

#include "dupcalc/config.hpp"
#include "dupcalc/duplicator.hpp"

namespace dupcalc {

enum class Verdict { pass, fail, unknown };

std::string to_string(Verdict v);

enum class CheckMode { witness, search };

struct SearchBudget {
  long long function_cap = 200'000;
  long long millis = 0;  // 0 = no wall-clock limit
};

// One proof obligation of a condition check, e.g. recovering one base
// symbol at one coordinate.
struct Obligation {
  std::string id;
  Verdict verdict = Verdict::unknown;
  std::string witness;  // term text in the duplicated language, on pass
  std::string detail;   // counterexample or closure certificate
};

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::unknown;
  std::vector<Obligation> obligations;
  long long functions_explored = 0;
};

// (L)/(L_m): per base symbol and coordinate, a duplicated-language term
// matching the symbol on diagonal inputs across every class member.
// `existential` switches to the (L') variant: one coordinate per symbol.
ConditionReport check_condition_L(const Duplicator& g,
                                  const std::vector<FiniteAlgebra>& members,
                                  CheckMode mode, const SearchBudget& budget,
                                  bool existential = false);

// (M)/(M_m): an m-ary term selecting coordinate j of argument j.
ConditionReport check_condition_M(const Duplicator& g,
                                  const std::vector<FiniteAlgebra>& members,
                                  CheckMode mode, const SearchBudget& budget);

// (P)/(P_m): a unary coordinate-permuting term for every permutation,
// composed from witnesses for a generating set.
ConditionReport check_condition_P(const Duplicator& g,
                                  const std::vector<FiniteAlgebra>& members,
                                  CheckMode mode, const SearchBudget& budget);

// (D): syntactic coordinate disjointness of every entry.
ConditionReport check_condition_D(const Duplicator& g);

// Exact breadth-first closure of k-ary function tuples (one function
// per class member) from projections under pointwise entry application.
enum class Restriction { diagonal, full };
enum class SearchOutcome { found, exhausted, capped };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::capped;
  Term witness;  // set when found
  long long functions_explored = 0;
};

// `target` holds one table per member: for diagonal restriction the
// domain is N^k (assignments to the diagonal), for full it is (N^m)^k;
// values are flattened N^m elements.
SearchResult clone_search(const Duplicator& g,
                          const std::vector<FiniteAlgebra>& members, int k,
                          Restriction restriction,
                          const std::vector<std::vector<Element>>& target,
                          const SearchBudget& budget);

// Predicate form: `accept` sees the concatenated member tables of a
// candidate function tuple.
SearchResult clone_search_predicate(
    const Duplicator& g, const std::vector<FiniteAlgebra>& members, int k,
    Restriction restriction,
    const std::function<bool(const std::vector<Element>&)>& accept,
    const SearchBudget& budget);

}  // namespace dupcalc

#endif  // DUPCALC_CONDITIONS_HPP_
