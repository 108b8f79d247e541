#ifndef DUPCALC_CONFIG_HPP_
#define DUPCALC_CONFIG_HPP_

namespace dupcalc {

// Resource guards.  These are configuration, not constants: callers may
// tighten or relax them per invocation.
struct Limits {
  long long eval_cap = 10'000'000;     // identity-check evaluations
  int con_universe_cap = 64;           // congruence-lattice universe bound
  long long free_cap = 100'000;        // free-algebra element bound
  long long clone_function_cap = 200'000;  // closure-search function bound
};

}  // namespace dupcalc

#endif  // DUPCALC_CONFIG_HPP_
