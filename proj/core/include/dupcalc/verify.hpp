#ifndef DUPCALC_VERIFY_HPP_
#define DUPCALC_VERIFY_HPP_

#include <string>
#include <vector>

#include "dupcalc/conditions.hpp"
#include "dupcalc/config.hpp"

namespace dupcalc {

// One reproducible row of the summary tables: a duplicator, its base
// class, the expected product, and the checks that back the claim.
struct RowSpec {
  std::string id;
  std::vector<std::string> base_keys;   // catalog algebra keys; for mixed
                                        // rows, the m factors in order
  std::string duplicator_key;
  std::string suite_key;                // axiom suite for the product ("" =
                                        // skip)
  std::string target_key;               // expected isomorphic catalog
                                        // algebra ("" = skip)
  std::vector<std::string> extra_claims;  // claim ids, see run_row
  bool mixed = false;                   // build via duplicate_mixed
  bool finite_witness = false;          // base variety not finitely
                                        // generated; checked on stand-ins
};

struct ClaimReport {
  std::string id;
  Verdict verdict = Verdict::unknown;
  std::string artifact;  // witness summary or counterexample
  long long millis = 0;  // 0 unless timings are enabled
};

struct RowReport {
  std::string id;
  bool finite_witness = false;
  std::vector<ClaimReport> claims;

  bool pass() const;
  bool has_unknown() const;
};

struct VerifyConfig {
  CheckMode mode = CheckMode::witness;
  SearchBudget budget;
  Limits limits;
  bool timings = false;  // keep reports byte-deterministic by default

  VerifyConfig() { limits.eval_cap = 50'000'000; }
};

// Runs the row pipeline: duplicator validation, condition checks,
// product construction, optional isomorphism and axiom suite, then the
// extra claims ("congruence-transfer", "si-transfer", "free-algebra",
// "smoke-test", "formula-consistency", "separation",
// "cross-construction").
RowReport run_row(const RowSpec& spec, const VerifyConfig& config);

// The shipped row lists; `which` is "table1" or "table2".
std::vector<RowSpec> table_rows(const std::string& which);

std::vector<RowReport> run_table(const std::string& which,
                                 const VerifyConfig& config);

// `format` is "text" or "json"; output is deterministic for fixed input.
std::string render_report(const std::vector<RowReport>& reports,
                          const std::string& format);

}  // namespace dupcalc

#endif  // DUPCALC_VERIFY_HPP_
