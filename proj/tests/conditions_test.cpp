#include <doctest.h>

#include "dupcalc/catalog.hpp"
#include "dupcalc/conditions.hpp"
#include "dupcalc/smoke.hpp"

using namespace dupcalc;

namespace {

std::vector<FiniteAlgebra> members(std::initializer_list<const char*> keys) {
  std::vector<FiniteAlgebra> out;
  for (const char* k : keys) out.push_back(catalog_algebra(k));
  return out;
}

}  // namespace

TEST_CASE("witness mode verifies the bilattice duplicator on lattices") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  std::vector<FiniteAlgebra> cls =
      members({"2Du", "3chain", "2x2", "M3", "N5"});
  SearchBudget budget;
  CHECK(check_condition_L(g, cls, CheckMode::witness, budget).verdict ==
        Verdict::pass);
  CHECK(check_condition_M(g, cls, CheckMode::witness, budget).verdict ==
        Verdict::pass);
  CHECK(check_condition_P(g, cls, CheckMode::witness, budget).verdict ==
        Verdict::pass);
}

TEST_CASE("search mode rediscovers recovery terms") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  std::vector<FiniteAlgebra> cls = members({"2Du"});
  SearchBudget budget;
  ConditionReport l = check_condition_L(g, cls, CheckMode::search, budget);
  CHECK(l.verdict == Verdict::pass);
  CHECK(l.functions_explored > 0);
  for (const Obligation& o : l.obligations) CHECK(!o.witness.empty());
  CHECK(check_condition_M(g, cls, CheckMode::search, budget).verdict ==
        Verdict::pass);
  CHECK(check_condition_P(g, cls, CheckMode::search, budget).verdict ==
        Verdict::pass);
}

TEST_CASE("a duplicator without coordinate swaps fails the permutation "
          "condition exactly") {
  const Duplicator& g = catalog_duplicator("Gamma_Ex51_1");
  std::vector<FiniteAlgebra> cls = members({"2B"});
  SearchBudget budget;
  // Recovery succeeds at every coordinate.
  CHECK(check_condition_L(g, cls, CheckMode::witness, budget).verdict ==
        Verdict::pass);
  ConditionReport p = check_condition_P(g, cls, CheckMode::search, budget);
  CHECK(p.verdict == Verdict::fail);
  CHECK(p.functions_explored <= 36);
}

TEST_CASE("a coordinate-swapping duplicator can fail recovery exactly") {
  const Duplicator& g = catalog_duplicator("Gamma_Ex51_2");
  std::vector<FiniteAlgebra> cls = members({"2B"});
  SearchBudget budget;
  CHECK(check_condition_P(g, cls, CheckMode::witness, budget).verdict ==
        Verdict::pass);
  ConditionReport l = check_condition_L(g, cls, CheckMode::search, budget,
                                        /*existential=*/true);
  CHECK(l.verdict == Verdict::fail);
  bool cmpl_failed = false;
  for (const Obligation& o : l.obligations)
    if (o.id.find("cmpl") != std::string::npos &&
        o.verdict == Verdict::fail)
      cmpl_failed = true;
  CHECK(cmpl_failed);
}

TEST_CASE("the disjointness condition is syntactic") {
  CHECK(check_condition_D(catalog_duplicator("Gamma_IT")).verdict ==
        Verdict::pass);
  CHECK(check_condition_D(catalog_duplicator("Gamma_preBLu")).verdict ==
        Verdict::pass);
  CHECK(check_condition_D(catalog_duplicator("Gamma_BLu")).verdict ==
        Verdict::fail);
}

TEST_CASE("search results are deterministic across runs") {
  const Duplicator& g = catalog_duplicator("Gamma_Ex51_1");
  std::vector<FiniteAlgebra> cls = members({"2B"});
  SearchBudget budget;
  ConditionReport a = check_condition_P(g, cls, CheckMode::search, budget);
  ConditionReport b = check_condition_P(g, cls, CheckMode::search, budget);
  CHECK(a.verdict == b.verdict);
  CHECK(a.functions_explored == b.functions_explored);
  REQUIRE(a.obligations.size() == b.obligations.size());
  for (size_t i = 0; i < a.obligations.size(); ++i) {
    CHECK(a.obligations[i].id == b.obligations[i].id);
    CHECK(a.obligations[i].witness == b.obligations[i].witness);
    CHECK(a.obligations[i].detail == b.obligations[i].detail);
  }
}

TEST_CASE("a tiny function cap reports unknown, not a wrong verdict") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  std::vector<FiniteAlgebra> cls = members({"3chain"});
  SearchBudget tiny{1, 0};
  ConditionReport m = check_condition_M(g, cls, CheckMode::search, tiny);
  CHECK(m.verdict == Verdict::unknown);
}

TEST_CASE("witness verification for the four-factor duplicators") {
  SearchBudget budget;
  {
    const Duplicator& g = catalog_duplicator("Gamma_TLtf_4ary");
    std::vector<FiniteAlgebra> cls = members({"2Du", "3chain"});
    CHECK(check_condition_L(g, cls, CheckMode::witness, budget).verdict ==
          Verdict::pass);
    CHECK(check_condition_M(g, cls, CheckMode::witness, budget).verdict ==
          Verdict::pass);
    CHECK(check_condition_P(g, cls, CheckMode::witness, budget).verdict ==
          Verdict::pass);
  }
  {
    const Duplicator& g = catalog_duplicator("Gamma_TLtfi_4ary");
    std::vector<FiniteAlgebra> cls = members({"4DMu"});
    CHECK(check_condition_L(g, cls, CheckMode::witness, budget).verdict ==
          Verdict::pass);
    CHECK(check_condition_M(g, cls, CheckMode::witness, budget).verdict ==
          Verdict::pass);
    CHECK(check_condition_P(g, cls, CheckMode::witness, budget).verdict ==
          Verdict::pass);
  }
}

TEST_CASE("corrupting one table entry yields a localized counterexample") {
  Duplicator g = catalog_duplicator("Gamma_BLu");
  // Swap the coordinates in the first entry's first term: vee_t now
  // reads the wrong coordinate.
  g.entries[0].terms[0] = parse_term("(vee x2 x3)", g.base_sig);
  std::vector<FiniteAlgebra> cls = members({"2Du"});
  SearchBudget budget;
  ConditionReport m = check_condition_M(g, cls, CheckMode::witness, budget);
  ConditionReport l = check_condition_L(g, cls, CheckMode::witness, budget);
  bool localized = false;
  for (const auto& r : {l, m})
    for (const Obligation& o : r.obligations)
      if (o.verdict == Verdict::fail && !o.detail.empty()) localized = true;
  CHECK(localized);
}

TEST_CASE("equivalence smoke test on chain pairs") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  const FiniteAlgebra& two = catalog_algebra("2Du");
  const FiniteAlgebra& three = catalog_algebra("3chain");
  SmokeReport ab = equivalence_smoke_test(g, two, three);
  CHECK(ab.pass);
  CHECK(ab.hom_count_base == 6);
  CHECK(ab.hom_count_duplicated == 6);
  SmokeReport aa = equivalence_smoke_test(g, two, two);
  CHECK(aa.pass);
  CHECK(aa.hom_count_base == 3);
  CHECK(aa.subuniverse_count == 3);
  CHECK(aa.congruence_count == 2);
}
