#include <doctest.h>

#include <map>

#include "dupcalc/axioms.hpp"
#include "dupcalc/catalog.hpp"
#include "dupcalc/conditions.hpp"
#include "dupcalc/error.hpp"

using namespace dupcalc;

TEST_CASE("catalog lookup and listing") {
  CHECK(catalog_has_algebra("4DBu"));
  CHECK(catalog_has_algebra("2chain"));  // alias of 2Du
  CHECK(catalog_algebra("2chain").name == "2Du");
  CHECK_FALSE(catalog_has_algebra("nope"));
  CHECK(catalog_has_duplicator("Gamma_BLu"));
  CHECK_THROWS_AS(catalog_algebra("nope"), DomainError);
  CHECK_THROWS_AS(catalog_duplicator("nope"), DomainError);
  CHECK_THROWS_AS(catalog_axiom_suite("nope"), DomainError);

  CHECK(catalog_list("algebra").size() >= 20);
  CHECK(catalog_list("duplicator").size() >= 15);
  CHECK(catalog_list("").size() >
        catalog_list("algebra").size() + catalog_list("duplicator").size());
  for (const CatalogInfo& e : catalog_list("")) {
    CHECK(!e.key.empty());
    CHECK(!e.description.empty());
  }
}

TEST_CASE("every catalog algebra validates and passes its intended suite") {
  // 256 is covered by the acceptance run; its 3-variable identities over
  // 256 elements are too slow for the unit tier.
  const std::map<std::string, std::string> intended = {
      {"2Du", "distributive-lattice"},
      {"3chain", "distributive-lattice"},
      {"2x2", "distributive-lattice"},
      {"M3", "lattice"},
      {"N5", "lattice"},
      {"2D", "bounded-distributive-lattice"},
      {"3D", "bounded-distributive-lattice"},
      {"2B", "boolean"},
      {"3DM", "kleene"},
      {"4DM", "de-morgan"},
      {"4DMu", "de-morgan-unbounded"},
      {"3Bru", "brouwerian"},
      {"3H", "heyting"},
      {"2x2bH", "bi-heyting"},
      {"3RL", "residuated"},
      {"4BM", "bimodal"},
      {"4DBu", "distributive-bilattice"},
      {"4DB", "distributive-bilattice-bounded"},
      {"9DB", "distributive-bilattice-bounded"},
      {"16DBCu", "conflation"},
      {"16TLtf", "trilattice-tf"},
      {"2pp", "distributive-trilattice"},
      {"2pm", "distributive-trilattice"},
      {"2mp", "distributive-trilattice"},
      {"2mm", "distributive-trilattice"},
      {"4p", "trilattice-t"},
      {"4m", "trilattice-t"},
      {"2pBL", "interlaced-prebilattice"},
      {"4pBL", "interlaced-prebilattice"},
  };
  for (const auto& [key, suite_key] : intended) {
    const FiniteAlgebra& alg = catalog_algebra(key);
    CHECK_NOTHROW(alg.validate());
    AxiomResult r = run_axiom_suite(alg, catalog_axiom_suite(suite_key));
    std::string msg = key + " vs " + suite_key;
    for (const AxiomFailure& f : r.failures)
      msg += "; " + f.obligation_id + ": " + f.detail;
    CHECK_MESSAGE(r.pass, msg);
  }
}

TEST_CASE("every catalog duplicator witness-verifies over its base class") {
  const std::map<std::string, std::vector<std::string>> bases = {
      {"Gamma_BLu", {"2Du", "3chain", "2x2", "M3", "N5"}},
      {"Gamma_BL", {"2D", "3D"}},
      {"Gamma_DBCu", {"4DMu"}},
      {"Gamma_DBC", {"4DM", "3DM"}},
      {"Gamma_TLtf", {"4DBu"}},
      {"Gamma_TLtfi_binary", {"16DBCu"}},
      {"Gamma_TLtf_4ary", {"2Du", "3chain"}},
      {"Gamma_TLtfi_4ary", {"4DMu"}},
      {"Gamma_H", {"3H"}},
      {"Gamma_Hprime", {"3H"}},
      {"Gamma_BR", {"3Bru"}},
      {"Gamma_bH", {"2x2bH"}},
      {"Gamma_guard", {"2D"}},
      {"Gamma_slash", {"3DM"}},
      {"Gamma_implic", {"2B"}},
      {"Gamma_L", {"2B"}},
      {"Gamma_RBL", {"3RL"}},
      {"Gamma_MBL", {"4BM"}},
      {"Gamma_preBLu", {"2Du", "3chain"}},
      {"Gamma_IT", {"2pBL", "4pBL"}},
      {"Gamma_ITmt", {"4DBu"}},
      {"Gamma_TL_4ary", {"2Du", "3chain"}},
  };
  SearchBudget budget;
  for (const auto& [key, base_keys] : bases) {
    const Duplicator& g = catalog_duplicator(key);
    CHECK_MESSAGE(validate_duplicator(g).empty(), key);
    std::vector<FiniteAlgebra> cls;
    for (const std::string& b : base_keys) cls.push_back(catalog_algebra(b));
    auto report_msg = [&key](const ConditionReport& r) {
      std::string msg = key + " (" + r.condition + ")";
      for (const Obligation& o : r.obligations)
        if (o.verdict != Verdict::pass) msg += "; " + o.id + ": " + o.detail;
      return msg;
    };
    ConditionReport l = check_condition_L(g, cls, CheckMode::witness, budget);
    CHECK_MESSAGE(l.verdict == Verdict::pass, report_msg(l));
    ConditionReport m = check_condition_M(g, cls, CheckMode::witness, budget);
    CHECK_MESSAGE(m.verdict == Verdict::pass, report_msg(m));
    if (g.mode == DuplicatorMode::disjoint) {
      ConditionReport d = check_condition_D(g);
      CHECK_MESSAGE(d.verdict == Verdict::pass, report_msg(d));
    } else {
      ConditionReport p =
          check_condition_P(g, cls, CheckMode::witness, budget);
      CHECK_MESSAGE(p.verdict == Verdict::pass, report_msg(p));
    }
  }
}
