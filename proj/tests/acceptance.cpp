// Acceptance checks for the duplicated-product workbench.  Each
// criterion prints one PASS/FAIL line; the binary exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dupcalc/axioms.hpp"
#include "dupcalc/catalog.hpp"
#include "dupcalc/conditions.hpp"
#include "dupcalc/congruence.hpp"
#include "dupcalc/duplicate.hpp"
#include "dupcalc/free.hpp"
#include "dupcalc/hom.hpp"
#include "dupcalc/ops.hpp"
#include "dupcalc/smoke.hpp"
#include "dupcalc/verify.hpp"

using namespace dupcalc;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << label;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

bool require(bool cond, const std::string& msg, std::string& detail) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

std::vector<FiniteAlgebra> members(std::initializer_list<const char*> keys) {
  std::vector<FiniteAlgebra> out;
  for (const char* k : keys) out.push_back(catalog_algebra(k));
  return out;
}

bool conditions_pass(const char* dup_key,
                     std::initializer_list<const char*> base_keys,
                     std::string& detail) {
  const Duplicator& g = catalog_duplicator(dup_key);
  std::vector<FiniteAlgebra> cls = members(base_keys);
  SearchBudget budget;
  for (const ConditionReport& r :
       {check_condition_L(g, cls, CheckMode::witness, budget),
        check_condition_M(g, cls, CheckMode::witness, budget),
        check_condition_P(g, cls, CheckMode::witness, budget)}) {
    if (r.verdict != Verdict::pass) {
      detail = std::string(dup_key) + " failed (" + r.condition + ")";
      return false;
    }
  }
  return true;
}

bool suite_passes(const FiniteAlgebra& alg, const char* suite_key,
                  std::string& detail, const Limits& limits = {}) {
  AxiomResult r = run_axiom_suite(alg, catalog_axiom_suite(suite_key), limits);
  if (!r.pass) {
    detail = alg.name + " vs " + suite_key + ": " +
             r.failures.front().obligation_id + " " +
             r.failures.front().detail;
  }
  return r.pass;
}

bool row_passes(const std::string& table, const std::string& id,
                std::string& detail) {
  for (const RowSpec& spec : table_rows(table))
    if (spec.id == id) {
      RowReport rep = run_row(spec, VerifyConfig{});
      if (!rep.pass()) detail = render_report({rep}, "text");
      return rep.pass();
    }
  detail = "row " + id + " not found";
  return false;
}

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "recovery, merge and swap witnesses on five lattices",
            [](std::string& detail) {
    if (!conditions_pass("Gamma_BLu", {"2Du", "3chain", "2x2", "M3", "N5"},
                         detail))
      return false;
    // The merge witness literally projects: v((a,b),(c,d)) = (a,d).
    const Duplicator& g = catalog_duplicator("Gamma_BLu");
    const FiniteAlgebra& three = catalog_algebra("3chain");
    FiniteAlgebra p = duplicate(g, three);
    Term merge = parse_term(g.witnesses.merge, p.sig);
    for (Element x = 0; x < p.size; ++x)
      for (Element y = 0; y < p.size; ++y) {
        Element want = (x / three.size) * three.size + (y % three.size);
        std::vector<Element> args{x, y};
        if (eval_term(merge, p, args) != want)
          return require(false, "merge is not the (a,d) projection", detail);
      }
    return true;
  });

  criterion(2, "the duplicated 2-chain is the four-element bilattice",
            [](std::string& detail) {
    FiniteAlgebra p = duplicate(catalog_duplicator("Gamma_BLu"),
                                catalog_algebra("2Du"));
    if (!require(find_isomorphism(p, catalog_algebra("4DBu")).has_value(),
                 "no isomorphism with 4DBu", detail))
      return false;
    return suite_passes(p, "distributive-bilattice", detail);
  });

  criterion(3, "the two near-miss duplicators fail exactly one condition",
            [](std::string& detail) {
    SearchBudget budget;
    std::vector<FiniteAlgebra> cls = members({"2B"});
    {
      const Duplicator& g = catalog_duplicator("Gamma_Ex51_1");
      if (!require(check_condition_L(g, cls, CheckMode::witness, budget)
                           .verdict == Verdict::pass,
                   "Ex51_1 should recover", detail))
        return false;
      ConditionReport p = check_condition_P(g, cls, CheckMode::search, budget);
      if (!require(p.verdict == Verdict::fail, "Ex51_1 should fail (P)",
                   detail))
        return false;
      if (!require(p.functions_explored <= 36,
                   "closure larger than expected: " +
                       std::to_string(p.functions_explored),
                   detail))
        return false;
    }
    {
      const Duplicator& g = catalog_duplicator("Gamma_Ex51_2");
      if (!require(check_condition_P(g, cls, CheckMode::witness, budget)
                           .verdict == Verdict::pass,
                   "Ex51_2 should permute", detail))
        return false;
      ConditionReport l = check_condition_L(g, cls, CheckMode::search, budget,
                                            /*existential=*/true);
      if (!require(l.verdict == Verdict::fail, "Ex51_2 should fail (L')",
                   detail))
        return false;
      bool cmpl_failed = false;
      for (const Obligation& o : l.obligations)
        if (o.id.find("cmpl") != std::string::npos &&
            o.verdict == Verdict::fail)
          cmpl_failed = true;
      if (!require(cmpl_failed, "the failing obligation should be cmpl",
                   detail))
        return false;
    }
    return true;
  });

  criterion(4, "congruences and subdirect irreducibility transfer",
            [](std::string& detail) {
    const FiniteAlgebra& three = catalog_algebra("3chain");
    CongruenceLattice base = congruence_lattice(three);
    if (!require(base.elements.size() == 4, "|Con(3chain)| != 4", detail))
      return false;
    FiniteAlgebra p = duplicate(catalog_duplicator("Gamma_BLu"), three);
    CongruenceLattice lifted = congruence_lattice(p);
    if (!require(lifted.elements.size() == base.elements.size(),
                 "congruence counts differ", detail))
      return false;
    if (!require(lattices_order_isomorphic(base, lifted),
                 "congruence lattices not order-isomorphic", detail))
      return false;
    bool base_si =
        is_subdirectly_irreducible(catalog_algebra("2Du")).irreducible;
    bool prod_si =
        is_subdirectly_irreducible(catalog_algebra("4DBu")).irreducible;
    return require(base_si == prod_si, "SI status not preserved", detail);
  });

  criterion(5, "free algebras commute with duplication",
            [](std::string& detail) {
    FreeAlgebraResult fb = free_algebra({catalog_algebra("4DBu")}, 1);
    if (!require(fb.algebra.size == 16, "free bilattice on one generator "
                                        "should have 16 elements",
                 detail))
      return false;
    FreeAlgebraResult fl = free_algebra({catalog_algebra("2Du")}, 2);
    FiniteAlgebra p = duplicate(catalog_duplicator("Gamma_BLu"), fl.algebra);
    if (!require(find_isomorphism(fb.algebra, p).has_value(),
                 "free bilattice not isomorphic to duplicated free lattice",
                 detail))
      return false;
    // The canonical map x -> (x1, x2) extends to such an isomorphism.
    Element pair = fl.generators[0] * fl.algebra.size + fl.generators[1];
    std::optional<Homomorphism> h =
        extend_from_generators(fb.algebra, p, {fb.generators[0]}, {pair});
    if (!require(h.has_value(), "generator image does not extend", detail))
      return false;
    std::vector<char> hit(p.size, 0);
    for (Element e = 0; e < fb.algebra.size; ++e) hit[(*h)(e)] = 1;
    for (char c : hit)
      if (!c) return require(false, "canonical map is not onto", detail);
    return true;
  });

  criterion(6, "category equivalence smoke tests on chain pairs",
            [](std::string& detail) {
    const FiniteAlgebra& two = catalog_algebra("2Du");
    const FiniteAlgebra& three = catalog_algebra("3chain");
    const Duplicator& g = catalog_duplicator("Gamma_BLu");
    for (const FiniteAlgebra* a : {&two, &three})
      for (const FiniteAlgebra* b : {&two, &three}) {
        SmokeReport r = equivalence_smoke_test(g, *a, *b);
        if (!r.pass) {
          detail = a->name + " x " + b->name + ": " + r.failures.front();
          return false;
        }
        if (!require(r.hom_count_base == r.hom_count_duplicated,
                     "hom counts differ", detail))
          return false;
      }
    SmokeReport aa = equivalence_smoke_test(g, two, two);
    return require(aa.hom_count_base == 3 && aa.subuniverse_count == 3,
                   "unexpected counts for the 2-chain", detail);
  });

  criterion(7, "iterated duplication reaches the 256-element trilattice",
            [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    if (!conditions_pass("Gamma_TLtf", {"4DBu"}, detail)) return false;
    if (!suite_passes(catalog_algebra("16TLtf"), "trilattice-tf", detail))
      return false;
    FiniteAlgebra via_binary = duplicate(
        catalog_duplicator("Gamma_TLtfi_binary"), catalog_algebra("16DBCu"));
    FiniteAlgebra via_4ary = duplicate(catalog_duplicator("Gamma_TLtfi_4ary"),
                                       catalog_algebra("4DMu"));
    const FiniteAlgebra& direct = catalog_algebra("256");
    if (!require(via_binary.tables == direct.tables,
                 "binary construction differs from the direct table", detail))
      return false;
    if (!require(via_4ary.tables == direct.tables,
                 "4-ary construction differs from the direct table", detail))
      return false;
    Limits limits;
    limits.eval_cap = 50'000'000;
    if (!suite_passes(direct, "trilattice-tfi", detail, limits)) return false;
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return require(secs < 60, "criterion took " + std::to_string(secs) + "s",
                   detail);
  });

  criterion(8, "residuation checks and implication transfer",
            [](std::string& detail) {
    for (const char* key : {"2D", "3chain", "2x2"})
      if (!require(residuum(catalog_algebra(key), "wedge").exists,
                   std::string(key) + " should be residuated", detail))
        return false;
    ResiduumResult bad = residuum(catalog_algebra("N5"), "wedge");
    if (!require(!bad.exists && bad.fail_a >= 0,
                 "N5 should fail with a witness", detail))
      return false;

    const FiniteAlgebra& h = catalog_algebra("3H");
    FiniteAlgebra ph = duplicate(catalog_duplicator("Gamma_H"), h);
    for (Element x = 0; x < ph.size; ++x)
      for (Element y = 0; y < ph.size; ++y) {
        std::vector<Element> hi{x / h.size, y / h.size};
        std::vector<Element> lo{x % h.size, y % h.size};
        Element want = h.apply("imp", hi) * h.size + h.apply("imp", lo);
        std::vector<Element> args{x, y};
        if (ph.apply("imp_k", args) != want)
          return require(false, "imp_k is not componentwise", detail);
      }

    const FiniteAlgebra& bh = catalog_algebra("2x2bH");
    FiniteAlgebra pbh = duplicate(catalog_duplicator("Gamma_bH"), bh);
    Term derived = parse_term(
        "(vee_k (wedge_k (imp_t x1 x2) true_t)"
        " (wedge_k (neg (imp_t (neg x1) (neg x2))) false_t))",
        pbh.sig);
    for (Element x = 0; x < pbh.size; ++x)
      for (Element y = 0; y < pbh.size; ++y) {
        std::vector<Element> hi{x / bh.size, y / bh.size};
        std::vector<Element> lo{x % bh.size, y % bh.size};
        Element want = bh.apply("imp", hi) * bh.size + bh.apply("imp", lo);
        std::vector<Element> args{x, y};
        if (eval_term(derived, pbh, args) != want)
          return require(false,
                         "derived knowledge implication is not componentwise",
                         detail);
      }
    return true;
  });

  criterion(9, "case-defined operations match their entry formulas",
            [](std::string& detail) {
    for (const char* id : {"guard/D", "failure/KL", "implicative/B",
                           "Moore/B"})
      if (!row_passes("table1", id, detail)) return false;
    FiniteAlgebra p = duplicate(catalog_duplicator("Gamma_MBL"),
                                catalog_algebra("4BM"));
    const AxiomSuite& suite = catalog_axiom_suite("modal-bilattice");
    int box_laws = 0;
    for (const AxiomObligation& o : suite.obligations)
      if (o.id.rfind("box:", 0) == 0) ++box_laws;
    if (!require(box_laws >= 3, "modal suite is missing box laws", detail))
      return false;
    return suite_passes(p, "modal-bilattice", detail);
  });

  criterion(10, "disjoint duplicators cover mixed and many-factor products",
            [](std::string& detail) {
    if (!require(check_condition_D(catalog_duplicator("Gamma_IT")).verdict ==
                     Verdict::pass,
                 "Gamma_IT should be disjoint", detail))
      return false;
    if (!require(check_condition_D(catalog_duplicator("Gamma_BLu")).verdict ==
                     Verdict::fail,
                 "Gamma_BLu should not be disjoint", detail))
      return false;
    FiniteAlgebra mixed =
        duplicate_mixed(catalog_duplicator("Gamma_preBLu"),
                        members({"2Du", "3chain"}));
    if (!require(mixed.size == 6, "mixed product should have 6 elements",
                 detail))
      return false;
    if (!suite_passes(mixed, "interlaced-prebilattice", detail)) return false;
    return conditions_pass("Gamma_TLtfi_4ary", {"4DMu"}, detail);
  });

  criterion(11, "reproduction runs are deterministic and fast",
            [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "dupcalc-acceptance";
    fs::create_directories(dir);
    for (const char* table : {"table1", "table2"}) {
      std::vector<std::string> outputs;
      for (int run = 0; run < 2; ++run) {
        fs::path out = dir / (std::string(table) + "-" +
                              std::to_string(run) + ".txt");
        std::string cmd = std::string("\"") + DUPCALC_BIN + "\" reproduce " +
                          table + " > \"" + out.string() + "\" 2>&1";
        if (std::system(cmd.c_str()) != 0)
          return require(false,
                         std::string("reproduce ") + table + " exited "
                                                            "nonzero",
                         detail);
        outputs.push_back(read_all(out));
      }
      if (!require(!outputs[0].empty(), "empty report", detail)) return false;
      if (!require(outputs[0] == outputs[1],
                   std::string(table) + " runs differ", detail))
        return false;
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return require(secs < 300, "reproduction took " + std::to_string(secs) +
                                   "s",
                   detail);
  });

  return failures == 0 ? 0 : 1;
}
