#include "dupcalc/verify.hpp"

#include <chrono>
#include <functional>
#include <set>

#include <json.hpp>

#include "dupcalc/catalog.hpp"
#include "dupcalc/congruence.hpp"
#include "dupcalc/duplicate.hpp"
#include "dupcalc/error.hpp"
#include "dupcalc/free.hpp"
#include "dupcalc/hom.hpp"
#include "dupcalc/smoke.hpp"

namespace dupcalc {

bool RowReport::pass() const {
  for (const ClaimReport& c : claims)
    if (c.verdict != Verdict::pass) return false;
  return true;
}

bool RowReport::has_unknown() const {
  for (const ClaimReport& c : claims)
    if (c.verdict == Verdict::unknown) return true;
  return false;
}

namespace {

// Case-style definitions of the worked operations, as functions on pair
// encodings (element = a1 * n + a2 over the base chain {0..n-1}).
Element guard_cases(int n, Element x, Element y) {
  return x / n == n - 1 ? y : 0;
}

Element implic_cases(int n, Element x, Element y) {
  return x / n == n - 1 ? y : (n - 1) * n;  // else (1,0)
}

Element moore_cases(int n, Element x) {
  Element a1 = x / n;
  return a1 * n + (n - 1 - a1);
}

Element slash_cases(int n, Element x) {
  Element a1 = x / n, a2 = x % n;
  if (a1 == 0 || a1 == n - 1) a1 = n - 1 - a1;
  return a1 * n + a2;
}

ClaimReport formula_consistency(const std::string& row,
                                const FiniteAlgebra& product) {
  ClaimReport c{"formula-consistency", Verdict::pass, "", 0};
  int n = 0;
  std::string sym;
  std::function<Element(std::span<const Element>)> cases;
  if (row == "guard/D") {
    n = 2;
    sym = "guard";
    cases = [n](std::span<const Element> a) {
      return guard_cases(n, a[0], a[1]);
    };
  } else if (row == "implicative/B") {
    n = 2;
    sym = "imp";
    cases = [n](std::span<const Element> a) {
      return implic_cases(n, a[0], a[1]);
    };
  } else if (row == "Moore/B") {
    n = 2;
    sym = "moore";
    cases = [n](std::span<const Element> a) { return moore_cases(n, a[0]); };
  } else if (row == "failure/KL") {
    n = 3;
    sym = "slash";
    cases = [n](std::span<const Element> a) { return slash_cases(n, a[0]); };
  } else {
    c.verdict = Verdict::fail;
    c.artifact = "no case table for row " + row;
    return c;
  }
  int arity = product.sig.arity(sym);
  int checked = 0;
  for_each_tuple(product.size, arity, [&](std::span<const Element> args) {
    if (c.verdict != Verdict::pass) return;
    ++checked;
    Element got = product.apply(sym, args);
    Element want = cases(args);
    if (got != want) {
      c.verdict = Verdict::fail;
      c.artifact = sym + " disagrees with its case form at " +
                   product.label_of(args[0]) +
                   (arity > 1 ? "," + product.label_of(args[1]) : "") +
                   ": formula " + product.label_of(got) + ", cases " +
                   product.label_of(want);
    }
  });
  if (c.verdict == Verdict::pass)
    c.artifact = sym + " matches its case form on all " +
                 std::to_string(checked) + " inputs";
  return c;
}

ClaimReport cross_construction() {
  ClaimReport c{"cross-construction", Verdict::pass, "", 0};
  FiniteAlgebra via_binary = duplicate(catalog_duplicator("Gamma_TLtfi_binary"),
                                       catalog_algebra("16DBCu"));
  FiniteAlgebra via_4ary = duplicate(catalog_duplicator("Gamma_TLtfi_4ary"),
                                     catalog_algebra("4DMu"));
  const FiniteAlgebra& direct = catalog_algebra("256");
  if (!find_isomorphism(via_binary, via_4ary)) {
    c.verdict = Verdict::fail;
    c.artifact = "two-step and four-factor constructions differ";
    return c;
  }
  if (!find_isomorphism(via_4ary, direct)) {
    c.verdict = Verdict::fail;
    c.artifact = "four-factor construction differs from the direct table";
    return c;
  }
  c.artifact = "both constructions isomorphic to the 256-element table";
  return c;
}

std::string summarize(const ConditionReport& r) {
  std::string out = r.condition + "=" + to_string(r.verdict);
  for (const Obligation& o : r.obligations)
    if (o.verdict != Verdict::pass)
      out += "; " + o.id + ": " +
             (o.detail.empty() ? to_string(o.verdict) : o.detail);
  return out;
}

Verdict merge_verdicts(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::pass;
}

}  // namespace

RowReport run_row(const RowSpec& spec, const VerifyConfig& config) {
  RowReport report;
  report.id = spec.id;
  report.finite_witness = spec.finite_witness;

  auto claim = [&](const std::string& id,
                   const std::function<ClaimReport()>& body) {
    auto start = std::chrono::steady_clock::now();
    ClaimReport c;
    try {
      c = body();
    } catch (const std::exception& e) {
      c.verdict = Verdict::fail;
      c.artifact = e.what();
    }
    c.id = id;
    if (config.timings)
      c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    report.claims.push_back(std::move(c));
    return report.claims.back().verdict;
  };

  const Duplicator& g = catalog_duplicator(spec.duplicator_key);
  std::vector<FiniteAlgebra> factors;
  for (const std::string& key : spec.base_keys)
    factors.push_back(catalog_algebra(key));
  // Condition checks run over the distinct base algebras.
  std::vector<FiniteAlgebra> members;
  std::set<std::string> seen;
  for (const FiniteAlgebra& f : factors)
    if (seen.insert(f.name).second) members.push_back(f);

  claim("validate", [&] {
    ClaimReport c;
    std::vector<std::string> bad = validate_duplicator(g);
    c.verdict = bad.empty() ? Verdict::pass : Verdict::fail;
    c.artifact = bad.empty()
                     ? std::to_string(g.entries.size()) + " entries, m=" +
                           std::to_string(g.m)
                     : bad.front();
    return c;
  });

  claim("conditions", [&] {
    ClaimReport c;
    ConditionReport l =
        check_condition_L(g, members, config.mode, config.budget);
    ConditionReport m =
        check_condition_M(g, members, config.mode, config.budget);
    c.verdict = merge_verdicts(l.verdict, m.verdict);
    c.artifact = summarize(l) + "; " + summarize(m);
    if (g.mode == DuplicatorMode::disjoint) {
      ConditionReport d = check_condition_D(g);
      c.verdict = merge_verdicts(c.verdict, d.verdict);
      c.artifact += "; " + summarize(d);
    } else {
      ConditionReport p =
          check_condition_P(g, members, config.mode, config.budget);
      c.verdict = merge_verdicts(c.verdict, p.verdict);
      c.artifact += "; " + summarize(p);
    }
    return c;
  });

  FiniteAlgebra product =
      spec.mixed ? duplicate_mixed(g, factors) : duplicate(g, factors.front());
  claim("construct", [&] {
    ClaimReport c;
    product.validate();
    c.verdict = Verdict::pass;
    c.artifact = "product with " + std::to_string(product.size) + " elements";
    return c;
  });

  if (!spec.target_key.empty())
    claim("isomorphism", [&] {
      ClaimReport c;
      const FiniteAlgebra& target = catalog_algebra(spec.target_key);
      if (find_isomorphism(product, target)) {
        c.verdict = Verdict::pass;
        c.artifact = "isomorphic to " + target.name;
      } else {
        c.verdict = Verdict::fail;
        c.artifact = "not isomorphic to " + target.name;
      }
      return c;
    });

  if (!spec.suite_key.empty())
    claim("axioms", [&] {
      ClaimReport c;
      const AxiomSuite& suite = catalog_axiom_suite(spec.suite_key);
      AxiomResult r = run_axiom_suite(product, suite, config.limits);
      c.verdict = r.pass ? Verdict::pass : Verdict::fail;
      c.artifact = spec.suite_key + ": " + std::to_string(r.checked) +
                   " obligations";
      for (const AxiomFailure& f : r.failures)
        c.artifact += "; " + f.obligation_id + ": " + f.detail;
      return c;
    });

  for (const std::string& extra : spec.extra_claims) {
    if (extra == "congruence-transfer")
      claim(extra, [&] {
        ClaimReport c;
        CongruenceLattice base_con =
            congruence_lattice(members.front(), config.limits);
        CongruenceLattice prod_con = congruence_lattice(product, config.limits);
        bool ok = lattices_order_isomorphic(base_con, prod_con);
        c.verdict = ok ? Verdict::pass : Verdict::fail;
        c.artifact = "Con(base) has " +
                     std::to_string(base_con.elements.size()) +
                     " elements, Con(product) has " +
                     std::to_string(prod_con.elements.size()) +
                     (ok ? "; order-isomorphic" : "; not order-isomorphic");
        return c;
      });
    else if (extra == "si-transfer")
      claim(extra, [&] {
        ClaimReport c;
        SubdirectIrreducibility base_si =
            is_subdirectly_irreducible(members.front(), config.limits);
        SubdirectIrreducibility prod_si =
            is_subdirectly_irreducible(product, config.limits);
        c.verdict = base_si.irreducible == prod_si.irreducible
                        ? Verdict::pass
                        : Verdict::fail;
        c.artifact = std::string("base ") +
                     (base_si.irreducible ? "SI" : "not SI") + ", product " +
                     (prod_si.irreducible ? "SI" : "not SI");
        return c;
      });
    else if (extra == "free-algebra")
      claim(extra, [&] {
        ClaimReport c;
        FreeAlgebraResult free_prod =
            free_algebra({product}, 1, config.limits);
        FreeAlgebraResult free_base =
            free_algebra({members.front()}, g.m, config.limits);
        FiniteAlgebra lifted = duplicate(g, free_base.algebra);
        bool ok = find_isomorphism(free_prod.algebra, lifted).has_value();
        c.verdict = ok ? Verdict::pass : Verdict::fail;
        c.artifact = "free product algebra on one generator has " +
                     std::to_string(free_prod.algebra.size) +
                     " elements; duplicated base free algebra has " +
                     std::to_string(lifted.size) +
                     (ok ? "; isomorphic" : "; not isomorphic");
        return c;
      });
    else if (extra == "smoke-test")
      claim(extra, [&] {
        ClaimReport c;
        SmokeReport r = equivalence_smoke_test(g, members.front(),
                                               members.front());
        c.verdict = r.pass ? Verdict::pass : Verdict::fail;
        c.artifact = "homs " + std::to_string(r.hom_count_base) + "/" +
                     std::to_string(r.hom_count_duplicated) +
                     ", subuniverses " + std::to_string(r.subuniverse_count) +
                     ", congruences " + std::to_string(r.congruence_count);
        for (const std::string& f : r.failures) c.artifact += "; " + f;
        return c;
      });
    else if (extra == "formula-consistency")
      claim(extra, [&] { return formula_consistency(spec.id, product); });
    else if (extra == "separation")
      claim(extra, [&] {
        ClaimReport c;
        FreeAlgebraResult f = free_algebra(members, 2, config.limits);
        SeparationResult r = separates_into(f.algebra, members);
        c.verdict = r.separates ? Verdict::pass : Verdict::fail;
        c.artifact =
            r.separates
                ? "homomorphisms separate the free algebra on 2 generators (" +
                      std::to_string(f.algebra.size) + " elements)"
                : "inseparable pair (" + std::to_string(r.fail_a) + "," +
                      std::to_string(r.fail_b) + ")";
        return c;
      });
    else if (extra == "cross-construction")
      claim(extra, [&] { return cross_construction(); });
    else
      claim(extra, [&] {
        ClaimReport c;
        c.verdict = Verdict::fail;
        c.artifact = "unknown claim id";
        return c;
      });
  }
  return report;
}

std::vector<RowSpec> table_rows(const std::string& which) {
  if (which == "table1")
    return {
        {"BL/CL", {"N5", "2Du", "3chain", "2x2", "M3"}, "Gamma_BLu",
         "interlaced-bilattice", "", {}, false, true},
        {"DB/D", {"2Du"}, "Gamma_BLu", "distributive-bilattice", "4DBu",
         {"congruence-transfer", "si-transfer", "free-algebra", "smoke-test"},
         false, false},
        {"DBC/DM", {"4DMu"}, "Gamma_DBCu", "conflation", "16DBCu", {}, false,
         false},
        {"TLtf/DBu", {"4DBu"}, "Gamma_TLtf", "trilattice-tf", "16TLtf", {},
         false, false},
        {"TLtfi/DBCu", {"16DBCu"}, "Gamma_TLtfi_binary", "trilattice-tfi",
         "256", {}, false, false},
        {"BLik/H", {"3H"}, "Gamma_H", "bilattice-k-implication", "", {},
         false, true},
        {"BLit/bH", {"2x2bH"}, "Gamma_bH", "bilattice-t-implication", "", {},
         false, true},
        {"guard/D", {"2D"}, "Gamma_guard", "distributive-bilattice-bounded",
         "", {"formula-consistency"}, false, false},
        {"failure/KL", {"3DM"}, "Gamma_slash",
         "distributive-bilattice-bounded", "", {"formula-consistency"}, false,
         false},
        {"implicative/B", {"2B"}, "Gamma_implic",
         "distributive-bilattice-bounded", "", {"formula-consistency"}, false,
         false},
        {"Moore/B", {"2B"}, "Gamma_L", "distributive-bilattice-bounded", "",
         {"formula-consistency"}, false, false},
        {"RBL/RL", {"3RL"}, "Gamma_RBL", "distributive-bilattice-bounded",
         "", {}, false, true},
        {"MBL/BM", {"4BM"}, "Gamma_MBL", "modal-bilattice", "", {}, false,
         true},
    };
  if (which == "table2")
    return {
        {"TLtf/4factor", {"2Du"}, "Gamma_TLtf_4ary", "trilattice-tf",
         "16TLtf", {}, false, false},
        {"TLtfi/4factor", {"4DMu"}, "Gamma_TLtfi_4ary", "", "",
         {"cross-construction"}, false, false},
        {"preBL/mixed", {"2Du", "3chain"}, "Gamma_preBLu",
         "interlaced-prebilattice", "", {}, true, false},
        {"IT/mixed", {"2pBL", "4pBL"}, "Gamma_IT", "interlaced-trilattice",
         "", {}, true, false},
        {"ITmt/mixed", {"4DBu", "4DBu"}, "Gamma_ITmt",
         "interlaced-trilattice-t", "", {}, true, false},
        {"TL/4factor", {"2Du", "3chain", "2Du", "3chain"}, "Gamma_TL_4ary",
         "interlaced-trilattice", "", {}, true, false},
    };
  throw DomainError("unknown table '" + which + "'");
}

std::vector<RowReport> run_table(const std::string& which,
                                 const VerifyConfig& config) {
  std::vector<RowReport> reports;
  for (const RowSpec& spec : table_rows(which))
    reports.push_back(run_row(spec, config));
  return reports;
}

std::string render_report(const std::vector<RowReport>& reports,
                          const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const RowReport& r : reports) {
      nlohmann::ordered_json row;
      row["row"] = r.id;
      if (r.finite_witness) row["finite-witness"] = true;
      row["claims"] = nlohmann::ordered_json::array();
      for (const ClaimReport& c : r.claims)
        row["claims"].push_back({{"id", c.id},
                                 {"verdict", to_string(c.verdict)},
                                 {"artifact", c.artifact},
                                 {"millis", c.millis}});
      out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
  }
  if (format != "text") throw DomainError("unknown format '" + format + "'");
  std::string out;
  for (const RowReport& r : reports) {
    out += "row " + r.id;
    if (r.finite_witness) out += " [finite-witness]";
    out += ": " + std::string(r.pass() ? "pass"
                                       : r.has_unknown() ? "unknown" : "fail");
    out += "\n";
    for (const ClaimReport& c : r.claims) {
      out += "  " + c.id + ": " + to_string(c.verdict);
      if (!c.artifact.empty()) out += "  (" + c.artifact + ")";
      out += "\n";
    }
  }
  return out;
}

}  // namespace dupcalc
