// Command-line front end: catalog access, product construction, the
// structural checks, and the table reproduction pipelines.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dupcalc/catalog.hpp"
#include "dupcalc/conditions.hpp"
#include "dupcalc/congruence.hpp"
#include "dupcalc/duplicate.hpp"
#include "dupcalc/error.hpp"
#include "dupcalc/free.hpp"
#include "dupcalc/hom.hpp"
#include "dupcalc/io.hpp"
#include "dupcalc/ops.hpp"
#include "dupcalc/smoke.hpp"
#include "dupcalc/verify.hpp"

namespace {

using dupcalc::Verdict;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

dupcalc::FiniteAlgebra resolve_algebra(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0)
    return dupcalc::catalog_algebra(ref.substr(8));
  return dupcalc::load_algebra_file(ref);
}

dupcalc::Duplicator resolve_duplicator(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0)
    return dupcalc::catalog_duplicator(ref.substr(8));
  return dupcalc::load_duplicator_file(ref);
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty())
    std::cout << text;
  else
    dupcalc::write_file(out_file, text);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return kExitPass;
    case Verdict::fail:
      return kExitFail;
    case Verdict::unknown:
      return kExitUnknown;
  }
  return kExitUsage;
}

struct CommonFlags {
  std::string mode = "witness";
  long long budget_ms = 0;
  long long cap = 200'000;
  int depth = 0;  // reserved for bounded searches; 0 = library default
  bool json = false;
  std::string out_file;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_mode = false) {
  cmd->add_flag("--json", flags.json, "machine-readable output");
  cmd->add_option("-o", flags.out_file, "write output to a file");
  if (with_mode) {
    cmd->add_option("--mode", flags.mode, "witness|search")
        ->check(CLI::IsMember({"witness", "search"}));
    cmd->add_option("--budget-ms", flags.budget_ms,
                    "search wall-clock budget (0 = unlimited)");
    cmd->add_option("--cap", flags.cap, "search function cap");
    cmd->add_option("--depth", flags.depth, "search depth hint");
  }
}

dupcalc::CheckMode parse_mode(const std::string& mode) {
  return mode == "search" ? dupcalc::CheckMode::search
                          : dupcalc::CheckMode::witness;
}

ordered_json condition_json(const dupcalc::ConditionReport& r) {
  ordered_json j;
  j["condition"] = r.condition;
  j["verdict"] = to_string(r.verdict);
  j["functions_explored"] = r.functions_explored;
  j["obligations"] = ordered_json::array();
  for (const dupcalc::Obligation& o : r.obligations)
    j["obligations"].push_back({{"id", o.id},
                                {"verdict", to_string(o.verdict)},
                                {"witness", o.witness},
                                {"detail", o.detail}});
  return j;
}

int cmd_check_duplicator(const std::string& gamma_ref,
                         const std::vector<std::string>& base_refs,
                         const CommonFlags& flags) {
  dupcalc::Duplicator g = resolve_duplicator(gamma_ref);
  std::vector<dupcalc::FiniteAlgebra> members;
  for (const std::string& ref : base_refs) members.push_back(resolve_algebra(ref));
  if (members.empty()) {
    std::cerr << "check-duplicator: at least one --base is required\n";
    return kExitUsage;
  }
  dupcalc::CheckMode mode = parse_mode(flags.mode);
  dupcalc::SearchBudget budget{flags.cap, flags.budget_ms};

  std::vector<dupcalc::ConditionReport> reports;
  reports.push_back(dupcalc::check_condition_L(g, members, mode, budget));
  reports.push_back(dupcalc::check_condition_M(g, members, mode, budget));
  if (g.mode == dupcalc::DuplicatorMode::disjoint)
    reports.push_back(dupcalc::check_condition_D(g));
  else
    reports.push_back(dupcalc::check_condition_P(g, members, mode, budget));

  Verdict overall = Verdict::pass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::fail) overall = Verdict::fail;
    if (r.verdict == Verdict::unknown && overall == Verdict::pass)
      overall = Verdict::unknown;
  }

  std::string text;
  if (flags.json) {
    ordered_json j;
    j["duplicator"] = g.name;
    j["verdict"] = to_string(overall);
    j["conditions"] = ordered_json::array();
    for (const auto& r : reports) j["conditions"].push_back(condition_json(r));
    text = j.dump(2) + "\n";
  } else {
    text = g.name + ": " + to_string(overall) + "\n";
    for (const auto& r : reports) {
      text += "  (" + r.condition + "): " + to_string(r.verdict) + "\n";
      for (const dupcalc::Obligation& o : r.obligations) {
        text += "    " + o.id + ": " + to_string(o.verdict);
        if (!o.witness.empty()) text += "  " + o.witness;
        if (!o.detail.empty()) text += "  [" + o.detail + "]";
        text += "\n";
      }
    }
  }
  emit(text, flags.out_file);
  return verdict_exit(overall);
}

int cmd_reproduce(const std::string& which, const CommonFlags& flags,
                  bool timings) {
  dupcalc::VerifyConfig config;
  config.mode = parse_mode(flags.mode);
  config.budget = {flags.cap, flags.budget_ms};
  config.timings = timings;
  std::vector<dupcalc::RowReport> reports = dupcalc::run_table(which, config);
  emit(dupcalc::render_report(reports, flags.json ? "json" : "text"),
       flags.out_file);
  bool any_fail = false, any_unknown = false;
  for (const auto& r : reports) {
    if (!r.pass()) (r.has_unknown() ? any_unknown : any_fail) = true;
  }
  if (any_fail) return kExitFail;
  if (any_unknown) return kExitUnknown;
  return kExitPass;
}

std::vector<dupcalc::Element> parse_image(const std::string& csv) {
  std::vector<dupcalc::Element> image;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) image.push_back(std::stoi(item));
  return image;
}

int run(int argc, char** argv) {
  CLI::App app{"finite-algebra duplication workbench"};
  app.require_subcommand(1);

  CommonFlags flags;

  // check-duplicator
  auto* check = app.add_subcommand("check-duplicator",
                                   "decide the duplicator conditions");
  std::string gamma_ref;
  std::vector<std::string> base_refs;
  check->add_option("gamma", gamma_ref)->required();
  check->add_option("--base", base_refs, "base class member refs");
  add_common(check, flags, true);

  // duplicate
  auto* dup = app.add_subcommand("duplicate", "build the product algebra");
  std::string alg_ref;
  dup->add_option("gamma", gamma_ref)->required();
  dup->add_option("base", alg_ref)->required();
  add_common(dup, flags);

  // duplicate-mixed
  auto* dupm = app.add_subcommand("duplicate-mixed",
                                  "build a mixed product over m factors");
  std::vector<std::string> factor_refs;
  dupm->add_option("gamma", gamma_ref)->required();
  dupm->add_option("factors", factor_refs)->required();
  add_common(dupm, flags);

  // lift
  auto* lift = app.add_subcommand("lift",
                                  "lift a base homomorphism to the products");
  std::string from_ref, to_ref, image_csv;
  lift->add_option("gamma", gamma_ref)->required();
  lift->add_option("from", from_ref)->required();
  lift->add_option("to", to_ref)->required();
  lift->add_option("image", image_csv, "comma-separated image list")
      ->required();
  add_common(lift, flags);

  // verify-axioms
  auto* axioms = app.add_subcommand("verify-axioms",
                                    "run a catalog axiom suite");
  std::string suite_key;
  axioms->add_option("algebra", alg_ref)->required();
  axioms->add_option("suite", suite_key)->required();
  add_common(axioms, flags);

  // congruences
  auto* cong = app.add_subcommand("congruences", "congruence lattice");
  cong->add_option("algebra", alg_ref)->required();
  add_common(cong, flags);

  // si
  auto* si = app.add_subcommand("si", "subdirect irreducibility");
  si->add_option("algebra", alg_ref)->required();
  add_common(si, flags);

  // homs
  auto* homs = app.add_subcommand("homs", "enumerate homomorphisms");
  homs->add_option("from", from_ref)->required();
  homs->add_option("to", to_ref)->required();
  add_common(homs, flags);

  // iso
  auto* iso = app.add_subcommand("iso", "find an isomorphism");
  iso->add_option("a", from_ref)->required();
  iso->add_option("b", to_ref)->required();
  add_common(iso, flags);

  // free
  auto* freec = app.add_subcommand("free",
                                   "free algebra over a finite class");
  std::vector<std::string> class_refs;
  int rank = 1;
  freec->add_option("members", class_refs)->required();
  freec->add_option("--rank", rank, "number of generators");
  add_common(freec, flags);

  // residuum
  auto* res = app.add_subcommand("residuum", "residuum table of a meet");
  std::string op_sym = "wedge";
  bool co = false;
  res->add_option("algebra", alg_ref)->required();
  res->add_option("--op", op_sym, "meet (or join with --co) symbol");
  res->add_flag("--co", co, "compute the co-residuum of a join");
  add_common(res, flags);

  // separate
  auto* sep = app.add_subcommand(
      "separate", "do homomorphisms into the class separate the algebra?");
  sep->add_option("algebra", alg_ref)->required();
  sep->add_option("members", class_refs)->required();
  add_common(sep, flags);

  // smoke
  auto* smoke = app.add_subcommand(
      "smoke", "spot-check the equivalence on homs/subuniverses/congruences");
  smoke->add_option("gamma", gamma_ref)->required();
  smoke->add_option("a", from_ref)->required();
  smoke->add_option("b", to_ref)->required();
  add_common(smoke, flags);

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "run a summary table");
  std::string which;
  bool timings = false;
  repro->add_option("table", which)
      ->required()
      ->check(CLI::IsMember({"table1", "table2"}));
  repro->add_flag("--timings", timings, "include per-claim milliseconds");
  add_common(repro, flags, true);

  // catalog
  auto* cat = app.add_subcommand("catalog", "browse the built-in catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog entries");
  std::string kind;
  cat_list->add_option("kind", kind, "algebra|duplicator|axiom-suite");
  add_common(cat_list, flags);
  auto* cat_show = cat->add_subcommand("show", "print one catalog entry");
  std::string show_kind, show_key;
  cat_show->add_option("kind", show_kind)->required();
  cat_show->add_option("key", show_key)->required();
  add_common(cat_show, flags);
  auto* cat_export = cat->add_subcommand("export",
                                         "write all entries as JSON files");
  std::string export_dir;
  cat_export->add_option("dir", export_dir)->required();

  CLI11_PARSE(app, argc, argv);

  if (check->parsed())
    return cmd_check_duplicator(gamma_ref, base_refs, flags);

  if (dup->parsed()) {
    dupcalc::FiniteAlgebra product =
        duplicate(resolve_duplicator(gamma_ref), resolve_algebra(alg_ref));
    emit(dupcalc::algebra_to_json(product) + "\n", flags.out_file);
    return kExitPass;
  }

  if (dupm->parsed()) {
    std::vector<dupcalc::FiniteAlgebra> factors;
    for (const std::string& ref : factor_refs)
      factors.push_back(resolve_algebra(ref));
    dupcalc::FiniteAlgebra product =
        duplicate_mixed(resolve_duplicator(gamma_ref), factors);
    emit(dupcalc::algebra_to_json(product) + "\n", flags.out_file);
    return kExitPass;
  }

  if (lift->parsed()) {
    dupcalc::Duplicator g = resolve_duplicator(gamma_ref);
    dupcalc::FiniteAlgebra from = resolve_algebra(from_ref);
    dupcalc::FiniteAlgebra to = resolve_algebra(to_ref);
    dupcalc::Homomorphism h{parse_image(image_csv)};
    dupcalc::Homomorphism lifted = lift_morphism(g, from, to, h);
    ordered_json j;
    j["image"] = lifted.image;
    emit(j.dump() + "\n", flags.out_file);
    return kExitPass;
  }

  if (axioms->parsed()) {
    dupcalc::FiniteAlgebra alg = resolve_algebra(alg_ref);
    dupcalc::AxiomResult r =
        run_axiom_suite(alg, dupcalc::catalog_axiom_suite(suite_key));
    std::string text;
    if (flags.json) {
      ordered_json j;
      j["algebra"] = alg.name;
      j["suite"] = suite_key;
      j["pass"] = r.pass;
      j["checked"] = r.checked;
      j["failures"] = ordered_json::array();
      for (const auto& f : r.failures)
        j["failures"].push_back(
            {{"id", f.obligation_id}, {"detail", f.detail}});
      text = j.dump(2) + "\n";
    } else {
      text = alg.name + " vs " + suite_key + ": " +
             (r.pass ? "pass" : "fail") + " (" + std::to_string(r.checked) +
             " obligations)\n";
      for (const auto& f : r.failures)
        text += "  " + f.obligation_id + ": " + f.detail + "\n";
    }
    emit(text, flags.out_file);
    return r.pass ? kExitPass : kExitFail;
  }

  if (cong->parsed()) {
    dupcalc::FiniteAlgebra alg = resolve_algebra(alg_ref);
    dupcalc::CongruenceLattice lat = congruence_lattice(alg);
    std::string text;
    if (flags.json) {
      ordered_json j;
      j["algebra"] = alg.name;
      j["count"] = lat.elements.size();
      j["congruences"] = ordered_json::array();
      for (const auto& theta : lat.elements)
        j["congruences"].push_back(theta.rep);
      text = j.dump(2) + "\n";
    } else {
      text = alg.name + ": " + std::to_string(lat.elements.size()) +
             " congruences\n";
      for (const auto& theta : lat.elements) {
        text += " ";
        for (dupcalc::Element r : theta.rep) text += " " + std::to_string(r);
        text += "\n";
      }
    }
    emit(text, flags.out_file);
    return kExitPass;
  }

  if (si->parsed()) {
    dupcalc::FiniteAlgebra alg = resolve_algebra(alg_ref);
    dupcalc::SubdirectIrreducibility r = is_subdirectly_irreducible(alg);
    std::string text =
        alg.name + ": " +
        (r.irreducible ? "subdirectly irreducible" : "not subdirectly "
                                                     "irreducible") +
        "\n";
    emit(text, flags.out_file);
    return kExitPass;
  }

  if (homs->parsed()) {
    dupcalc::FiniteAlgebra from = resolve_algebra(from_ref);
    dupcalc::FiniteAlgebra to = resolve_algebra(to_ref);
    std::vector<dupcalc::Homomorphism> hs = enumerate_homomorphisms(from, to);
    std::string text;
    if (flags.json) {
      ordered_json j;
      j["count"] = hs.size();
      j["homomorphisms"] = ordered_json::array();
      for (const auto& h : hs) j["homomorphisms"].push_back(h.image);
      text = j.dump(2) + "\n";
    } else {
      text = std::to_string(hs.size()) + " homomorphisms\n";
      for (const auto& h : hs) {
        text += " ";
        for (dupcalc::Element e : h.image) text += " " + std::to_string(e);
        text += "\n";
      }
    }
    emit(text, flags.out_file);
    return kExitPass;
  }

  if (iso->parsed()) {
    dupcalc::FiniteAlgebra a = resolve_algebra(from_ref);
    dupcalc::FiniteAlgebra b = resolve_algebra(to_ref);
    std::optional<dupcalc::Homomorphism> h = find_isomorphism(a, b);
    if (!h) {
      emit("not isomorphic\n", flags.out_file);
      return kExitFail;
    }
    ordered_json j;
    j["image"] = h->image;
    emit(j.dump() + "\n", flags.out_file);
    return kExitPass;
  }

  if (freec->parsed()) {
    std::vector<dupcalc::FiniteAlgebra> members;
    for (const std::string& ref : class_refs)
      members.push_back(resolve_algebra(ref));
    dupcalc::FreeAlgebraResult f = free_algebra(members, rank);
    emit(dupcalc::algebra_to_json(f.algebra) + "\n", flags.out_file);
    return kExitPass;
  }

  if (res->parsed()) {
    dupcalc::FiniteAlgebra alg = resolve_algebra(alg_ref);
    dupcalc::ResiduumResult r =
        co ? coresiduum(alg, op_sym) : residuum(alg, op_sym);
    std::string text;
    if (!r.exists) {
      text = "no " + std::string(co ? "co-residuum" : "residuum") +
             ": adjointness fails at (" + alg.label_of(r.fail_a) + "," +
             alg.label_of(r.fail_c) + ")\n";
      emit(text, flags.out_file);
      return kExitFail;
    }
    ordered_json j;
    j["table"] = r.table;
    emit(j.dump() + "\n", flags.out_file);
    return kExitPass;
  }

  if (sep->parsed()) {
    dupcalc::FiniteAlgebra alg = resolve_algebra(alg_ref);
    std::vector<dupcalc::FiniteAlgebra> members;
    for (const std::string& ref : class_refs)
      members.push_back(resolve_algebra(ref));
    dupcalc::SeparationResult r = separates_into(alg, members);
    std::string text =
        r.separates ? "separates\n"
                    : "inseparable pair (" + alg.label_of(r.fail_a) + "," +
                          alg.label_of(r.fail_b) + ")\n";
    emit(text, flags.out_file);
    return r.separates ? kExitPass : kExitFail;
  }

  if (smoke->parsed()) {
    dupcalc::Duplicator g = resolve_duplicator(gamma_ref);
    dupcalc::FiniteAlgebra a = resolve_algebra(from_ref);
    dupcalc::FiniteAlgebra b = resolve_algebra(to_ref);
    dupcalc::SmokeReport r = equivalence_smoke_test(g, a, b);
    std::string text = std::string(r.pass ? "pass" : "fail") + ": homs " +
                       std::to_string(r.hom_count_base) + "/" +
                       std::to_string(r.hom_count_duplicated) +
                       ", subuniverses " +
                       std::to_string(r.subuniverse_count) +
                       ", congruences " +
                       std::to_string(r.congruence_count) + "\n";
    for (const std::string& f : r.failures) text += "  " + f + "\n";
    emit(text, flags.out_file);
    return r.pass ? kExitPass : kExitFail;
  }

  if (repro->parsed()) return cmd_reproduce(which, flags, timings);

  if (cat_list->parsed()) {
    std::vector<dupcalc::CatalogInfo> entries = dupcalc::catalog_list(kind);
    std::string text;
    if (flags.json) {
      ordered_json j = ordered_json::array();
      for (const auto& e : entries)
        j.push_back({{"key", e.key},
                     {"kind", e.kind},
                     {"description", e.description}});
      text = j.dump(2) + "\n";
    } else {
      for (const auto& e : entries)
        text += e.kind + "  " + e.key + "  " + e.description + "\n";
    }
    emit(text, flags.out_file);
    return kExitPass;
  }

  if (cat_show->parsed()) {
    std::string text;
    if (show_kind == "algebra")
      text = dupcalc::algebra_to_json(dupcalc::catalog_algebra(show_key)) +
             "\n";
    else if (show_kind == "duplicator")
      text = dupcalc::duplicator_to_json(
                 dupcalc::catalog_duplicator(show_key)) +
             "\n";
    else if (show_kind == "axiom-suite") {
      const dupcalc::AxiomSuite& s = dupcalc::catalog_axiom_suite(show_key);
      text = s.key + ": " + std::to_string(s.obligations.size()) +
             " obligations\n";
      for (const auto& o : s.obligations) text += "  " + o.id + "\n";
    } else {
      std::cerr << "catalog show: unknown kind '" << show_kind << "'\n";
      return kExitUsage;
    }
    emit(text, flags.out_file);
    return kExitPass;
  }

  if (cat_export->parsed()) {
    for (const dupcalc::CatalogInfo& e : dupcalc::catalog_list("")) {
      if (e.kind == "algebra")
        dupcalc::write_file(
            export_dir + "/algebra_" + e.key + ".json",
            dupcalc::algebra_to_json(dupcalc::catalog_algebra(e.key)) + "\n");
      else if (e.kind == "duplicator")
        dupcalc::write_file(export_dir + "/duplicator_" + e.key + ".json",
                            dupcalc::duplicator_to_json(
                                dupcalc::catalog_duplicator(e.key)) +
                                "\n");
    }
    return kExitPass;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
