#include <doctest.h>

#include <json.hpp>

#include "dupcalc/verify.hpp"

using namespace dupcalc;

namespace {

RowSpec find_row(const std::string& table, const std::string& id) {
  for (const RowSpec& r : table_rows(table))
    if (r.id == id) return r;
  FAIL("no row ", id, " in ", table);
  return {};
}

}  // namespace

TEST_CASE("the shipped row lists are well formed") {
  std::vector<RowSpec> t1 = table_rows("table1");
  std::vector<RowSpec> t2 = table_rows("table2");
  CHECK(t1.size() == 13);
  CHECK(t2.size() == 6);
  for (const RowSpec& r : t1) {
    CHECK(!r.id.empty());
    CHECK(!r.base_keys.empty());
    CHECK(!r.duplicator_key.empty());
  }
  CHECK_THROWS(table_rows("table3"));
}

TEST_CASE("the chain-to-bilattice row passes every claim") {
  RowReport rep = run_row(find_row("table1", "DB/D"), VerifyConfig{});
  CHECK(rep.pass());
  CHECK_FALSE(rep.has_unknown());
  REQUIRE(!rep.claims.empty());
  bool saw_iso = false, saw_free = false;
  for (const ClaimReport& c : rep.claims) {
    CHECK_MESSAGE(c.verdict == Verdict::pass, c.id, ": ", c.artifact);
    CHECK(c.millis == 0);
    if (c.id == "isomorphism") saw_iso = true;
    if (c.id == "free-algebra") saw_free = true;
  }
  CHECK(saw_iso);
  CHECK(saw_free);
}

TEST_CASE("the formula rows check case definitions against entry terms") {
  for (const char* id : {"guard/D", "failure/KL", "implicative/B", "Moore/B"}) {
    RowReport rep = run_row(find_row("table1", id), VerifyConfig{});
    CHECK_MESSAGE(rep.pass(), id);
    bool saw = false;
    for (const ClaimReport& c : rep.claims)
      if (c.id == "formula-consistency") saw = c.verdict == Verdict::pass;
    CHECK_MESSAGE(saw, id);
  }
}

TEST_CASE("a mixed-factor row builds and verifies") {
  RowReport rep = run_row(find_row("table2", "preBL/mixed"), VerifyConfig{});
  CHECK_MESSAGE(rep.pass(), render_report({rep}, "text"));
}

TEST_CASE("an exhausted search budget yields unknown, never a verdict") {
  RowSpec spec = find_row("table1", "DB/D");
  VerifyConfig cfg;
  cfg.mode = CheckMode::search;
  cfg.budget.function_cap = 1;
  RowReport rep = run_row(spec, cfg);
  CHECK(rep.has_unknown());
  for (const ClaimReport& c : rep.claims) CHECK(c.verdict != Verdict::fail);
}

TEST_CASE("report rendering is deterministic and structured") {
  VerifyConfig cfg;
  RowReport rep = run_row(find_row("table1", "BLik/H"), cfg);
  RowReport again = run_row(find_row("table1", "BLik/H"), cfg);

  std::string t1 = render_report({rep}, "text");
  std::string t2 = render_report({again}, "text");
  CHECK(t1 == t2);
  CHECK(t1.find("BLik/H") != std::string::npos);

  std::string j1 = render_report({rep}, "json");
  CHECK(j1 == render_report({again}, "json"));
  nlohmann::json doc = nlohmann::json::parse(j1);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["row"] == "BLik/H");
  REQUIRE(doc[0]["claims"].is_array());
  for (const auto& c : doc[0]["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("verdict"));
    CHECK(c.contains("artifact"));
    CHECK(c["millis"] == 0);
  }

  CHECK(render_report({}, "json") == "[]\n");
  CHECK_THROWS(render_report({rep}, "xml"));
}
