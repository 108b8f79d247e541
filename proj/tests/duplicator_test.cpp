#include <doctest.h>

#include "dupcalc/catalog.hpp"
#include "dupcalc/duplicate.hpp"
#include "dupcalc/io.hpp"
#include "dupcalc/ops.hpp"

using namespace dupcalc;

TEST_CASE("validate_duplicator flags structural problems") {
  Duplicator g = catalog_duplicator("Gamma_BLu");
  CHECK(validate_duplicator(g).empty());

  Duplicator bad = g;
  bad.entries[0].terms.pop_back();  // wrong number of coordinate terms
  CHECK(!validate_duplicator(bad).empty());

  Duplicator dup_names = g;
  dup_names.entries[1].name = dup_names.entries[0].name;
  CHECK(!validate_duplicator(dup_names).empty());

  Duplicator wide = g;
  wide.entries[0].terms[0] = parse_term("(vee x1 x5)", g.base_sig);
  CHECK(!validate_duplicator(wide).empty());  // span exceeds m * arity
}

TEST_CASE("disjoint mode requires coordinate-disjoint entries") {
  CHECK(validate_duplicator(catalog_duplicator("Gamma_IT")).empty());
  Duplicator linked = catalog_duplicator("Gamma_BLu");
  linked.mode = DuplicatorMode::disjoint;
  linked.witnesses = {};  // keep only the entry check in view
  CHECK(!validate_duplicator(linked).empty());
}

TEST_CASE("expand_gamma follows the block variable convention") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  Signature gsig = gamma_signature(g);
  // vee_t(x1, x2) at coordinate 1 is vee(x1, x3): coordinate 1 of the
  // i-th argument is base variable 2(i-1)+1.
  Term t = parse_term("(vee_t x1 x2)", gsig);
  CHECK(render_term(expand_gamma(g, t, 1)) == "(vee x1 x3)");
  CHECK(render_term(expand_gamma(g, t, 2)) == "(wedge x2 x4)");
  Term n = parse_term("(neg x1)", gsig);
  CHECK(render_term(expand_gamma(g, n, 1)) == "x2");
  Term nested = parse_term("(neg (vee_t x1 x2))", gsig);
  CHECK(render_term(expand_gamma(g, nested, 1)) == "(wedge x2 x4)");
}

TEST_CASE("the duplicated bilattice of the 2-chain is the expected table") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  const FiniteAlgebra& two = catalog_algebra("2Du");
  FiniteAlgebra p = duplicate(g, two);
  CHECK(p.size == 4);
  CHECK(p.label_of(2) == "(1,0)");
  // vee_t((a,b),(c,d)) = (a or c, b and d).
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      std::vector<Element> args{x, y};
      Element a = x / 2, b = x % 2, c = y / 2, d = y % 2;
      CHECK(p.apply("vee_t", args) == (a | c) * 2 + (b & d));
      CHECK(p.apply("wedge_k", args) == (a & c) * 2 + (b & d));
    }
  // neg swaps coordinates.
  std::vector<Element> one{2};
  CHECK(p.apply("neg", one) == 1);
}

TEST_CASE("duplicate_mixed with equal factors equals duplicate") {
  const Duplicator& g = catalog_duplicator("Gamma_preBLu");
  const FiniteAlgebra& three = catalog_algebra("3chain");
  FiniteAlgebra power = duplicate(g, three);
  FiniteAlgebra mixed = duplicate_mixed(g, {three, three});
  CHECK(power.size == mixed.size);
  for (const auto& [sym, table] : power.tables)
    CHECK(table == mixed.tables.at(sym));
}

TEST_CASE("mixed products over distinct factors have product size") {
  const Duplicator& g = catalog_duplicator("Gamma_preBLu");
  FiniteAlgebra p =
      duplicate_mixed(g, {catalog_algebra("2Du"), catalog_algebra("3chain")});
  CHECK(p.size == 6);
  // vee_k is componentwise join of the two chains.
  std::vector<Element> args{1 * 3 + 0, 0 * 3 + 2};  // (1,0) and (0,2)
  CHECK(p.apply("vee_k", args) == 1 * 3 + 2);
}

TEST_CASE("tuple encoding round-trips") {
  std::vector<int> sizes{2, 3, 4};
  for (long long e = 0; e < 24; ++e) {
    std::vector<Element> t = decode_tuple(e, sizes);
    CHECK(encode_tuple(t, sizes) == e);
  }
}

TEST_CASE("lift_morphism is functorial") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  const FiniteAlgebra& two = catalog_algebra("2Du");
  const FiniteAlgebra& three = catalog_algebra("3chain");
  std::vector<Homomorphism> maps = enumerate_homomorphisms(two, three);
  std::vector<Homomorphism> back = enumerate_homomorphisms(three, two);
  Homomorphism id{{0, 1}};
  Homomorphism lifted_id = lift_morphism(g, two, two, id);
  for (Element e = 0; e < 4; ++e) CHECK(lifted_id(e) == e);
  for (const Homomorphism& h : maps)
    for (const Homomorphism& k : back) {
      // lift(k o h) = lift(k) o lift(h)
      Homomorphism comp{{}};
      for (Element e = 0; e < two.size; ++e)
        comp.image.push_back(k(h(e)));
      Homomorphism lifted_comp = lift_morphism(g, two, two, comp);
      Homomorphism lh = lift_morphism(g, two, three, h);
      Homomorphism lk = lift_morphism(g, three, two, k);
      for (Element e = 0; e < 4; ++e) CHECK(lifted_comp(e) == lk(lh(e)));
    }
}

TEST_CASE("algebra JSON round-trip") {
  const FiniteAlgebra& dm = catalog_algebra("4DMu");
  FiniteAlgebra back = algebra_from_json(algebra_to_json(dm));
  CHECK(back.name == dm.name);
  CHECK(back.sig == dm.sig);
  CHECK(back.size == dm.size);
  CHECK(back.tables == dm.tables);
  CHECK(back.labels == dm.labels);
}

TEST_CASE("duplicator JSON round-trip") {
  const Duplicator& g = catalog_duplicator("Gamma_TLtf");
  Duplicator back = duplicator_from_json(duplicator_to_json(g));
  CHECK(back.name == g.name);
  CHECK(back.base_sig == g.base_sig);
  CHECK(back.m == g.m);
  CHECK((back.mode == g.mode));
  REQUIRE(back.entries.size() == g.entries.size());
  for (size_t i = 0; i < g.entries.size(); ++i) {
    CHECK(back.entries[i].name == g.entries[i].name);
    CHECK(back.entries[i].terms == g.entries[i].terms);
  }
  CHECK(back.witnesses.recover == g.witnesses.recover);
  CHECK(back.witnesses.merge == g.witnesses.merge);
  CHECK(back.witnesses.permute == g.witnesses.permute);
}
