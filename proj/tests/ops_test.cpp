#include <doctest.h>

#include "dupcalc/catalog.hpp"
#include "dupcalc/error.hpp"
#include "dupcalc/ops.hpp"

using namespace dupcalc;

TEST_CASE("direct product multiplies sizes and works componentwise") {
  const FiniteAlgebra& two = catalog_algebra("2Du");
  const FiniteAlgebra& three = catalog_algebra("3chain");
  FiniteAlgebra p = direct_product({two, three});
  CHECK(p.size == 6);
  // (1,2) join (0,1): element 1*3+2=5 with 0*3+1=1.
  std::vector<Element> args{5, 1};
  CHECK(p.apply("vee", args) == 5);
  std::vector<Element> args2{4, 2};  // (1,1) meet (0,2) = (0,1)
  CHECK(p.apply("wedge", args2) == 1);

  FiniteAlgebra empty = direct_product({}, two.sig);
  CHECK(empty.size == 1);
}

TEST_CASE("dual_of swaps operation tables") {
  const FiniteAlgebra& three = catalog_algebra("3chain");
  FiniteAlgebra dual = dual_of(three, {{"vee", "wedge"}});
  std::vector<Element> args{0, 2};
  CHECK(dual.apply("vee", args) == 0);
  CHECK(dual.apply("wedge", args) == 2);
  CHECK_THROWS_AS(dual_of(catalog_algebra("2B"), {{"cmpl", "vee"}}),
                  DomainError);
}

TEST_CASE("subalgebra generation and restriction") {
  const FiniteAlgebra& dm = catalog_algebra("3DM");
  // The middle element alone generates {0, u, 1}: constants are present.
  std::vector<Element> all = subalgebra_generated(dm, {1});
  CHECK(all == std::vector<Element>{0, 1, 2});
  std::vector<Element> bounds = subalgebra_generated(dm, {});
  CHECK(bounds == std::vector<Element>{0, 2});
  FiniteAlgebra sub = restrict_to(dm, bounds, "2DM");
  CHECK(sub.size == 2);
  CHECK_THROWS_AS(restrict_to(dm, std::vector<Element>{1}, "bad"),
                  DomainError);
}

TEST_CASE("subuniverse enumeration on small lattices") {
  const FiniteAlgebra& two = catalog_algebra("2Du");
  // Nonempty subsets of a chain are all closed.
  CHECK(enumerate_subuniverses(two).size() == 3);
  const FiniteAlgebra& three = catalog_algebra("3chain");
  CHECK(enumerate_subuniverses(three).size() == 7);
}

TEST_CASE("identity checking is exhaustive and reports counterexamples") {
  const FiniteAlgebra& m3 = catalog_algebra("M3");
  Term lhs = parse_term("(wedge x1 (vee x2 x3))", m3.sig);
  Term rhs = parse_term("(vee (wedge x1 x2) (wedge x1 x3))", m3.sig);
  IdentityCheck c = check_identity(m3, lhs, rhs);
  CHECK_FALSE(c.holds);  // M3 is not distributive
  CHECK(eval_term(lhs, m3, c.counterexample) !=
        eval_term(rhs, m3, c.counterexample));

  const FiniteAlgebra& three = catalog_algebra("3chain");
  CHECK(check_identity(three, parse_term("(wedge x1 (vee x2 x3))", three.sig),
                       parse_term("(vee (wedge x1 x2) (wedge x1 x3))",
                                  three.sig))
            .holds);
}

TEST_CASE("induced order recovers the chain and rejects non-meets") {
  const FiniteAlgebra& three = catalog_algebra("3chain");
  OrderRelation ord = induced_order(three, "wedge");
  CHECK(ord.le(0, 2));
  CHECK_FALSE(ord.le(2, 1));
  CHECK_THROWS_AS(induced_order(catalog_algebra("3DM"), "sneg"), DomainError);
}

TEST_CASE("monotonicity checking") {
  const FiniteAlgebra& dm = catalog_algebra("3DM");
  OrderRelation ord = induced_order(dm, "wedge");
  CHECK(check_monotonicity(dm, "vee", ord).holds);
  MonotonicityCheck c = check_monotonicity(dm, "sneg", ord);
  CHECK_FALSE(c.holds);  // order-reversing
  CHECK(c.argument == 0);
}

TEST_CASE("residuum exists on distributive chains and fails on N5") {
  const FiniteAlgebra& three = catalog_algebra("3chain");
  ResiduumResult r = residuum(three, "wedge");
  REQUIRE(r.exists);
  // a -> c = 1 if a <= c, else c on a chain.
  CHECK(r.table[0 * 3 + 2] == 2);
  CHECK(r.table[2 * 3 + 0] == 0);
  CHECK(r.table[2 * 3 + 2] == 2);
  CHECK(r.table[1 * 3 + 0] == 0);

  ResiduumResult bad = residuum(catalog_algebra("N5"), "wedge");
  CHECK_FALSE(bad.exists);
  CHECK(bad.fail_a >= 0);
}

TEST_CASE("co-residuum on the Boolean square") {
  const FiniteAlgebra& sq = catalog_algebra("2x2");
  ResiduumResult r = coresiduum(sq, "vee");
  REQUIRE(r.exists);
  // c <= a join b iff (a ~> c) <= b: for a=(0,1)=1, c=(1,1)=3 the least
  // such b is (1,0)=2.
  CHECK(r.table[1 * 4 + 3] == 2);
  CHECK(r.table[3 * 4 + 3] == 0);
}
