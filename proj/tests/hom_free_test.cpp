#include <doctest.h>

#include "dupcalc/catalog.hpp"
#include "dupcalc/free.hpp"
#include "dupcalc/hom.hpp"
#include "dupcalc/ops.hpp"

using namespace dupcalc;

TEST_CASE("homomorphism counts between small lattices") {
  const FiniteAlgebra& two = catalog_algebra("2Du");
  const FiniteAlgebra& three = catalog_algebra("3chain");
  CHECK(enumerate_homomorphisms(two, two).size() == 3);
  CHECK(enumerate_homomorphisms(two, three).size() == 6);
  CHECK(enumerate_homomorphisms(three, two).size() == 4);
  // Constants pin the bounds: only monotone 0,1-preserving maps remain.
  const FiniteAlgebra& two_b = catalog_algebra("2D");
  const FiniteAlgebra& three_b = catalog_algebra("3D");
  CHECK(enumerate_homomorphisms(two_b, three_b).size() == 1);
}

TEST_CASE("every enumerated map is a homomorphism and they are sorted") {
  const FiniteAlgebra& dm = catalog_algebra("3DM");
  std::vector<Homomorphism> hs = enumerate_homomorphisms(dm, dm);
  CHECK(!hs.empty());
  for (size_t i = 0; i < hs.size(); ++i) {
    CHECK(is_homomorphism(dm, dm, hs[i]));
    if (i > 0) CHECK(hs[i - 1] < hs[i]);
  }
}

TEST_CASE("extend_from_generators propagates forced images") {
  const FiniteAlgebra& dm = catalog_algebra("3DM");
  std::vector<Element> gens = generating_set(dm);
  REQUIRE(!gens.empty());
  std::optional<Homomorphism> h =
      extend_from_generators(dm, dm, gens, gens);  // identity on generators
  REQUIRE(h.has_value());
  for (Element e = 0; e < dm.size; ++e) CHECK((*h)(e) == e);
}

TEST_CASE("find_isomorphism on isomorphic and non-isomorphic pairs") {
  const FiniteAlgebra& sq = catalog_algebra("2x2");
  const FiniteAlgebra& two = catalog_algebra("2Du");
  FiniteAlgebra sq2 = direct_product({two, two});
  sq2.name = "square-again";
  std::optional<Homomorphism> iso = find_isomorphism(sq, sq2);
  REQUIRE(iso.has_value());
  CHECK(is_homomorphism(sq, sq2, *iso));

  // Same size, different structure: the diamond M3 minus nothing vs N5
  // have 5 elements each.
  CHECK_FALSE(find_isomorphism(catalog_algebra("M3"), catalog_algebra("N5"))
                  .has_value());
}

TEST_CASE("free distributive lattice sizes") {
  const FiniteAlgebra& two = catalog_algebra("2Du");
  CHECK(free_algebra({two}, 1).algebra.size == 1);
  CHECK(free_algebra({two}, 2).algebra.size == 4);
  CHECK(free_algebra({two}, 3).algebra.size == 18);
}

TEST_CASE("free algebra satisfies the universal property") {
  const FiniteAlgebra& two = catalog_algebra("2Du");
  FreeAlgebraResult f = free_algebra({two}, 2);
  // Any assignment of the generators extends to a homomorphism.
  for (Element a = 0; a < two.size; ++a)
    for (Element b = 0; b < two.size; ++b) {
      std::optional<Homomorphism> h = extend_from_generators(
          f.algebra, two, f.generators, {a, b});
      REQUIRE(h.has_value());
      CHECK((*h)(f.generators[0]) == a);
      CHECK((*h)(f.generators[1]) == b);
    }
}

TEST_CASE("free algebra over a class embeds into member powers") {
  const FiniteAlgebra& dm = catalog_algebra("3DM");
  FreeAlgebraResult f = free_algebra({dm}, 1);
  CHECK(f.algebra.size > 1);
  SeparationResult sep = separates_into(f.algebra, {dm});
  CHECK(sep.separates);
}

TEST_CASE("separation fails into a trivial target") {
  const FiniteAlgebra& three = catalog_algebra("3chain");
  FiniteAlgebra one = restrict_to(three, {0}, "one-elt");
  SeparationResult sep = separates_into(three, {one});
  CHECK_FALSE(sep.separates);
  CHECK(sep.fail_a != sep.fail_b);
}
