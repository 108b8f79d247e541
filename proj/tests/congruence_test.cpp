#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "dupcalc/catalog.hpp"
#include "dupcalc/congruence.hpp"
#include "dupcalc/duplicate.hpp"

using namespace dupcalc;

namespace {

// All partitions of {0..n-1} as restricted growth strings.
void all_partitions(int n, std::vector<std::vector<Element>>& out) {
  std::vector<Element> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      out.push_back(block);
      return;
    }
    for (Element b = 0; b <= max_used + 1; ++b) {
      block[i] = b;
      rec(i + 1, std::max(max_used, static_cast<int>(b)));
    }
  };
  rec(0, -1);
}

std::set<Congruence> brute_force_congruences(const FiniteAlgebra& alg) {
  std::vector<std::vector<Element>> partitions;
  all_partitions(alg.size, partitions);
  std::set<Congruence> out;
  for (const auto& p : partitions) {
    Congruence theta = normalize_partition(p);
    if (is_congruence(alg, theta)) out.insert(theta);
  }
  return out;
}

}  // namespace

TEST_CASE("congruence lattice matches the brute-force partition filter") {
  for (const char* key : {"2Du", "3chain", "M3", "N5", "3DM", "2B", "4DMu"}) {
    const FiniteAlgebra& alg = catalog_algebra(key);
    std::set<Congruence> expected = brute_force_congruences(alg);
    CongruenceLattice lat = congruence_lattice(alg);
    std::set<Congruence> got(lat.elements.begin(), lat.elements.end());
    CHECK_MESSAGE(got == expected, key);
  }
}

TEST_CASE("three-element chain has the four lattice congruences") {
  CongruenceLattice lat = congruence_lattice(catalog_algebra("3chain"));
  CHECK(lat.elements.size() == 4);
  int id = lat.index_of(Congruence::identity(3));
  int full = lat.index_of(Congruence::full(3));
  for (size_t i = 0; i < lat.elements.size(); ++i) {
    CHECK(lat.le(id, static_cast<int>(i)));
    CHECK(lat.le(static_cast<int>(i), full));
  }
}

TEST_CASE("principal congruences are minimal") {
  const FiniteAlgebra& alg = catalog_algebra("3chain");
  std::set<Congruence> all = brute_force_congruences(alg);
  for (Element a = 0; a < alg.size; ++a)
    for (Element b = a + 1; b < alg.size; ++b) {
      Congruence cg = principal_congruence(alg, a, b);
      CHECK(cg.related(a, b));
      for (const Congruence& theta : all)
        if (theta.related(a, b))
          for (Element x = 0; x < alg.size; ++x)
            for (Element y = 0; y < alg.size; ++y)
              if (cg.related(x, y)) CHECK(theta.related(x, y));
    }
}

TEST_CASE("quotient by the collapse of one pair") {
  const FiniteAlgebra& alg = catalog_algebra("3chain");
  Congruence theta = principal_congruence(alg, 0, 1);
  FiniteAlgebra q = quotient_by(alg, theta);
  CHECK(q.size == 2);
  std::vector<Element> args{0, 1};
  CHECK(q.apply("vee", args) == 1);
}

TEST_CASE("subdirect irreducibility of small algebras") {
  CHECK(is_subdirectly_irreducible(catalog_algebra("2Du")).irreducible);
  CHECK(is_subdirectly_irreducible(catalog_algebra("2B")).irreducible);
  // Con(3-chain) has two incomparable atoms: not SI.
  CHECK_FALSE(is_subdirectly_irreducible(catalog_algebra("3chain"))
                  .irreducible);
  SubdirectIrreducibility si =
      is_subdirectly_irreducible(catalog_algebra("3DM"));
  CHECK(si.irreducible);
  CHECK(si.monolith.block_count() < 3);
}

TEST_CASE("congruences of a duplicated algebra are the lifted ones") {
  const Duplicator& g = catalog_duplicator("Gamma_BLu");
  const FiniteAlgebra& base = catalog_algebra("3chain");
  FiniteAlgebra product = duplicate(g, base);
  CongruenceLattice base_lat = congruence_lattice(base);
  CongruenceLattice prod_lat = congruence_lattice(product);
  CHECK(prod_lat.elements.size() == base_lat.elements.size());
  CHECK(lattices_order_isomorphic(base_lat, prod_lat));
  // Every product congruence is theta^2 for a base congruence theta.
  for (const Congruence& phi : prod_lat.elements) {
    bool lifted = false;
    for (const Congruence& theta : base_lat.elements) {
      bool matches = true;
      for (Element x = 0; x < product.size && matches; ++x)
        for (Element y = 0; y < product.size && matches; ++y)
          matches = phi.related(x, y) ==
                    (theta.related(x / base.size, y / base.size) &&
                     theta.related(x % base.size, y % base.size));
      if (matches) lifted = true;
    }
    CHECK(lifted);
  }
}

TEST_CASE("order isomorphism distinguishes different lattices") {
  CongruenceLattice a = congruence_lattice(catalog_algebra("3chain"));
  CongruenceLattice b = congruence_lattice(catalog_algebra("2Du"));
  CHECK_FALSE(lattices_order_isomorphic(a, b));
  CHECK(lattices_order_isomorphic(a, a));
}
