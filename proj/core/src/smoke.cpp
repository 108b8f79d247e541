#include "dupcalc/smoke.hpp"

#include <algorithm>
#include <set>

#include "dupcalc/congruence.hpp"
#include "dupcalc/error.hpp"
#include "dupcalc/ops.hpp"

namespace dupcalc {

SmokeReport equivalence_smoke_test(const Duplicator& g, const FiniteAlgebra& a,
                                   const FiniteAlgebra& b) {
  SmokeReport rep;
  auto fail = [&](std::string msg) {
    rep.pass = false;
    rep.failures.push_back(std::move(msg));
  };
  FiniteAlgebra pa = duplicate(g, a);
  FiniteAlgebra pb = duplicate(g, b);

  // (i) homomorphisms are exactly the lifted ones.
  std::vector<Homomorphism> base_homs = enumerate_homomorphisms(a, b);
  rep.hom_count_base = static_cast<int>(base_homs.size());
  std::set<Homomorphism> lifted;
  for (const Homomorphism& h : base_homs)
    lifted.insert(lift_morphism(g, a, b, h));
  std::vector<Homomorphism> dup_homs = enumerate_homomorphisms(pa, pb);
  rep.hom_count_duplicated = static_cast<int>(dup_homs.size());
  for (const Homomorphism& h : dup_homs)
    if (!lifted.count(h))
      fail("homomorphism of the duplicated algebras is not a lifted one");
  if (lifted.size() != dup_homs.size())
    fail("some lifted homomorphism is missing from the enumeration");

  // (ii) subuniverses are exactly the m-th powers.
  std::vector<int> sizes(g.m, a.size);
  std::vector<std::vector<Element>> subs_pa = enumerate_subuniverses(pa);
  rep.subuniverse_count = static_cast<int>(subs_pa.size());
  std::set<std::vector<Element>> powers;
  for (const std::vector<Element>& s : enumerate_subuniverses(a)) {
    std::vector<Element> power;
    for (Element e = 0; e < pa.size; ++e) {
      std::vector<Element> tup = decode_tuple(e, sizes);
      bool inside = true;
      for (Element c : tup)
        if (std::find(s.begin(), s.end(), c) == s.end()) inside = false;
      if (inside) power.push_back(e);
    }
    powers.insert(std::move(power));
  }
  for (const std::vector<Element>& s : subs_pa)
    if (!powers.count(s)) {
      std::string members;
      for (Element e : s) members += " " + pa.label_of(e);
      fail("subuniverse {" + members + " } is not a power of a base one");
    }
  if (powers.size() != subs_pa.size())
    fail("some power of a base subuniverse is not closed upstairs");

  // (iii) congruences are exactly the coordinatewise ones.
  CongruenceLattice con_a = congruence_lattice(a);
  CongruenceLattice con_pa = congruence_lattice(pa);
  rep.congruence_count = static_cast<int>(con_pa.elements.size());
  std::set<Congruence> powered;
  for (const Congruence& theta : con_a.elements) {
    std::vector<Element> block(pa.size);
    std::map<std::vector<Element>, Element> seen;
    for (Element e = 0; e < pa.size; ++e) {
      std::vector<Element> tup = decode_tuple(e, sizes);
      for (Element& c : tup) c = theta.rep[c];
      auto [it, fresh] = seen.emplace(std::move(tup), e);
      block[e] = it->second;
    }
    Congruence lifted_theta;
    lifted_theta.rep = std::move(block);
    if (!is_congruence(pa, lifted_theta)) {
      fail("coordinatewise lift of a base congruence is not a congruence");
      continue;
    }
    powered.insert(std::move(lifted_theta));
  }
  std::set<Congruence> upstairs(con_pa.elements.begin(),
                                con_pa.elements.end());
  if (powered != upstairs)
    fail("Con of the duplicated algebra differs from the lifted base "
         "congruences (" +
         std::to_string(powered.size()) + " lifted vs " +
         std::to_string(upstairs.size()) + " found)");
  else if (!lattices_order_isomorphic(con_a, con_pa))
    fail("congruence lattices are not order-isomorphic");
  return rep;
}

}  // namespace dupcalc
