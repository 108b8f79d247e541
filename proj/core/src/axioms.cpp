#include "dupcalc/axioms.hpp"

#include "dupcalc/error.hpp"
#include "dupcalc/ops.hpp"

namespace dupcalc {

AxiomObligation AxiomObligation::identity_law(std::string id, std::string lhs,
                                              std::string rhs) {
  AxiomObligation o;
  o.kind = Kind::identity;
  o.id = std::move(id);
  o.lhs = std::move(lhs);
  o.rhs = std::move(rhs);
  return o;
}

AxiomObligation AxiomObligation::monotone_law(std::string id, std::string op,
                                              std::string order_meet) {
  AxiomObligation o;
  o.kind = Kind::monotone;
  o.id = std::move(id);
  o.op = std::move(op);
  o.order_meet = std::move(order_meet);
  return o;
}

AxiomObligation AxiomObligation::adjoint_law(std::string id, std::string op,
                                             std::string res,
                                             std::string order_meet,
                                             std::string side) {
  AxiomObligation o;
  o.kind = Kind::adjoint;
  o.id = std::move(id);
  o.op = std::move(op);
  o.res = std::move(res);
  o.order_meet = std::move(order_meet);
  o.side = std::move(side);
  return o;
}

namespace {

std::string check_adjoint(const FiniteAlgebra& alg,
                          const AxiomObligation& o) {
  OrderRelation ord = induced_order(alg, o.order_meet);
  int n = alg.size;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        std::vector<Element> ab{a, b};
        bool lhs, rhs;
        if (o.side == "co") {
          lhs = ord.le(c, alg.apply(o.op, ab));
          std::vector<Element> ac{a, c};
          rhs = ord.le(alg.apply(o.res, ac), b);
        } else {
          lhs = ord.le(alg.apply(o.op, ab), c);
          if (o.side == "right") {
            std::vector<Element> cb{c, b};
            rhs = ord.le(a, alg.apply(o.res, cb));
          } else {  // heyting / left
            std::vector<Element> ac{a, c};
            rhs = ord.le(b, alg.apply(o.res, ac));
          }
        }
        if (lhs != rhs)
          return "adjointness fails at (" + alg.label_of(a) + "," +
                 alg.label_of(b) + "," + alg.label_of(c) + ")";
      }
  return "";
}

}  // namespace

AxiomResult run_axiom_suite(const FiniteAlgebra& alg, const AxiomSuite& suite,
                            const Limits& limits) {
  AxiomResult result;
  for (const AxiomObligation& o : suite.obligations) {
    ++result.checked;
    std::string detail;
    switch (o.kind) {
      case AxiomObligation::Kind::identity: {
        Term lhs = parse_term(o.lhs, alg.sig);
        Term rhs = parse_term(o.rhs, alg.sig);
        IdentityCheck c = check_identity(alg, lhs, rhs, limits);
        if (!c.holds) {
          detail = o.lhs + " = " + o.rhs + " fails at [";
          for (size_t i = 0; i < c.counterexample.size(); ++i) {
            if (i) detail += ",";
            detail += alg.label_of(c.counterexample[i]);
          }
          detail += "]";
        }
        break;
      }
      case AxiomObligation::Kind::monotone: {
        OrderRelation ord = induced_order(alg, o.order_meet);
        MonotonicityCheck c = check_monotonicity(alg, o.op, ord);
        if (!c.holds)
          detail = o.op + " is not monotone in argument " +
                   std::to_string(c.argument + 1) + " for the " +
                   o.order_meet + " order";
        break;
      }
      case AxiomObligation::Kind::adjoint:
        detail = check_adjoint(alg, o);
        break;
    }
    if (!detail.empty()) {
      result.pass = false;
      result.failures.push_back({o.id, std::move(detail)});
    }
  }
  return result;
}

}  // namespace dupcalc
