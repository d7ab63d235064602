#include "braidlift/pipeline.hpp"

#include "braidlift/errors.hpp"
#include "braidlift/pretzel.hpp"

namespace braidlift {

namespace {

LiftVerdict routed(LiftVerdict v, const char* route) {
  v.route = route;
  return v;
}

}  // namespace

LiftVerdict decide_lift(const LinkDiagram& d, const GColoring& tricoloring, int bound, const KnownForm& form) {
  if (tricoloring.tag != GroupTag::Sn || tricoloring.size() != d.strand_count() || !tricoloring.is_valid(d))
    throw Error(ErrorKind::InvalidColoring, "expected a tricoloring of the diagram");
  for (auto& p : tricoloring.perms)
    if (p.degree() != 3 || !p.is_transposition()) throw Error(ErrorKind::InvalidColoring, "not a tricoloring");

  if (tricoloring.is_constant()) return routed(b3_lift_search(d, tricoloring, bound).verdict, "search");

  if (form.two_bridge && form.two_bridge->p % 2) {
    auto pres = two_bridge_presentation(*form.two_bridge);
    if (d.component_count() == 1 && fox_alexander(pres) != fox_alexander(wirtinger(d)))
      throw Error(ErrorKind::InvalidColoring, "two-bridge form does not match the diagram");
    // All nonconstant tricolorings of a two-bridge knot are conjugate.
    auto v = two_bridge_lift_decision(pres, Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3));
    if (v.kind == VerdictKind::NotLiftable) return routed(v, "two-bridge");
    auto s = b3_lift_search(d, tricoloring, bound);
    return routed(s.verdict.kind == VerdictKind::Liftable ? s.verdict : v, "two-bridge");
  }

  if (form.pretzel) {
    if (pretzel_diagram(*form.pretzel).pd_string() != d.pd_string())
      throw Error(ErrorKind::InvalidColoring, "pretzel form does not match the diagram");
    auto pv = classify_pretzel_coloring(*form.pretzel, tricoloring);
    if (pv.kind == PretzelKind::NotLiftable) return routed(LiftVerdict::not_liftable(pv.rule), "pretzel");
    if (pv.kind == PretzelKind::Liftable) {
      auto s = b3_lift_search(d, tricoloring, bound);
      if (s.verdict.kind == VerdictKind::Liftable) return routed(s.verdict, "pretzel");
      // Decided without a witness inside the bound.
      return routed(LiftVerdict::liftable({}), "pretzel");
    }
  }

  if (d.component_count() == 1) {
    auto delta = fox_alexander(wirtinger(d));
    if (trefoil_divisibility_obstruction(delta) == Obstruction::Obstructed)
      return routed(LiftVerdict::not_liftable("t^2 - t + 1 does not divide " + delta.str()), "alexander");
  }

  return routed(b3_lift_search(d, tricoloring, bound).verdict, "search");
}

}  // namespace braidlift
