#include <doctest.h>

#include "common.hpp"
#include "flowcat/basechange.hpp"
#include "flowcat/harness.hpp"

using namespace tc;

namespace {

// strict pullback of the cospan * -> 2 <- * over an empty span source
LaxSquare empty_corner_square(const Standard& s) {
  LaxSquare sq;
  sq.s = s.from_empty(s.pt);
  sq.t = s.from_empty(s.pt);
  sq.f = s.pick(0);
  sq.g = s.pick(1);
  sq.alpha.source_functor = compose_functors(sq.f, sq.s);
  sq.alpha.target_functor = compose_functors(sq.g, sq.t);
  return sq;
}

}  // namespace

TEST_CASE("base changes on the identity square are isomorphisms") {
  Standard s;
  LaxSquare sq = identity_square(s.two);
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");
  CHECK(is_iso(base_change_left(sq, pair)).iso);
  CHECK(is_iso(base_change_left_alt(sq, pair)).iso);
  CHECK(is_iso(base_change_right(sq, pair)).iso);
}

TEST_CASE("the empty-corner pullback square fails, its flow product repairs it") {
  Standard s;
  SetFunctor one = singleton_diagram(s.pt);

  LaxSquare broken = empty_corner_square(s);
  SetNatTrans bc = base_change_left(broken, one);
  IsoCheck chk = is_iso(bc);
  CHECK_FALSE(chk.iso);
  // component at the point: empty set against a singleton
  CHECK(bc.source_functor.set_size(0) == 0);
  CHECK(bc.target_functor.set_size(0) == 1);

  // dual failure: the target limit over the empty flow is a singleton
  SetFunctor ab = setf(s.ws, "setfunctor ab on terminal\nobject pt |-> { a, b }\n");
  SetNatTrans rc = base_change_right(broken, ab);
  CHECK(rc.source_functor.set_size(0) == 2);
  CHECK(rc.target_functor.set_size(0) == 1);
  CHECK_FALSE(is_iso(rc).iso);

  FlowProduct fp = flow_product(s.pick(0), s.pick(1));
  CHECK(is_iso(base_change_left(fp.square, one)).iso);
  CHECK(is_iso(base_change_right(fp.square, one)).iso);
}

TEST_CASE("pointwise right base change matches the unit-counit composite") {
  Standard s;
  SetFunctor one = singleton_diagram(s.pt);
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");

  LaxSquare idsq = identity_square(s.two);
  CHECK(same_setnat(base_change_right(idsq, pair),
                    base_change_right_via_units(idsq, pair)));

  FlowProduct fp = flow_product(s.pick(0), s.pick(1));
  CHECK(same_setnat(base_change_right(fp.square, one),
                    base_change_right_via_units(fp.square, one)));

  LaxSquare broken = empty_corner_square(s);
  CHECK(same_setnat(base_change_right(broken, one),
                    base_change_right_via_units(broken, one)));
}

TEST_CASE("base change composes along pasted squares") {
  Standard s;
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");
  LaxSquare idsq = identity_square(s.two);
  CHECK(check_pasting_lemma(idsq, idsq, pair));
}

TEST_CASE("verify_square aggregates verdicts") {
  Standard s;
  SetFunctor one = singleton_diagram(s.pt);
  FlowProduct fp = flow_product(s.pick(0), s.pick(1));
  ExactnessReport good =
      verify_square(fp.square, "fp", {one}, Direction::Both);
  CHECK(good.all_iso());
  CHECK(good.verdicts.size() == 2);

  ExactnessReport badrep =
      verify_square(empty_corner_square(s), "broken", {one}, Direction::Left);
  CHECK_FALSE(badrep.all_iso());
  CHECK_FALSE(badrep.verdicts.empty());
  CHECK_FALSE(badrep.verdicts[0].iso);
}

TEST_CASE("verify_opfibration_case refuses non-opfibrations") {
  Standard s;
  SetFunctor one = singleton_diagram(s.two);

  LaxSquare idsq = identity_square(s.two);
  ExactnessReport ok = verify_opfibration_case(idsq, "id", {one});
  CHECK_FALSE(ok.refused);
  CHECK(ok.all_iso());

  // right edge * -> 2 at 0 is not an opfibration
  FibreProduct fb = fibre_product(s.pick(0), identity_functor(s.two));
  LaxSquare strict;
  strict.s = compose_functors(fb.ambient.proj_b, fb.inclusion);
  strict.t = compose_functors(fb.ambient.proj_c, fb.inclusion);
  strict.f = s.pick(0);
  strict.g = identity_functor(s.two);
  strict.alpha.source_functor = compose_functors(strict.f, strict.s);
  strict.alpha.target_functor = compose_functors(strict.g, strict.t);
  for (int o = 0; o < fb.cat->num_objects(); ++o)
    strict.alpha.components.push_back(
        s.two->identity[strict.alpha.source_functor.obj_map[o]]);
  ExactnessReport refused = verify_opfibration_case(strict, "notop", {one});
  CHECK(refused.refused);
}

TEST_CASE("span algebra") {
  Standard s;
  // identity span on the point leaves a diagram unchanged
  Span idsp{identity_functor(s.pt), identity_functor(s.pt)};
  SetFunctor F = setf(s.ws, "setfunctor xy on terminal\nobject pt |-> { x, y }\n");
  SetFunctor acted = span_action(idsp, F);
  CHECK(acted.set_size(0) == 2);

  // span * <- * -> 2 at 0 reproduces the left Kan extension
  Span into_two{identity_functor(s.pt), s.pick(0)};
  SetFunctor spread = span_action(into_two, F);
  CHECK(spread.set_size(0) == 2);
  CHECK(spread.set_size(1) == 2);

  // composing with the identity-like span is not the identity
  Span cheap{identity_functor(s.pt), s.pick(0)};
  Span idtwo{identity_functor(s.two), identity_functor(s.two)};
  SpanComposition comp = span_compose(cheap, idtwo);
  CHECK(comp.middle.cat->num_objects() == 2);
  CHECK(comp.span.right_leg.src->num_objects() == 2);

  Span idpar{identity_functor(s.par), identity_functor(s.par)};
  CHECK_THROWS_AS(span_compose(cheap, idpar), StructuralError);
}

TEST_CASE("flow adjunction on punctual feet") {
  Standard s;
  Span sp{identity_functor(s.pt), identity_functor(s.pt)};
  Cospan csp{identity_functor(s.pt), identity_functor(s.pt)};
  CHECK(check_flow_adjunction(sp, csp));
}
