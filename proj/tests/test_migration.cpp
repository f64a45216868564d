#include <doctest.h>

#include "common.hpp"

using namespace tc;

namespace {

SetFunctor coeq_data(const Standard& s) {
  return setf(s.ws,
              "setfunctor coeq on parallel\n"
              "object p |-> { 1, 2 }\n"
              "object q |-> { a, b }\n"
              "arrow alpha |-> { 1 -> a, 2 -> b }\n"
              "arrow beta |-> { 1 -> b, 2 -> a }\n");
}

SetFunctor xy_on_point(const Standard& s) {
  return setf(s.ws, "setfunctor xy on terminal\nobject pt |-> { x, y }\n");
}

}  // namespace

TEST_CASE("pullback") {
  Standard s;
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");

  SetFunctor same = pullback(identity_functor(s.two), pair);
  CHECK(same_setfunctor(same, pair));

  SetFunctor at0 = pullback(s.pick(0), pair);
  CHECK(at0.elems[0] == std::vector<std::string>{"x", "y"});

  // constant functor gives the constant diagram
  SetFunctor con = pullback(constant_functor(s.par, s.two, 1), pair);
  CHECK(con.set_size(0) == 1);
  CHECK(con.set_size(1) == 1);

  CHECK_THROWS_AS(pullback(s.pick(0), coeq_data(s)), StructuralError);
}

TEST_CASE("colimit") {
  Standard s;
  Colimit single = colimit(xy_on_point(s));
  CHECK(single.apex.size() == 2);
  CHECK(single.apex[0] == "K(pt,x)");

  // discrete shape: sizes add
  DisjointUnion disc = disjoint_union(s.pt, s.pt);
  SetFunctor two_sets = singleton_diagram(disc.cat);
  CHECK(colimit(two_sets).apex.size() == 2);

  Colimit merged = colimit(coeq_data(s));
  CHECK(merged.apex.size() == 1);
  // both elements of q land in the single class
  CHECK(merged.legs[s.par->require_object("q")][0] ==
        merged.legs[s.par->require_object("q")][1]);

  SetFunctor nothing;
  nothing.shape = s.empty;
  CHECK(colimit(nothing).apex.empty());
}

TEST_CASE("limit") {
  Standard s;
  Limit single = limit(xy_on_point(s));
  CHECK(single.apex.size() == 2);

  CHECK(limit(coeq_data(s)).apex.empty());

  SetFunctor nothing;
  nothing.shape = s.empty;
  Limit empty_lim = limit(nothing);
  REQUIRE(empty_lim.apex.size() == 1);
  CHECK(empty_lim.apex[0] == "()");
}

TEST_CASE("left_kan") {
  Standard s;
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");
  LeftKan lk_id = left_kan(identity_functor(s.two), pair);
  CHECK(lk_id.result.set_size(0) == 2);
  CHECK(lk_id.result.set_size(1) == 1);
  CHECK(validate_setfunctor(lk_id.result).empty());

  LeftKan lk0 = left_kan(s.pick(0), xy_on_point(s));
  CHECK(lk0.result.set_size(0) == 2);
  CHECK(lk0.result.set_size(1) == 2);
  // the transition map along u is a bijection
  const auto& um = lk0.result.maps[s.two->require_morphism("u")];
  CHECK(um[0] != um[1]);

  LeftKan lkc = left_kan(s.collapse_par(), coeq_data(s));
  CHECK(lkc.result.set_size(0) == 1);
}

TEST_CASE("right_kan") {
  Standard s;
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");
  RightKan rk_id = right_kan(identity_functor(s.two), pair);
  CHECK(rk_id.result.set_size(0) == 2);
  CHECK(rk_id.result.set_size(1) == 1);

  RightKan rkc = right_kan(s.collapse_par(), coeq_data(s));
  CHECK(rkc.result.set_size(0) == 0);

  RightKan rk0 = right_kan(s.pick(0), xy_on_point(s));
  CHECK(rk0.result.set_size(0) == 2);
  CHECK(rk0.result.set_size(1) == 1);  // limit over the empty flow
}

TEST_CASE("right_kan agrees with the hom-formula route") {
  Standard s;
  SetFunctor f1 = xy_on_point(s);
  auto check_agree = [](const CatFunctor& f, const SetFunctor& F) {
    RightKan direct = right_kan(f, F);
    auto dual = right_kan_via_nat(f, F);
    REQUIRE(dual.size() == static_cast<size_t>(f.tgt->num_objects()));
    for (int d = 0; d < f.tgt->num_objects(); ++d) {
      REQUIRE(static_cast<int>(dual[d].size()) == direct.result.set_size(d));
      for (const auto& fam : dual[d])
        CHECK(direct.limits[d].family_of(fam) >= 0);
    }
  };
  check_agree(s.pick(0), f1);
  check_agree(s.pick(1), f1);
  check_agree(s.collapse_par(), coeq_data(s));
  check_agree(identity_functor(s.two),
              setf(s.ws,
                   "setfunctor pair on two\n"
                   "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                   "arrow u |-> { x -> z, y -> z }\n"));
}

TEST_CASE("units and counits") {
  Standard s;
  SetFunctor f1 = xy_on_point(s);

  SetNatTrans ul = unit_left(identity_functor(s.pt), f1);
  CHECK(validate_setnat(ul).empty());

  SetNatTrans u0 = unit_left(s.pick(0), f1);
  // injective component at the point
  REQUIRE(u0.components[0].size() == 2);
  CHECK(u0.components[0][0] != u0.components[0][1]);

  // counit for a constant singleton target: everything maps to one element
  SetFunctor ones = singleton_diagram(s.two);
  SetNatTrans cl = counit_left(s.pick(0), ones);
  CHECK(validate_setnat(cl).empty());
  for (const auto& comp : cl.components)
    for (int v : comp) CHECK(v == 0);

  SetNatTrans ur = unit_right(s.pick(0), ones);
  SetNatTrans cr = counit_right(s.pick(0), f1);
  CHECK(validate_setnat(ur).empty());
  CHECK(validate_setnat(cr).empty());
}

TEST_CASE("adjunction transposes are two-sided inverses") {
  Standard s;
  SetFunctor F = xy_on_point(s);
  SetFunctor G = setf(s.ws,
                      "setfunctor pair on two\n"
                      "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                      "arrow u |-> { x -> z, y -> z }\n");
  CatFunctor f = s.pick(0);

  auto lhs = enumerate_nat_trans(F, pullback(f, G));
  auto rhs = enumerate_nat_trans(left_kan(f, F).result, G);
  CHECK(lhs.size() == rhs.size());
  for (const auto& h : lhs) {
    SetNatTrans over = adjunct_left(f, h, G);
    SetNatTrans back = adjunct_left_inv(f, over, F);
    CHECK(back.components == h.components);
  }

  auto rls = enumerate_nat_trans(pullback(f, G), F);
  auto rrs = enumerate_nat_trans(G, right_kan(f, F).result);
  CHECK(rls.size() == rrs.size());
  for (const auto& h : rls) {
    SetNatTrans over = adjunct_right(f, h, G);
    SetNatTrans back = adjunct_right_inv(f, over, F);
    CHECK(back.components == h.components);
  }
}

TEST_CASE("enumerate_nat_trans counts and cap") {
  Standard s;
  SetFunctor F = xy_on_point(s);
  CHECK(enumerate_nat_trans(F, F).size() == 4);

  SetFunctor one = singleton_diagram(s.pt);
  CHECK(enumerate_nat_trans(F, one).size() == 1);

  SetFunctor none;
  none.shape = s.pt;
  none.elems = {{}};
  none.maps = {{}};
  CHECK(enumerate_nat_trans(none, F).size() == 1);

  SetFunctor big;
  big.shape = s.pt;
  big.elems.assign(1, {});
  for (int i = 0; i < 10; ++i) big.elems[0].push_back("e" + std::to_string(i));
  big.maps = {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  CHECK_THROWS_AS(enumerate_nat_trans(big, big), CapExceeded);
}

TEST_CASE("kan extensions compose along functors") {
  Standard s;
  SetFunctor F = xy_on_point(s);
  CatFunctor f = s.pick(0);
  CatFunctor g = s.collapse();
  SetFunctor once = left_kan(compose_functors(g, f), F).result;
  SetFunctor twice = left_kan(g, left_kan(f, F).result).result;
  for (int d = 0; d < s.pt->num_objects(); ++d)
    CHECK(once.set_size(d) == twice.set_size(d));
}

TEST_CASE("cofinal functors preserve colimits") {
  Standard s;
  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");
  REQUIRE(is_cofinal(s.pick(1)).ok);
  CHECK(colimit(pullback(s.pick(1), pair)).apex.size() ==
        colimit(pair).apex.size());
}
