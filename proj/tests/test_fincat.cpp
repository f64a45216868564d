#include <doctest.h>

#include "common.hpp"

using namespace tc;

TEST_CASE("validate_category accepts the standard small categories") {
  Standard s;
  CHECK(validate_category(*s.pt).empty());
  CHECK(validate_category(*s.two).empty());
  CHECK(validate_category(*s.par).empty());
  CHECK(validate_category(*s.empty).empty());
}

TEST_CASE("validate_category reports a broken right identity") {
  Standard s;
  FinCategory c = *s.two;
  int u = c.require_morphism("u");
  int id0 = c.identity[c.require_object("o0")];
  c.comp[static_cast<size_t>(u) * c.num_morphisms() + id0] = -1;
  CHECK_FALSE(validate_category(c).empty());
}

TEST_CASE("validate_functor") {
  Standard s;
  CHECK(validate_functor(identity_functor(s.two)).empty());
  CHECK(validate_functor(s.collapse()).empty());

  // u |-> id_o0 while o1 |-> o1 breaks target preservation
  CatFunctor bad = identity_functor(s.two);
  bad.mor_map[s.two->require_morphism("u")] =
      s.two->identity[s.two->require_object("o0")];
  CHECK_FALSE(validate_functor(bad).empty());
}

TEST_CASE("opposite swaps endpoints and is an involution") {
  Standard s;
  CHECK(same_category(opposite(*s.pt), *s.pt));

  FinCategory op = opposite(*s.two);
  int u = op.require_morphism("u");
  CHECK(op.objects[op.mor_src[u]] == "o1");
  CHECK(op.objects[op.mor_tgt[u]] == "o0");
  CHECK(validate_category(op).empty());

  CHECK(same_category(opposite(opposite(*s.par)), *s.par));
}

TEST_CASE("disjoint_union") {
  Standard s;
  DisjointUnion tt = disjoint_union(s.pt, s.pt);
  CHECK(tt.cat->num_objects() == 2);
  CHECK(tt.cat->num_morphisms() == 2);
  CHECK(validate_category(*tt.cat).empty());
  CHECK(validate_functor(tt.include_left).empty());
  CHECK(validate_functor(tt.include_right).empty());

  DisjointUnion et = disjoint_union(s.empty, s.two);
  CHECK(et.cat->num_objects() == 2);
  CHECK(et.cat->num_morphisms() == 3);

  DisjointUnion four = disjoint_union(s.two, s.two);
  CHECK(four.cat->num_objects() == 4);
  CHECK(four.cat->num_morphisms() == 6);
}

TEST_CASE("free_on_acyclic_quiver") {
  Quiver q1;
  q1.add_vertex("v");
  FreeCat f1 = free_on_acyclic_quiver(q1);
  CHECK(f1.cat->num_objects() == 1);
  CHECK(f1.cat->num_morphisms() == 1);

  Quiver q2;
  int x = q2.add_vertex("x");
  int y = q2.add_vertex("y");
  q2.add_edge("a", x, y);
  FreeCat f2 = free_on_acyclic_quiver(q2);
  CHECK(f2.cat->num_objects() == 2);
  CHECK(f2.cat->num_morphisms() == 3);

  int z = q2.add_vertex("z");
  q2.add_edge("b", y, z);
  FreeCat f3 = free_on_acyclic_quiver(q2);
  CHECK(f3.cat->num_objects() == 3);
  CHECK(f3.cat->num_morphisms() == 6);  // 3 identities, 2 edges, 1 composite
  CHECK(validate_category(*f3.cat).empty());

  Quiver loop;
  int w = loop.add_vertex("w");
  loop.add_edge("l", w, w);
  CHECK_FALSE(loop.acyclic());
  CHECK_THROWS_AS(free_on_acyclic_quiver(loop), StructuralError);
}

TEST_CASE("connected_components") {
  Standard s;
  CHECK(connected_components(*s.two).size() == 1);
  CHECK(connected_components(*s.empty).empty());

  DisjointUnion disc = disjoint_union(s.pt, s.pt);
  CHECK(connected_components(*disc.cat).size() == 2);

  CatPtr cospan = cat(
      "category cospan\nobject x\nobject y\nobject z\n"
      "arrow l : x -> z\narrow r : y -> z\n");
  CHECK(connected_components(*cospan).size() == 1);
  CHECK(connected_components(opposite(*cospan)) ==
        connected_components(*cospan));
}

TEST_CASE("functor composition is associative") {
  Standard s;
  CatFunctor p0 = s.pick(0), col = s.collapse();
  CatFunctor a = compose_functors(p0, compose_functors(col, p0));
  CatFunctor b = compose_functors(compose_functors(p0, col), p0);
  CHECK(same_functor(a, b));
  CHECK(validate_functor(a).empty());
}
