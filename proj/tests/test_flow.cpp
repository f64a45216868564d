#include <doctest.h>

#include "common.hpp"

using namespace tc;

TEST_CASE("flow_product basics") {
  Standard s;
  FlowProduct idid = flow_product(identity_functor(s.pt), identity_functor(s.pt));
  CHECK(idid.cat->num_objects() == 1);
  CHECK(idid.cat->num_morphisms() == 1);

  // terminal target forces eta = id: plain product of the walking arrows
  FlowProduct prod = flow_product(s.collapse(), s.collapse());
  CHECK(prod.cat->num_objects() == 4);
  CHECK(prod.cat->num_morphisms() == 9);
  CHECK(validate_category(*prod.cat).empty());
  CHECK(validate_lax_square(prod.square).empty());

  FlowProduct one = flow_product(s.pick(0), s.pick(1));
  CHECK(one.cat->num_objects() == 1);
  CHECK(one.cat->num_morphisms() == 1);
  CHECK(one.cat->objects[0] == "T(pt,pt,u)");

  CHECK_THROWS_AS(flow_product(s.pick(0), s.collapse()), StructuralError);
}

TEST_CASE("fibre_product") {
  Standard s;
  FibreProduct none = fibre_product(s.pick(0), s.pick(1));
  CHECK(none.cat->num_objects() == 0);

  FibreProduct diag = fibre_product(identity_functor(s.two), identity_functor(s.two));
  CHECK(diag.cat->num_objects() == 2);
  CHECK(diag.cat->num_morphisms() == 3);
  CHECK(validate_functor(diag.inclusion).empty());

  // discrete target: fibre product and flow product coincide
  FibreProduct full = fibre_product(s.collapse(), s.collapse());
  CHECK(full.cat->num_objects() == full.ambient.cat->num_objects());
  CHECK(full.cat->num_morphisms() == full.ambient.cat->num_morphisms());
}

TEST_CASE("flow_sum with empty span source equals the disjoint union") {
  Standard s;
  FlowSum fs = flow_sum(s.from_empty(s.two), s.from_empty(s.par));
  DisjointUnion du = disjoint_union(s.two, s.par);
  CHECK(same_category(*fs.cat, *du.cat));
  CHECK(fs.words.empty());
}

TEST_CASE("flow_sum on points") {
  Standard s;
  // single word, no relations: the walking arrow
  FlowSum one = flow_sum(identity_functor(s.pt), identity_functor(s.pt));
  CHECK(one.cat->num_objects() == 2);
  CHECK(one.cat->num_morphisms() == 3);
  CHECK(one.words.size() == 1);
  CHECK(validate_lax_square(one.square).empty());

  // the two words over the walking arrow merge through one hammock step
  FlowSum merged = flow_sum(s.collapse(), s.collapse());
  CHECK(merged.cat->num_objects() == 2);
  CHECK(merged.cat->num_morphisms() == 3);
  REQUIRE(merged.words.size() == 2);
  CHECK(merged.words_equal(merged.words[0], merged.words[1]));
  CHECK(merged.class_of(merged.words[0]) == merged.class_of(merged.words[1]));

  // discrete source: the two words stay distinct
  DisjointUnion disc = disjoint_union(s.pt, s.pt);
  CatFunctor cs = constant_functor(disc.cat, s.pt, 0);
  FlowSum split = flow_sum(cs, cs);
  REQUIRE(split.words.size() == 2);
  CHECK_FALSE(split.words_equal(split.words[0], split.words[1]));
  CHECK(split.cat->num_morphisms() == 4);

  CHECK(split.words_equal(split.words[0], split.words[0]));
}

TEST_CASE("words_equal rejects endpoint mismatches") {
  Standard s;
  CatFunctor incl = s.pick(1);
  FlowSum fs = flow_sum(identity_functor(s.pt), incl);
  // forge a word with the wrong target object
  REQUIRE_FALSE(fs.words.empty());
  FlowSumWord w = fs.words[0];
  FlowSumWord bad = w;
  bad.psi = s.two->identity[0];
  CHECK_THROWS_AS(fs.words_equal(w, bad), StructuralError);
}

TEST_CASE("fiber and flows") {
  Standard s;
  Fiber fid = fiber(identity_functor(s.two), 0);
  CHECK(fid.cat->num_objects() == 1);

  Fiber nonef = fiber(s.pick(0), 1);
  CHECK(nonef.cat->num_objects() == 0);

  // projection of the product of walking arrows: fiber at o0 is a walking arrow
  FlowProduct prod = flow_product(s.collapse(), s.collapse());
  Fiber pf = fiber(prod.proj_b, s.two->require_object("o0"));
  CHECK(pf.cat->num_objects() == 2);
  CHECK(pf.cat->num_morphisms() == 3);

  FlowTo slice = flow_to(identity_functor(s.two), 1);
  CHECK(slice.cat->num_objects() == 2);
  CHECK(slice.cat->num_morphisms() == 3);
  CHECK(validate_functor(slice.proj).empty());

  CHECK(flow_to(s.pick(0), 1).cat->num_objects() == 1);
  CHECK(flow_from(identity_functor(s.two), 0).cat->num_objects() == 2);
  CHECK(flow_from(s.pick(1), 0).cat->num_objects() == 1);
  CHECK(flow_from(s.pick(0), 1).cat->num_objects() == 0);

  CHECK_THROWS_AS(fiber(s.pick(0), 7), StructuralError);

  // the fiber embeds fully into the slice
  FlowTo amb = flow_to(prod.proj_b, 0);
  CatFunctor incl = fiber_flow_inclusion(prod.proj_b, 0, pf, amb);
  CHECK(validate_functor(incl).empty());
}

TEST_CASE("cocartesian morphisms and opfibrations") {
  Standard s;
  CatFunctor idt = identity_functor(s.two);
  for (int m = 0; m < s.two->num_morphisms(); ++m)
    CHECK(is_cocartesian(idt, m));

  // collapsing a parallel pair: alpha has two competing lifts of id
  CatFunctor cp = s.collapse_par();
  CHECK_FALSE(is_cocartesian(cp, s.par->require_morphism("alpha")));
  CHECK(is_cocartesian(cp, s.par->identity[0]));

  CHECK(is_opfibration(idt).ok);
  OpfibrationWitness w = is_opfibration(s.pick(0));
  CHECK_FALSE(w.ok);
  CHECK(w.fail_object >= 0);

  FlowProduct fp = flow_product(s.pick(0), identity_functor(s.two));
  CHECK(is_opfibration(fp.proj_c).ok);
}

TEST_CASE("cofinality") {
  Standard s;
  CHECK(is_cofinal(identity_functor(s.two)).ok);
  CHECK(is_cofinal(s.pick(1)).ok);

  CofinalityWitness w = is_cofinal(s.pick(0));
  CHECK_FALSE(w.ok);
  CHECK(w.component_counts[s.two->require_object("o1")] == 0);
}

TEST_CASE("flow_sum mediator") {
  Standard s;
  FlowSum fs = flow_sum(identity_functor(s.pt), identity_functor(s.pt));
  CatFunctor self = flow_sum_mediator(fs, fs.square);
  CHECK(same_functor(self, identity_functor(fs.cat)));

  // span of points into the walking arrow: the cross arrow goes to u
  LaxSquare sq;
  sq.s = identity_functor(s.pt);
  sq.t = identity_functor(s.pt);
  sq.f = s.pick(0);
  sq.g = s.pick(1);
  sq.alpha.source_functor = compose_functors(sq.f, sq.s);
  sq.alpha.target_functor = compose_functors(sq.g, sq.t);
  sq.alpha.components = {s.two->require_morphism("u")};
  REQUIRE(validate_lax_square(sq).empty());

  CatFunctor h = flow_sum_mediator(fs, sq);
  CHECK(validate_functor(h).empty());
  int cross = fs.class_of(fs.words[0]);
  CHECK(h.mor_map[cross] == s.two->require_morphism("u"));

  // uniqueness among all functors satisfying the mediator equations
  int hits = 0;
  for (const CatFunctor& k : enumerate_functors(fs.cat, s.two)) {
    if (same_functor(compose_functors(k, fs.incl_b), sq.f) &&
        same_functor(compose_functors(k, fs.incl_c), sq.g) &&
        k.mor_map[cross] == s.two->require_morphism("u"))
      ++hits;
  }
  CHECK(hits == 1);
}

TEST_CASE("flow_product mediator") {
  Standard s;
  FlowProduct fp = flow_product(s.pick(0), s.pick(1));
  CatFunctor self = flow_product_mediator(fp, fp.square);
  CHECK(same_functor(self, identity_functor(fp.cat)));

  LaxSquare sq;
  sq.s = identity_functor(s.pt);
  sq.t = identity_functor(s.pt);
  sq.f = s.pick(0);
  sq.g = s.pick(1);
  sq.alpha.source_functor = compose_functors(sq.f, sq.s);
  sq.alpha.target_functor = compose_functors(sq.g, sq.t);
  sq.alpha.components = {s.two->require_morphism("u")};

  CatFunctor m = flow_product_mediator(fp, sq);
  CHECK(validate_functor(m).empty());
  CHECK(m.obj_map[0] == fp.object_of(0, 0, s.two->require_morphism("u")));
  CHECK(same_functor(compose_functors(fp.proj_b, m), sq.s));
  CHECK(same_functor(compose_functors(fp.proj_c, m), sq.t));
}

TEST_CASE("paste with identity squares") {
  Standard s;
  LaxSquare idsq = identity_square(s.two);
  LaxSquare p = paste(idsq, idsq);
  CHECK(validate_lax_square(p).empty());
  for (int a = 0; a < s.two->num_objects(); ++a)
    CHECK(s.two->is_identity(p.alpha.components[a]));
}
