#include "flowcat/generate.hpp"

namespace flowcat {

Quiver random_quiver(Rng& rng, int max_objects, int max_edges) {
  Quiver q;
  int n = 1 + rng.below(max_objects);
  for (int i = 0; i < n; ++i) q.add_vertex("x" + std::to_string(i));
  if (n >= 2) {
    int e = rng.below(max_edges + 1);
    for (int i = 0; i < e; ++i) {
      // src < tgt keeps the quiver acyclic, so hom-sets stay finite
      int u = rng.below(n - 1);
      int v = u + 1 + rng.below(n - 1 - u);
      q.add_edge("a" + std::to_string(i), u, v);
    }
  }
  return q;
}

FreeCat random_free_category(Rng& rng, int max_objects, int max_edges) {
  return free_on_acyclic_quiver(random_quiver(rng, max_objects, max_edges));
}

CatFunctor random_functor(Rng& rng, const FreeCat& src, CatPtr tgt) {
  const FinCategory& a = *src.cat;
  const FinCategory& b = *tgt;
  CatFunctor f;
  f.src = src.cat;
  f.tgt = tgt;
  int num_edges = static_cast<int>(src.edge_morphism.size());
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> obj(a.num_objects());
    for (int& o : obj) o = rng.below(b.num_objects());
    std::vector<int> gen(num_edges, -1);
    bool ok = true;
    for (int e = 0; e < num_edges && ok; ++e) {
      int m = src.edge_morphism[e];
      auto choices = b.hom(obj[a.mor_src[m]], obj[a.mor_tgt[m]]);
      if (choices.empty())
        ok = false;
      else
        gen[e] = choices[rng.below(static_cast<int>(choices.size()))];
    }
    if (!ok) continue;
    f.obj_map = std::move(obj);
    f.mor_map.assign(a.num_morphisms(), -1);
    for (int m = 0; m < a.num_morphisms(); ++m) {
      int img = b.identity[f.obj_map[a.mor_src[m]]];
      for (int e : src.path_edges[m]) img = b.compose(gen[e], img);
      f.mor_map[m] = img;
    }
    return f;
  }
  return constant_functor(src.cat, tgt, 0);
}

SetFunctor random_setfunctor(Rng& rng, const FreeCat& shape, int max_elems) {
  const FinCategory& c = *shape.cat;
  SetFunctor f;
  f.shape = shape.cat;
  std::vector<int> size(c.num_objects());
  for (int& s : size) s = rng.below(max_elems + 1);
  // a map out of a nonempty set needs a nonempty target; acyclic, so the
  // bumping settles
  for (bool changed = true; changed;) {
    changed = false;
    for (int e : shape.edge_morphism)
      if (size[c.mor_src[e]] > 0 && size[c.mor_tgt[e]] == 0) {
        size[c.mor_tgt[e]] = 1;
        changed = true;
      }
  }
  f.elems.resize(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x)
    for (int e = 0; e < size[x]; ++e) f.elems[x].push_back("e" + std::to_string(e));
  std::vector<std::vector<int>> gen(shape.edge_morphism.size());
  for (size_t e = 0; e < shape.edge_morphism.size(); ++e) {
    int m = shape.edge_morphism[e];
    gen[e].resize(size[c.mor_src[m]]);
    for (int& v : gen[e]) v = rng.below(size[c.mor_tgt[m]]);
  }
  f.maps.resize(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    std::vector<int> map(size[c.mor_src[m]]);
    for (size_t k = 0; k < map.size(); ++k) map[k] = static_cast<int>(k);
    for (int eidx : shape.path_edges[m])
      for (int& v : map) v = gen[eidx][v];
    f.maps[m] = std::move(map);
  }
  return f;
}

RandomCospan random_cospan(Rng& rng, int max_objects, int max_edges) {
  RandomCospan out;
  out.b = random_free_category(rng, max_objects, max_edges);
  out.c = random_free_category(rng, max_objects, max_edges);
  out.d = random_free_category(rng, max_objects, max_edges);
  out.f = random_functor(rng, out.b, out.d.cat);
  out.g = random_functor(rng, out.c, out.d.cat);
  return out;
}

RandomSpan random_span(Rng& rng, int max_objects, int max_edges) {
  RandomSpan out;
  out.a = random_free_category(rng, max_objects, max_edges);
  out.b = random_free_category(rng, max_objects, max_edges);
  out.c = random_free_category(rng, max_objects, max_edges);
  out.s = random_functor(rng, out.a, out.b.cat);
  out.t = random_functor(rng, out.a, out.c.cat);
  return out;
}

}  // namespace flowcat
