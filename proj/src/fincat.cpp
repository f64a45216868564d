#include "flowcat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace flowcat {

int FinCategory::add_object(const std::string& id) {
  if (obj_index_.count(id)) throw StructuralError("duplicate object id: " + id);
  int idx = num_objects();
  objects.push_back(id);
  obj_index_[id] = idx;
  identity.push_back(-1);
  return idx;
}

int FinCategory::add_morphism(const std::string& id, int src, int tgt) {
  if (mor_index_.count(id)) throw StructuralError("duplicate morphism id: " + id);
  if (src < 0 || src >= num_objects() || tgt < 0 || tgt >= num_objects())
    throw StructuralError("morphism endpoints out of range: " + id);
  int idx = num_morphisms();
  morphisms.push_back(id);
  mor_index_[id] = idx;
  mor_src.push_back(src);
  mor_tgt.push_back(tgt);
  // grow the composition table
  size_t m = morphisms.size();
  std::vector<int> grown(m * m, -1);
  for (size_t g = 0; g + 1 < m; ++g)
    for (size_t f = 0; f + 1 < m; ++f) grown[g * m + f] = comp[g * (m - 1) + f];
  comp.swap(grown);
  return idx;
}

void FinCategory::set_compose(int g, int f, int h) {
  if (!composable(g, f))
    throw StructuralError("compose " + morphisms[g] + " . " + morphisms[f] +
                          ": not composable");
  comp[static_cast<size_t>(g) * morphisms.size() + f] = h;
}

void FinCategory::synthesize_identities() {
  for (int x = 0; x < num_objects(); ++x) {
    if (identity[x] >= 0) continue;
    identity[x] = add_morphism("id_" + objects[x], x, x);
  }
  fill_identity_composites();
}

void FinCategory::fill_identity_composites() {
  for (int m = 0; m < num_morphisms(); ++m) {
    set_compose(identity[mor_tgt[m]], m, m);
    set_compose(m, identity[mor_src[m]], m);
  }
}

int FinCategory::object_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& id) const {
  auto it = mor_index_.find(id);
  return it == mor_index_.end() ? -1 : it->second;
}

int FinCategory::require_object(const std::string& id) const {
  int i = object_index(id);
  if (i < 0) throw StructuralError("unknown object id: " + id);
  return i;
}

int FinCategory::require_morphism(const std::string& id) const {
  int i = morphism_index(id);
  if (i < 0) throw StructuralError("unknown morphism id: " + id);
  return i;
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < num_morphisms(); ++m)
    if (mor_src[m] == x && mor_tgt[m] == y) out.push_back(m);
  return out;
}

bool same_category(const FinCategory& a, const FinCategory& b) {
  return a.objects == b.objects && a.morphisms == b.morphisms &&
         a.mor_src == b.mor_src && a.mor_tgt == b.mor_tgt &&
         a.identity == b.identity && a.comp == b.comp;
}

CatFunctor identity_functor(CatPtr c) {
  CatFunctor f;
  f.name = "id_" + c->name;
  f.src = c;
  f.tgt = c;
  f.obj_map.resize(c->num_objects());
  f.mor_map.resize(c->num_morphisms());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f) {
  if (!same_category(*f.tgt, *g.src))
    throw StructuralError("compose_functors: middle categories differ");
  CatFunctor h;
  h.name = g.name + "." + f.name;
  h.src = f.src;
  h.tgt = g.tgt;
  h.obj_map.reserve(f.obj_map.size());
  for (int x : f.obj_map) h.obj_map.push_back(g.obj_map[x]);
  h.mor_map.reserve(f.mor_map.size());
  for (int m : f.mor_map) h.mor_map.push_back(g.mor_map[m]);
  return h;
}

bool same_functor(const CatFunctor& a, const CatFunctor& b) {
  return same_category(*a.src, *b.src) && same_category(*a.tgt, *b.tgt) &&
         a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

bool same_setfunctor(const SetFunctor& a, const SetFunctor& b) {
  return same_category(*a.shape, *b.shape) && a.elems == b.elems &&
         a.maps == b.maps;
}

SetNatTrans compose_setnat(const SetNatTrans& g, const SetNatTrans& f) {
  if (!same_setfunctor(f.target_functor, g.source_functor))
    throw StructuralError("compose_setnat: middle functors differ");
  SetNatTrans h;
  h.source_functor = f.source_functor;
  h.target_functor = g.target_functor;
  h.components.resize(f.components.size());
  for (size_t x = 0; x < f.components.size(); ++x) {
    h.components[x].reserve(f.components[x].size());
    for (int e : f.components[x]) h.components[x].push_back(g.components[x][e]);
  }
  return h;
}

SetNatTrans identity_setnat(const SetFunctor& f) {
  SetNatTrans t;
  t.source_functor = f;
  t.target_functor = f;
  t.components.resize(f.elems.size());
  for (size_t x = 0; x < f.elems.size(); ++x) {
    t.components[x].resize(f.elems[x].size());
    std::iota(t.components[x].begin(), t.components[x].end(), 0);
  }
  return t;
}

bool same_setnat(const SetNatTrans& a, const SetNatTrans& b) {
  return same_setfunctor(a.source_functor, b.source_functor) &&
         same_setfunctor(a.target_functor, b.target_functor) &&
         a.components == b.components;
}

// -- validation ------------------------------------------------------------

Report validate_category(const FinCategory& c) {
  Report r;
  int n = c.num_objects();
  int m = c.num_morphisms();
  if (static_cast<int>(c.identity.size()) != n ||
      static_cast<int>(c.mor_src.size()) != m ||
      static_cast<int>(c.mor_tgt.size()) != m ||
      c.comp.size() != static_cast<size_t>(m) * m)
    throw StructuralError("category tables have inconsistent sizes");
  for (int x = 0; x < n; ++x) {
    int i = c.identity[x];
    if (i < 0 || i >= m) throw StructuralError("identity of " + c.objects[x] + " unresolved");
    if (c.mor_src[i] != x || c.mor_tgt[i] != x)
      r.push_back("identity of " + c.objects[x] + " is not an endomorphism");
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int h = c.compose(g, f);
      if (c.composable(g, f)) {
        if (h < 0) {
          r.push_back("missing composite " + c.morphisms[g] + " . " + c.morphisms[f]);
        } else if (c.mor_src[h] != c.mor_src[f] || c.mor_tgt[h] != c.mor_tgt[g]) {
          r.push_back("composite " + c.morphisms[g] + " . " + c.morphisms[f] +
                      " = " + c.morphisms[h] + " has wrong endpoints");
        }
      } else if (h >= 0) {
        r.push_back("composite defined on non-composable pair " +
                    c.morphisms[g] + " . " + c.morphisms[f]);
      }
    }
  for (int f = 0; f < m; ++f) {
    int li = c.compose(c.identity[c.mor_tgt[f]], f);
    if (li >= 0 && li != f)
      r.push_back("left identity law fails at " + c.morphisms[f]);
    int ri = c.compose(f, c.identity[c.mor_src[f]]);
    if (ri >= 0 && ri != f)
      r.push_back("right identity law fails at " + c.morphisms[f]);
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        int gf = c.compose(g, f);
        int hg = c.compose(h, g);
        if (gf < 0 || hg < 0) continue;  // reported as missing already
        int l = c.compose(h, gf);
        int rr = c.compose(hg, f);
        if (l >= 0 && rr >= 0 && l != rr)
          r.push_back("associativity fails at " + c.morphisms[h] + " . " +
                      c.morphisms[g] + " . " + c.morphisms[f]);
      }
    }
  return r;
}

Report validate_functor(const CatFunctor& f) {
  Report r;
  const FinCategory& a = *f.src;
  const FinCategory& b = *f.tgt;
  if (static_cast<int>(f.obj_map.size()) != a.num_objects() ||
      static_cast<int>(f.mor_map.size()) != a.num_morphisms())
    throw StructuralError("functor maps have wrong sizes");
  for (int x : f.obj_map)
    if (x < 0 || x >= b.num_objects()) throw StructuralError("functor object image unresolved");
  for (int m : f.mor_map)
    if (m < 0 || m >= b.num_morphisms()) throw StructuralError("functor morphism image unresolved");
  for (int m = 0; m < a.num_morphisms(); ++m) {
    int fm = f.mor_map[m];
    if (b.mor_src[fm] != f.obj_map[a.mor_src[m]])
      r.push_back("source not preserved at " + a.morphisms[m]);
    if (b.mor_tgt[fm] != f.obj_map[a.mor_tgt[m]])
      r.push_back("target not preserved at " + a.morphisms[m]);
  }
  for (int x = 0; x < a.num_objects(); ++x)
    if (f.mor_map[a.identity[x]] != b.identity[f.obj_map[x]])
      r.push_back("identity not preserved at " + a.objects[x]);
  for (int g = 0; g < a.num_morphisms(); ++g)
    for (int mm = 0; mm < a.num_morphisms(); ++mm) {
      if (!a.composable(g, mm)) continue;
      int h = a.compose(g, mm);
      if (h < 0) continue;
      int img = b.compose(f.mor_map[g], f.mor_map[mm]);
      if (img != f.mor_map[h])
        r.push_back("composition not preserved at " + a.morphisms[g] + " . " +
                    a.morphisms[mm]);
    }
  return r;
}

Report validate_setfunctor(const SetFunctor& f) {
  Report r;
  const FinCategory& c = *f.shape;
  if (static_cast<int>(f.elems.size()) != c.num_objects() ||
      static_cast<int>(f.maps.size()) != c.num_morphisms())
    throw StructuralError("set functor tables have wrong sizes");
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (static_cast<int>(f.maps[m].size()) != f.set_size(c.mor_src[m]))
      throw StructuralError("set functor action at " + c.morphisms[m] + " not total");
    for (int e : f.maps[m])
      if (e < 0 || e >= f.set_size(c.mor_tgt[m]))
        throw StructuralError("set functor action at " + c.morphisms[m] + " out of range");
  }
  for (int x = 0; x < c.num_objects(); ++x) {
    const auto& idm = f.maps[c.identity[x]];
    for (int e = 0; e < f.set_size(x); ++e)
      if (idm[e] != e) {
        r.push_back("identity action at " + c.objects[x] + " is not the identity");
        break;
      }
  }
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int m = 0; m < c.num_morphisms(); ++m) {
      if (!c.composable(g, m)) continue;
      int h = c.compose(g, m);
      if (h < 0) continue;
      for (int e = 0; e < f.set_size(c.mor_src[m]); ++e)
        if (f.maps[h][e] != f.maps[g][f.maps[m][e]]) {
          r.push_back("functoriality fails at " + c.morphisms[g] + " . " + c.morphisms[m]);
          break;
        }
    }
  return r;
}

Report validate_catnat(const CatNatTrans& t) {
  Report r;
  const CatFunctor& F = t.source_functor;
  const CatFunctor& G = t.target_functor;
  if (!same_category(*F.src, *G.src) || !same_category(*F.tgt, *G.tgt))
    throw StructuralError("natural transformation between mismatched functors");
  const FinCategory& a = *F.src;
  const FinCategory& b = *F.tgt;
  if (static_cast<int>(t.components.size()) != a.num_objects())
    throw StructuralError("wrong number of components");
  for (int x = 0; x < a.num_objects(); ++x) {
    int c = t.components[x];
    if (c < 0 || c >= b.num_morphisms()) throw StructuralError("component unresolved");
    if (b.mor_src[c] != F.obj_map[x] || b.mor_tgt[c] != G.obj_map[x])
      r.push_back("component at " + a.objects[x] + " has wrong endpoints");
  }
  if (!r.empty()) return r;
  for (int m = 0; m < a.num_morphisms(); ++m) {
    int x = a.mor_src[m];
    int y = a.mor_tgt[m];
    int lhs = b.compose(t.components[y], F.mor_map[m]);
    int rhs = b.compose(G.mor_map[m], t.components[x]);
    if (lhs != rhs || lhs < 0)
      r.push_back("naturality fails at " + a.morphisms[m]);
  }
  return r;
}

Report validate_setnat(const SetNatTrans& t) {
  Report r;
  const SetFunctor& F = t.source_functor;
  const SetFunctor& G = t.target_functor;
  if (!same_category(*F.shape, *G.shape))
    throw StructuralError("set transformation between mismatched shapes");
  const FinCategory& c = *F.shape;
  if (static_cast<int>(t.components.size()) != c.num_objects())
    throw StructuralError("wrong number of components");
  for (int x = 0; x < c.num_objects(); ++x) {
    if (static_cast<int>(t.components[x].size()) != F.set_size(x))
      throw StructuralError("component at " + c.objects[x] + " not total");
    for (int e : t.components[x])
      if (e < 0 || e >= G.set_size(x))
        throw StructuralError("component at " + c.objects[x] + " out of range");
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int x = c.mor_src[m];
    int y = c.mor_tgt[m];
    for (int e = 0; e < F.set_size(x); ++e)
      if (t.components[y][F.maps[m][e]] != G.maps[m][t.components[x][e]]) {
        r.push_back("naturality fails at " + c.morphisms[m]);
        break;
      }
  }
  return r;
}

// -- basic constructions ---------------------------------------------------

FinCategory opposite(const FinCategory& c) {
  FinCategory o;
  o.name = c.name;  // ids are shared; opposite is an involution on the nose
  o.objects = c.objects;
  o.morphisms = c.morphisms;
  o.mor_src = c.mor_tgt;
  o.mor_tgt = c.mor_src;
  o.identity = c.identity;
  size_t m = c.morphisms.size();
  o.comp.assign(m * m, -1);
  for (size_t g = 0; g < m; ++g)
    for (size_t f = 0; f < m; ++f) o.comp[g * m + f] = c.comp[f * m + g];
  // rebuild the interning maps
  FinCategory rebuilt;
  rebuilt.name = o.name;
  for (const auto& id : o.objects) rebuilt.add_object(id);
  for (size_t i = 0; i < m; ++i)
    rebuilt.add_morphism(o.morphisms[i], o.mor_src[i], o.mor_tgt[i]);
  rebuilt.identity = o.identity;
  rebuilt.comp = o.comp;
  return rebuilt;
}

DisjointUnion disjoint_union(CatPtr b, CatPtr c) {
  auto u = std::make_shared<FinCategory>();
  u->name = b->name + "+" + c->name;
  CatFunctor inl, inr;
  inl.name = "inl";
  inl.src = b;
  inr.name = "inr";
  inr.src = c;
  for (const auto& id : b->objects) inl.obj_map.push_back(u->add_object("L(" + id + ")"));
  for (const auto& id : c->objects) inr.obj_map.push_back(u->add_object("R(" + id + ")"));
  for (int m = 0; m < b->num_morphisms(); ++m)
    inl.mor_map.push_back(u->add_morphism("L(" + b->morphisms[m] + ")",
                                          inl.obj_map[b->mor_src[m]],
                                          inl.obj_map[b->mor_tgt[m]]));
  for (int m = 0; m < c->num_morphisms(); ++m)
    inr.mor_map.push_back(u->add_morphism("R(" + c->morphisms[m] + ")",
                                          inr.obj_map[c->mor_src[m]],
                                          inr.obj_map[c->mor_tgt[m]]));
  for (int x = 0; x < b->num_objects(); ++x)
    u->identity[inl.obj_map[x]] = inl.mor_map[b->identity[x]];
  for (int x = 0; x < c->num_objects(); ++x)
    u->identity[inr.obj_map[x]] = inr.mor_map[c->identity[x]];
  for (int g = 0; g < b->num_morphisms(); ++g)
    for (int f = 0; f < b->num_morphisms(); ++f)
      if (b->compose(g, f) >= 0)
        u->set_compose(inl.mor_map[g], inl.mor_map[f], inl.mor_map[b->compose(g, f)]);
  for (int g = 0; g < c->num_morphisms(); ++g)
    for (int f = 0; f < c->num_morphisms(); ++f)
      if (c->compose(g, f) >= 0)
        u->set_compose(inr.mor_map[g], inr.mor_map[f], inr.mor_map[c->compose(g, f)]);
  CatPtr shared = u;
  inl.tgt = shared;
  inr.tgt = shared;
  return DisjointUnion{shared, std::move(inl), std::move(inr)};
}

int Quiver::add_vertex(const std::string& id) {
  vertices.push_back(id);
  return static_cast<int>(vertices.size()) - 1;
}

void Quiver::add_edge(const std::string& id, int src, int tgt) {
  if (src < 0 || src >= static_cast<int>(vertices.size()) || tgt < 0 ||
      tgt >= static_cast<int>(vertices.size()))
    throw StructuralError("edge endpoints out of range: " + id);
  edges.push_back(Edge{id, src, tgt});
}

bool Quiver::acyclic() const {
  int n = static_cast<int>(vertices.size());
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& e : edges) {
    out[e.src].push_back(e.tgt);
    ++indeg[e.tgt];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return seen == n;
}

FreeCat free_on_acyclic_quiver(const Quiver& q) {
  if (!q.acyclic())
    throw StructuralError("quiver has a directed cycle; free category would be infinite");
  auto cat = std::make_shared<FinCategory>();
  cat->name = "free";
  for (const auto& v : q.vertices) cat->add_object(v);

  FreeCat out;
  out.edge_morphism.assign(q.edges.size(), -1);

  // enumerate all non-empty paths by breadth over path length
  struct Path {
    std::vector<int> edges;  // diagrammatic order
    int src, tgt;
  };
  std::vector<Path> paths;
  for (size_t e = 0; e < q.edges.size(); ++e)
    paths.push_back(Path{{static_cast<int>(e)}, q.edges[e].src, q.edges[e].tgt});
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t e = 0; e < q.edges.size(); ++e)
      if (q.edges[e].src == paths[i].tgt) {
        Path p = paths[i];
        p.edges.push_back(static_cast<int>(e));
        p.tgt = q.edges[e].tgt;
        paths.push_back(std::move(p));
      }
  // stable order: by length, then by edge word
  std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });

  auto path_name = [&](const std::vector<int>& edges) {
    // composition order: last edge first, joined with '.'
    std::string s;
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      if (!s.empty()) s += ".";
      s += q.edges[*it].id;
    }
    return s;
  };

  std::map<std::vector<int>, int> by_word;
  out.path_edges.resize(0);
  // identities first, so the generators keep their bare names
  cat->synthesize_identities();
  for (int x = 0; x < cat->num_objects(); ++x) out.path_edges.push_back({});
  for (const auto& p : paths) {
    int m = cat->add_morphism(path_name(p.edges), p.src, p.tgt);
    by_word[p.edges] = m;
    out.path_edges.push_back(p.edges);
    if (p.edges.size() == 1) out.edge_morphism[p.edges[0]] = m;
  }
  // grow the table: identity composites plus concatenation
  cat->fill_identity_composites();
  for (int g = 0; g < cat->num_morphisms(); ++g)
    for (int f = 0; f < cat->num_morphisms(); ++f) {
      if (!cat->composable(g, f)) continue;
      const auto& wg = out.path_edges[g];
      const auto& wf = out.path_edges[f];
      if (wg.empty() || wf.empty()) continue;  // identity cases already set
      std::vector<int> w = wf;
      w.insert(w.end(), wg.begin(), wg.end());
      cat->set_compose(g, f, by_word.at(w));
    }
  out.cat = cat;
  return out;
}

std::vector<std::vector<int>> connected_components(const FinCategory& c) {
  int n = c.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < c.num_morphisms(); ++m)
    parent[find(c.mor_src[m])] = find(c.mor_tgt[m]);
  std::map<int, std::vector<int>> blocks;
  for (int x = 0; x < n; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

CatPtr terminal_category() {
  auto c = std::make_shared<FinCategory>();
  c->name = "pt";
  c->add_object("pt");
  c->synthesize_identities();
  return c;
}

CatFunctor constant_functor(CatPtr src, CatPtr tgt, int obj) {
  if (obj < 0 || obj >= tgt->num_objects())
    throw StructuralError("constant_functor: object out of range");
  CatFunctor f;
  f.name = "const_" + tgt->objects[obj];
  f.src = src;
  f.tgt = tgt;
  f.obj_map.assign(src->num_objects(), obj);
  f.mor_map.assign(src->num_morphisms(), tgt->identity[obj]);
  return f;
}

}  // namespace flowcat
