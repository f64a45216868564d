#include "flowcat/migration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace flowcat {

double enumeration_cap() {
  if (const char* env = std::getenv("FLOWCAT_ENUM_CAP")) {
    double v = std::atof(env);
    if (v > 0) return v;
  }
  return 1e6;
}

// -- colimit ---------------------------------------------------------------

Colimit colimit(const SetFunctor& diagram) {
  const FinCategory& c = *diagram.shape;
  std::vector<int> offset(c.num_objects() + 1, 0);
  for (int x = 0; x < c.num_objects(); ++x)
    offset[x + 1] = offset[x] + diagram.set_size(x);
  int total = offset[c.num_objects()];

  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int x = c.mor_src[m], y = c.mor_tgt[m];
    for (int e = 0; e < diagram.set_size(x); ++e)
      parent[find(offset[x] + e)] = find(offset[y] + diagram.apply(m, e));
  }

  Colimit out;
  std::vector<int> class_of(total, -1);
  for (int x = 0; x < c.num_objects(); ++x) {
    out.legs.emplace_back();
    for (int e = 0; e < diagram.set_size(x); ++e) {
      int root = find(offset[x] + e);
      if (class_of[root] < 0) {
        class_of[root] = static_cast<int>(out.apex.size());
        out.apex.push_back("K(" + c.objects[x] + "," + diagram.elems[x][e] + ")");
        out.rep.push_back({x, e});
      }
      out.legs[x].push_back(class_of[root]);
    }
  }
  return out;
}

// -- limit -----------------------------------------------------------------

int Limit::family_of(const std::vector<int>& fam) const {
  auto it = index.find(fam);
  return it == index.end() ? -1 : it->second;
}

Limit limit(const SetFunctor& diagram) {
  const FinCategory& c = *diagram.shape;
  int n = c.num_objects();
  Limit out;

  // visit objects along the zigzag graph so every non-root choice is
  // constrained by an already assigned neighbour; otherwise disconnected
  // prefixes defeat the pruning entirely
  std::vector<std::vector<int>> touching(n);  // object -> morphisms at it
  for (int m = 0; m < c.num_morphisms(); ++m) {
    touching[c.mor_src[m]].push_back(m);
    if (c.mor_tgt[m] != c.mor_src[m]) touching[c.mor_tgt[m]].push_back(m);
  }
  std::vector<int> order;
  std::vector<bool> queued(n, false);
  for (int root = 0; root < n; ++root) {
    if (queued[root]) continue;
    queued[root] = true;
    order.push_back(root);
    for (size_t head = order.size() - 1; head < order.size(); ++head) {
      for (int m : touching[order[head]]) {
        for (int other : {c.mor_src[m], c.mor_tgt[m]})
          if (!queued[other]) {
            queued[other] = true;
            order.push_back(other);
          }
      }
    }
  }

  std::vector<int> assign(n, -1);
  std::vector<std::vector<int>> found;
  std::function<void(int)> dfs = [&](int level) {
    if (level == n) {
      found.push_back(assign);
      return;
    }
    int x = order[level];
    for (int e = 0; e < diagram.set_size(x); ++e) {
      bool ok = true;
      for (int m : touching[x]) {
        int sx = c.mor_src[m], tx = c.mor_tgt[m];
        int sv = sx == x ? e : assign[sx];
        int tv = tx == x ? e : assign[tx];
        if (sv < 0 || tv < 0) continue;
        if (diagram.apply(m, sv) != tv) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assign[x] = e;
      dfs(level + 1);
      assign[x] = -1;
    }
  };
  dfs(0);

  // emit in lexicographic object-index order for deterministic naming
  std::sort(found.begin(), found.end());
  for (auto& fam : found) {
    std::string nm = "(";
    for (int x = 0; x < n; ++x) {
      if (x) nm += ",";
      nm += diagram.elems[x][fam[x]];
    }
    nm += ")";
    out.index[fam] = static_cast<int>(out.families.size());
    out.families.push_back(std::move(fam));
    out.apex.push_back(nm);
  }
  if (n == 0) out.apex[0] = "()";
  return out;
}

// -- pullback --------------------------------------------------------------

SetFunctor pullback(const CatFunctor& f, const SetFunctor& g) {
  if (!same_category(*f.tgt, *g.shape))
    throw StructuralError("pullback: shape mismatch");
  SetFunctor out;
  out.name = "D_" + f.name + "(" + g.name + ")";
  out.shape = f.src;
  for (int x : f.obj_map) out.elems.push_back(g.elems[x]);
  for (int m : f.mor_map) out.maps.push_back(g.maps[m]);
  return out;
}

// -- left Kan --------------------------------------------------------------

namespace {

SetFunctor restrict_along(const FlowTo& flow, const SetFunctor& F) {
  SetFunctor g;
  g.name = F.name + "|" + flow.cat->name;
  g.shape = flow.cat;
  for (const auto& o : flow.obj) g.elems.push_back(F.elems[o.first]);
  for (size_t m = 0; m < flow.mor.size(); ++m)
    g.maps.push_back(F.maps[flow.proj.mor_map[m]]);
  return g;
}

}  // namespace

LeftKan left_kan(const CatFunctor& f, const SetFunctor& diagram) {
  if (!same_category(*f.src, *diagram.shape))
    throw StructuralError("left_kan: shape mismatch");
  const FinCategory& B = *f.tgt;
  LeftKan out;
  out.result.name = "S_" + f.name + "(" + diagram.name + ")";
  out.result.shape = f.tgt;
  for (int d = 0; d < B.num_objects(); ++d) {
    out.flows.push_back(flow_to(f, d));
    Colimit co = colimit(restrict_along(out.flows.back(), diagram));
    out.result.elems.push_back(co.apex);
    out.cls.push_back(co.legs);
  }
  for (int delta = 0; delta < B.num_morphisms(); ++delta) {
    int d = B.mor_src[delta];
    int d2 = B.mor_tgt[delta];
    std::vector<int> map(out.result.set_size(d), -1);
    const FlowTo& ft = out.flows[d];
    const FlowTo& ft2 = out.flows[d2];
    for (size_t k = 0; k < ft.obj.size(); ++k) {
      auto [a, eta] = ft.obj[k];
      int k2 = ft2.object_of(a, B.compose(delta, eta));
      for (int e = 0; e < diagram.set_size(a); ++e) {
        int from = out.cls[d][k][e];
        int to = out.cls[d2][k2][e];
        if (map[from] >= 0 && map[from] != to)
          throw StructuralError("left_kan: transition not well-defined on classes");
        map[from] = to;
      }
    }
    out.result.maps.push_back(std::move(map));
  }
  return out;
}

// -- right Kan -------------------------------------------------------------

RightKan right_kan(const CatFunctor& f, const SetFunctor& diagram) {
  if (!same_category(*f.src, *diagram.shape))
    throw StructuralError("right_kan: shape mismatch");
  const FinCategory& B = *f.tgt;
  RightKan out;
  out.result.name = "P_" + f.name + "(" + diagram.name + ")";
  out.result.shape = f.tgt;
  for (int d = 0; d < B.num_objects(); ++d) {
    out.flows.push_back(flow_from(f, d));
    out.limits.push_back(limit(restrict_along(out.flows.back(), diagram)));
    out.result.elems.push_back(out.limits.back().apex);
  }
  for (int delta = 0; delta < B.num_morphisms(); ++delta) {
    int d = B.mor_src[delta];
    int d2 = B.mor_tgt[delta];
    const FlowTo& ff = out.flows[d];
    const FlowTo& ff2 = out.flows[d2];
    std::vector<int> map;
    for (const auto& fam : out.limits[d].families) {
      std::vector<int> moved(ff2.obj.size());
      for (size_t k2 = 0; k2 < ff2.obj.size(); ++k2) {
        auto [a, eta2] = ff2.obj[k2];
        moved[k2] = fam[ff.object_of(a, B.compose(eta2, delta))];
      }
      int idx = out.limits[d2].family_of(moved);
      if (idx < 0) throw StructuralError("right_kan: transported family not in limit");
      map.push_back(idx);
    }
    out.result.maps.push_back(std::move(map));
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> right_kan_via_nat(
    const CatFunctor& f, const SetFunctor& diagram) {
  const FinCategory& A = *f.src;
  const FinCategory& B = *f.tgt;
  std::vector<std::vector<std::vector<int>>> out;
  for (int d = 0; d < B.num_objects(); ++d) {
    // representable-composite diagram a |-> hom(d, f(a))
    SetFunctor H;
    H.name = "hom(" + B.objects[d] + ",f-)";
    H.shape = f.src;
    std::vector<std::vector<int>> hom_list(A.num_objects());
    for (int a = 0; a < A.num_objects(); ++a) {
      hom_list[a] = B.hom(d, f.obj_map[a]);
      std::vector<std::string> names;
      for (int m : hom_list[a]) names.push_back(B.morphisms[m]);
      H.elems.push_back(std::move(names));
    }
    for (int theta = 0; theta < A.num_morphisms(); ++theta) {
      int a = A.mor_src[theta], a2 = A.mor_tgt[theta];
      std::vector<int> map;
      for (int m : hom_list[a]) {
        int post = B.compose(f.mor_map[theta], m);
        auto it = std::find(hom_list[a2].begin(), hom_list[a2].end(), post);
        map.push_back(static_cast<int>(it - hom_list[a2].begin()));
      }
      H.maps.push_back(std::move(map));
    }

    FlowTo ff = flow_from(f, d);
    std::vector<std::vector<int>> fams;
    for (const auto& nt : enumerate_nat_trans(H, diagram)) {
      std::vector<int> fam(ff.obj.size());
      for (size_t k = 0; k < ff.obj.size(); ++k) {
        auto [a, eta] = ff.obj[k];
        auto it = std::find(hom_list[a].begin(), hom_list[a].end(), eta);
        fam[k] = nt.components[a][it - hom_list[a].begin()];
      }
      fams.push_back(std::move(fam));
    }
    std::sort(fams.begin(), fams.end());
    out.push_back(std::move(fams));
  }
  return out;
}

// -- units and counits -----------------------------------------------------

SetNatTrans unit_left(const CatFunctor& f, const SetFunctor& F) {
  const FinCategory& B = *f.tgt;
  LeftKan lk = left_kan(f, F);
  SetNatTrans t;
  t.source_functor = F;
  t.target_functor = pullback(f, lk.result);
  for (int a = 0; a < f.src->num_objects(); ++a) {
    int d = f.obj_map[a];
    int k = lk.flows[d].object_of(a, B.identity[d]);
    t.components.push_back(lk.cls[d][k]);
  }
  return t;
}

SetNatTrans counit_left(const CatFunctor& f, const SetFunctor& G) {
  const FinCategory& B = *f.tgt;
  SetFunctor pulled = pullback(f, G);
  LeftKan lk = left_kan(f, pulled);
  SetNatTrans t;
  t.source_functor = lk.result;
  t.target_functor = G;
  for (int d = 0; d < B.num_objects(); ++d) {
    std::vector<int> comp(lk.result.set_size(d), -1);
    const FlowTo& ft = lk.flows[d];
    for (size_t k = 0; k < ft.obj.size(); ++k) {
      auto [a, eta] = ft.obj[k];
      for (int e = 0; e < pulled.set_size(a); ++e) {
        int cls = lk.cls[d][k][e];
        int val = G.apply(eta, e);
        if (comp[cls] >= 0 && comp[cls] != val)
          throw StructuralError("counit_left: not well-defined on classes");
        comp[cls] = val;
      }
    }
    t.components.push_back(std::move(comp));
  }
  return t;
}

SetNatTrans unit_right(const CatFunctor& f, const SetFunctor& G) {
  const FinCategory& B = *f.tgt;
  SetFunctor pulled = pullback(f, G);
  RightKan rk = right_kan(f, pulled);
  SetNatTrans t;
  t.source_functor = G;
  t.target_functor = rk.result;
  for (int d = 0; d < B.num_objects(); ++d) {
    std::vector<int> comp;
    const FlowTo& ff = rk.flows[d];
    for (int y = 0; y < G.set_size(d); ++y) {
      std::vector<int> fam(ff.obj.size());
      for (size_t k = 0; k < ff.obj.size(); ++k) fam[k] = G.apply(ff.obj[k].second, y);
      int idx = rk.limits[d].family_of(fam);
      if (idx < 0) throw StructuralError("unit_right: family not in limit");
      comp.push_back(idx);
    }
    t.components.push_back(std::move(comp));
  }
  return t;
}

SetNatTrans counit_right(const CatFunctor& f, const SetFunctor& F) {
  const FinCategory& B = *f.tgt;
  RightKan rk = right_kan(f, F);
  SetNatTrans t;
  t.source_functor = pullback(f, rk.result);
  t.target_functor = F;
  for (int a = 0; a < f.src->num_objects(); ++a) {
    int d = f.obj_map[a];
    int k = rk.flows[d].object_of(a, B.identity[d]);
    std::vector<int> comp;
    for (const auto& fam : rk.limits[d].families) comp.push_back(fam[k]);
    t.components.push_back(std::move(comp));
  }
  return t;
}

// -- whiskering ------------------------------------------------------------

SetNatTrans pullback_nat(const CatFunctor& f, const SetNatTrans& t) {
  SetNatTrans out;
  out.source_functor = pullback(f, t.source_functor);
  out.target_functor = pullback(f, t.target_functor);
  for (int x : f.obj_map) out.components.push_back(t.components[x]);
  return out;
}

SetNatTrans leftkan_nat(const CatFunctor& f, const SetNatTrans& t) {
  const FinCategory& B = *f.tgt;
  LeftKan lx = left_kan(f, t.source_functor);
  LeftKan ly = left_kan(f, t.target_functor);
  SetNatTrans out;
  out.source_functor = lx.result;
  out.target_functor = ly.result;
  for (int d = 0; d < B.num_objects(); ++d) {
    std::vector<int> comp(lx.result.set_size(d), -1);
    const FlowTo& ft = lx.flows[d];
    for (size_t k = 0; k < ft.obj.size(); ++k) {
      int a = ft.obj[k].first;
      for (int e = 0; e < t.source_functor.set_size(a); ++e) {
        int from = lx.cls[d][k][e];
        int to = ly.cls[d][k][t.components[a][e]];
        if (comp[from] >= 0 && comp[from] != to)
          throw StructuralError("leftkan_nat: not well-defined on classes");
        comp[from] = to;
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SetNatTrans rightkan_nat(const CatFunctor& f, const SetNatTrans& t) {
  const FinCategory& B = *f.tgt;
  RightKan rx = right_kan(f, t.source_functor);
  RightKan ry = right_kan(f, t.target_functor);
  SetNatTrans out;
  out.source_functor = rx.result;
  out.target_functor = ry.result;
  for (int d = 0; d < B.num_objects(); ++d) {
    std::vector<int> comp;
    for (const auto& fam : rx.limits[d].families) {
      std::vector<int> mapped(fam.size());
      for (size_t k = 0; k < fam.size(); ++k)
        mapped[k] = t.components[rx.flows[d].obj[k].first][fam[k]];
      int idx = ry.limits[d].family_of(mapped);
      if (idx < 0) throw StructuralError("rightkan_nat: image family not in limit");
      comp.push_back(idx);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

// -- adjunction transposes -------------------------------------------------

SetNatTrans adjunct_left(const CatFunctor& f, const SetNatTrans& h,
                         const SetFunctor& Y) {
  // h : X => Df Y; the adjunct sends the class of (x at (a, eta)) to
  // Y(eta)(h_a(x))
  if (!same_setfunctor(h.target_functor, pullback(f, Y)))
    throw StructuralError("adjunct_left: target of h is not the pullback of Y");
  const SetFunctor& X = h.source_functor;
  const FinCategory& B = *f.tgt;
  LeftKan lk = left_kan(f, X);
  SetNatTrans out;
  out.source_functor = lk.result;
  out.target_functor = Y;
  for (int d = 0; d < B.num_objects(); ++d) {
    std::vector<int> comp(lk.result.set_size(d), -1);
    const FlowTo& ft = lk.flows[d];
    for (size_t k = 0; k < ft.obj.size(); ++k) {
      auto [a, eta] = ft.obj[k];
      for (int e = 0; e < X.set_size(a); ++e) {
        int cls = lk.cls[d][k][e];
        int val = Y.apply(eta, h.components[a][e]);
        if (comp[cls] >= 0 && comp[cls] != val)
          throw StructuralError("adjunct_left: not well-defined on classes");
        comp[cls] = val;
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SetNatTrans adjunct_left_inv(const CatFunctor& f, const SetNatTrans& h,
                             const SetFunctor& X) {
  // h : Sf X => Y; transpose is Df h composed with the unit of Sf -| Df
  if (!same_setfunctor(h.source_functor, left_kan(f, X).result))
    throw StructuralError("adjunct_left_inv: source of h is not the left Kan of X");
  return compose_setnat(pullback_nat(f, h), unit_left(f, X));
}

SetNatTrans adjunct_right(const CatFunctor& f, const SetNatTrans& h,
                          const SetFunctor& G) {
  // h : Df G => X; the adjunct sends y to the family (h_a(G(eta)(y)))
  if (!same_setfunctor(h.source_functor, pullback(f, G)))
    throw StructuralError("adjunct_right: source of h is not the pullback of G");
  const SetFunctor& X = h.target_functor;
  const FinCategory& B = *f.tgt;
  RightKan rk = right_kan(f, X);
  SetNatTrans out;
  out.source_functor = G;
  out.target_functor = rk.result;
  for (int d = 0; d < B.num_objects(); ++d) {
    std::vector<int> comp;
    const FlowTo& ff = rk.flows[d];
    for (int y = 0; y < G.set_size(d); ++y) {
      std::vector<int> fam(ff.obj.size());
      for (size_t k = 0; k < ff.obj.size(); ++k) {
        auto [a, eta] = ff.obj[k];
        fam[k] = h.components[a][G.apply(eta, y)];
      }
      int idx = rk.limits[d].family_of(fam);
      if (idx < 0) throw StructuralError("adjunct_right: family not in limit");
      comp.push_back(idx);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SetNatTrans adjunct_right_inv(const CatFunctor& f, const SetNatTrans& h,
                              const SetFunctor& X) {
  // h : G => Pf X; transpose is the counit composed with Df h
  if (!same_setfunctor(h.target_functor, right_kan(f, X).result))
    throw StructuralError("adjunct_right_inv: target of h is not the right Kan of X");
  return compose_setnat(counit_right(f, X), pullback_nat(f, h));
}

// -- enumeration oracles ---------------------------------------------------

std::vector<SetNatTrans> enumerate_nat_trans(const SetFunctor& F,
                                             const SetFunctor& G, double cap) {
  if (!same_category(*F.shape, *G.shape))
    throw StructuralError("enumerate_nat_trans: shape mismatch");
  const FinCategory& c = *F.shape;
  double estimate = 1;
  for (int x = 0; x < c.num_objects(); ++x)
    estimate *= std::pow(static_cast<double>(G.set_size(x)), F.set_size(x));
  if (estimate > cap) throw CapExceeded(estimate);

  std::vector<SetNatTrans> out;
  SetNatTrans cand;
  cand.source_functor = F;
  cand.target_functor = G;
  cand.components.assign(c.num_objects(), {});

  std::function<void(int)> dfs = [&](int x) {
    if (x == c.num_objects()) {
      if (validate_setnat(cand).empty()) out.push_back(cand);
      return;
    }
    int n = F.set_size(x);
    int m = G.set_size(x);
    if (n == 0) {
      cand.components[x] = {};
      dfs(x + 1);
      return;
    }
    if (m == 0) return;  // no total function into the empty set
    std::vector<int> fn(n, 0);
    while (true) {
      cand.components[x] = fn;
      dfs(x + 1);
      int i = 0;
      while (i < n && ++fn[i] == m) fn[i++] = 0;
      if (i == n) break;
    }
  };
  dfs(0);
  return out;
}

std::vector<CatFunctor> enumerate_functors(CatPtr a, CatPtr b, double cap) {
  const FinCategory& A = *a;
  const FinCategory& B = *b;
  int free_mor = 0;
  for (int m = 0; m < A.num_morphisms(); ++m)
    if (!A.is_identity(m)) ++free_mor;
  double estimate = std::pow(static_cast<double>(B.num_objects()), A.num_objects()) *
                    std::pow(std::max(1.0, static_cast<double>(B.num_morphisms())),
                             free_mor);
  if (estimate > cap) throw CapExceeded(estimate);

  std::vector<CatFunctor> out;
  CatFunctor f;
  f.name = "enum";
  f.src = a;
  f.tgt = b;
  f.obj_map.assign(A.num_objects(), -1);
  f.mor_map.assign(A.num_morphisms(), -1);

  std::function<void(int)> assign_mor = [&](int m) {
    if (m == A.num_morphisms()) {
      out.push_back(f);
      return;
    }
    auto consistent = [&](int upto) {
      for (int x = 0; x <= upto; ++x)
        for (int y = 0; y <= upto; ++y) {
          int h = A.compose(x, y);
          if (h < 0 || h > upto) continue;
          if (x != upto && y != upto && h != upto) continue;
          if (B.compose(f.mor_map[x], f.mor_map[y]) != f.mor_map[h]) return false;
        }
      return true;
    };
    if (A.is_identity(m)) {
      f.mor_map[m] = B.identity[f.obj_map[A.mor_src[m]]];
      if (consistent(m)) assign_mor(m + 1);
      f.mor_map[m] = -1;
      return;
    }
    for (int img : B.hom(f.obj_map[A.mor_src[m]], f.obj_map[A.mor_tgt[m]])) {
      f.mor_map[m] = img;
      if (consistent(m)) assign_mor(m + 1);
    }
    f.mor_map[m] = -1;
  };

  std::function<void(int)> assign_obj = [&](int x) {
    if (x == A.num_objects()) {
      assign_mor(0);
      return;
    }
    for (int img = 0; img < B.num_objects(); ++img) {
      f.obj_map[x] = img;
      assign_obj(x + 1);
    }
    f.obj_map[x] = -1;
  };
  assign_obj(0);
  return out;
}

}  // namespace flowcat
