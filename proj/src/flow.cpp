#include "flowcat/flow.hpp"

#include <algorithm>
#include <numeric>

namespace flowcat {

Report validate_lax_square(const LaxSquare& sq) {
  if (!same_category(*sq.s.src, *sq.t.src))
    throw StructuralError("lax square: top and left legs have different sources");
  if (!same_category(*sq.s.tgt, *sq.f.src))
    throw StructuralError("lax square: top/right corner mismatch");
  if (!same_category(*sq.t.tgt, *sq.g.src))
    throw StructuralError("lax square: left/bottom corner mismatch");
  if (!same_category(*sq.f.tgt, *sq.g.tgt))
    throw StructuralError("lax square: right and bottom legs have different targets");
  Report r;
  auto collect = [&r](const Report& sub, const std::string& what) {
    for (const auto& line : sub) r.push_back(what + ": " + line);
  };
  collect(validate_functor(sq.s), "s");
  collect(validate_functor(sq.t), "t");
  collect(validate_functor(sq.f), "f");
  collect(validate_functor(sq.g), "g");
  if (!same_functor(sq.alpha.source_functor, compose_functors(sq.f, sq.s)))
    r.push_back("alpha: source functor is not f.s");
  if (!same_functor(sq.alpha.target_functor, compose_functors(sq.g, sq.t)))
    r.push_back("alpha: target functor is not g.t");
  if (r.empty()) collect(validate_catnat(sq.alpha), "alpha");
  return r;
}

// -- flow product ----------------------------------------------------------

int FlowProduct::object_of(int b, int c, int eta) const {
  auto it = obj_index.find({b, c, eta});
  return it == obj_index.end() ? -1 : it->second;
}

int FlowProduct::morphism_of(int src_obj, int tgt_obj, int phi, int psi) const {
  auto it = mor_index.find({src_obj, tgt_obj, phi, psi});
  return it == mor_index.end() ? -1 : it->second;
}

FlowProduct flow_product(const CatFunctor& f, const CatFunctor& g) {
  if (!same_category(*f.tgt, *g.tgt))
    throw StructuralError("flow_product: cospan legs have different targets");
  const FinCategory& B = *f.src;
  const FinCategory& C = *g.src;
  const FinCategory& D = *f.tgt;

  FlowProduct fp;
  auto cat = std::make_shared<FinCategory>();
  cat->name = f.src->name + "|" + g.src->name;

  for (int b = 0; b < B.num_objects(); ++b)
    for (int c = 0; c < C.num_objects(); ++c)
      for (int eta : D.hom(f.obj_map[b], g.obj_map[c])) {
        int o = cat->add_object("T(" + B.objects[b] + "," + C.objects[c] + "," +
                                D.morphisms[eta] + ")");
        fp.obj.push_back({b, c, eta});
        fp.obj_index[{b, c, eta}] = o;
      }

  // non-identity morphisms: pairs (phi, psi) closing the square
  int nobj = cat->num_objects();
  for (int o1 = 0; o1 < nobj; ++o1)
    for (int o2 = 0; o2 < nobj; ++o2) {
      auto [b, c, eta] = fp.obj[o1];
      auto [b2, c2, eta2] = fp.obj[o2];
      for (int phi : B.hom(b, b2))
        for (int psi : C.hom(c, c2)) {
          if (D.compose(eta2, f.mor_map[phi]) != D.compose(g.mor_map[psi], eta))
            continue;
          if (o1 == o2 && B.is_identity(phi) && C.is_identity(psi))
            continue;  // synthesized below
          int m = cat->add_morphism("P(" + B.morphisms[phi] + "," +
                                        C.morphisms[psi] + "," + D.morphisms[eta] +
                                        "," + D.morphisms[eta2] + ")",
                                    o1, o2);
          fp.mor.push_back({o1, o2, phi, psi});
          fp.mor_index[{o1, o2, phi, psi}] = m;
        }
    }
  cat->synthesize_identities();
  for (int o = 0; o < nobj; ++o) {
    auto [b, c, eta] = fp.obj[o];
    fp.mor.push_back({o, o, B.identity[b], C.identity[c]});
    fp.mor_index[{o, o, B.identity[b], C.identity[c]}] = cat->identity[o];
  }
  for (int m2 = 0; m2 < cat->num_morphisms(); ++m2)
    for (int m1 = 0; m1 < cat->num_morphisms(); ++m1) {
      if (!cat->composable(m2, m1)) continue;
      const auto& a1 = fp.mor[m1];
      const auto& a2 = fp.mor[m2];
      int phi = B.compose(a2.phi, a1.phi);
      int psi = C.compose(a2.psi, a1.psi);
      cat->set_compose(m2, m1, fp.mor_index.at({a1.src_obj, a2.tgt_obj, phi, psi}));
    }
  fp.cat = cat;

  fp.proj_b.name = "proj_" + B.name;
  fp.proj_b.src = cat;
  fp.proj_b.tgt = f.src;
  fp.proj_c.name = "proj_" + C.name;
  fp.proj_c.src = cat;
  fp.proj_c.tgt = g.src;
  for (const auto& o : fp.obj) {
    fp.proj_b.obj_map.push_back(o[0]);
    fp.proj_c.obj_map.push_back(o[1]);
  }
  for (const auto& m : fp.mor) {
    fp.proj_b.mor_map.push_back(m.phi);
    fp.proj_c.mor_map.push_back(m.psi);
  }

  CatNatTrans alpha;
  alpha.source_functor = compose_functors(f, fp.proj_b);
  alpha.target_functor = compose_functors(g, fp.proj_c);
  for (const auto& o : fp.obj) alpha.components.push_back(o[2]);

  fp.square = LaxSquare{fp.proj_b, fp.proj_c, f, g, std::move(alpha)};
  return fp;
}

FibreProduct fibre_product(const CatFunctor& f, const CatFunctor& g) {
  FibreProduct out;
  out.ambient = flow_product(f, g);
  const FinCategory& D = *f.tgt;
  const FinCategory& amb = *out.ambient.cat;

  auto cat = std::make_shared<FinCategory>();
  cat->name = f.src->name + "x" + g.src->name;
  std::vector<int> obj_to_amb, mor_to_amb;
  std::vector<int> amb_obj_here(amb.num_objects(), -1);
  for (int o = 0; o < amb.num_objects(); ++o) {
    if (!D.is_identity(out.ambient.obj[o][2])) continue;
    amb_obj_here[o] = cat->add_object(amb.objects[o]);
    obj_to_amb.push_back(o);
  }
  std::vector<int> amb_mor_here(amb.num_morphisms(), -1);
  for (int m = 0; m < amb.num_morphisms(); ++m) {
    int o1 = amb.mor_src[m], o2 = amb.mor_tgt[m];
    if (amb_obj_here[o1] < 0 || amb_obj_here[o2] < 0) continue;
    amb_mor_here[m] = cat->add_morphism(amb.morphisms[m], amb_obj_here[o1],
                                        amb_obj_here[o2]);
    mor_to_amb.push_back(m);
  }
  for (int o = 0; o < amb.num_objects(); ++o)
    if (amb_obj_here[o] >= 0)
      cat->identity[amb_obj_here[o]] = amb_mor_here[amb.identity[o]];
  for (int g2 = 0; g2 < amb.num_morphisms(); ++g2)
    for (int f2 = 0; f2 < amb.num_morphisms(); ++f2) {
      if (amb_mor_here[g2] < 0 || amb_mor_here[f2] < 0) continue;
      int h = amb.compose(g2, f2);
      if (h < 0) continue;
      cat->set_compose(amb_mor_here[g2], amb_mor_here[f2], amb_mor_here[h]);
    }
  out.cat = cat;
  out.inclusion.name = "incl";
  out.inclusion.src = cat;
  out.inclusion.tgt = out.ambient.cat;
  out.inclusion.obj_map = obj_to_amb;
  out.inclusion.mor_map = mor_to_amb;
  return out;
}

// -- flow sum --------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int FlowSum::word_index(const FlowSumWord& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || !(*it == w)) return -1;
  return static_cast<int>(it - words.begin());
}

int FlowSum::class_of(const FlowSumWord& w) const {
  int i = word_index(w);
  if (i < 0) throw StructuralError("not a well-typed flow-sum word");
  return word_class[i];
}

bool FlowSum::words_equal(const FlowSumWord& w1, const FlowSumWord& w2) const {
  int i = word_index(w1);
  int j = word_index(w2);
  if (i < 0 || j < 0) throw StructuralError("not a well-typed flow-sum word");
  const FinCategory& Bc = *incl_b.src;
  const FinCategory& Cc = *incl_c.src;
  if (Bc.mor_src[w1.phi] != Bc.mor_src[w2.phi] ||
      Cc.mor_tgt[w1.psi] != Cc.mor_tgt[w2.psi])
    throw StructuralError("words_equal: endpoint mismatch");
  return word_class[i] == word_class[j];
}

FlowSum flow_sum(const CatFunctor& s, const CatFunctor& t) {
  if (!same_category(*s.src, *t.src))
    throw StructuralError("flow_sum: span legs have different sources");
  const FinCategory& A = *s.src;
  const FinCategory& B = *s.tgt;
  const FinCategory& C = *t.tgt;

  FlowSum fs;
  DisjointUnion du = disjoint_union(s.tgt, t.tgt);

  // enumerate all well-typed words (phi : b -> s(a), a, psi : t(a) -> c)
  for (int phi = 0; phi < B.num_morphisms(); ++phi)
    for (int a = 0; a < A.num_objects(); ++a) {
      if (B.mor_tgt[phi] != s.obj_map[a]) continue;
      for (int psi = 0; psi < C.num_morphisms(); ++psi)
        if (C.mor_src[psi] == t.obj_map[a]) fs.words.push_back({phi, a, psi});
    }
  std::sort(fs.words.begin(), fs.words.end());

  std::map<FlowSumWord, int> windex;
  for (size_t i = 0; i < fs.words.size(); ++i) windex[fs.words[i]] = static_cast<int>(i);

  // hammock single steps, closed by union-find:
  // (psi'.t(theta)) a phi  ~  psi' a' (s(theta).phi)
  UnionFind uf(fs.words.size());
  for (int theta = 0; theta < A.num_morphisms(); ++theta) {
    int a = A.mor_src[theta];
    int a2 = A.mor_tgt[theta];
    for (int phi = 0; phi < B.num_morphisms(); ++phi) {
      if (B.mor_tgt[phi] != s.obj_map[a]) continue;
      for (int psi2 = 0; psi2 < C.num_morphisms(); ++psi2) {
        if (C.mor_src[psi2] != t.obj_map[a2]) continue;
        FlowSumWord w1{phi, a, C.compose(psi2, t.mor_map[theta])};
        FlowSumWord w2{B.compose(s.mor_map[theta], phi), a2, psi2};
        uf.unite(windex.at(w1), windex.at(w2));
      }
    }
  }

  // build the category on top of the tagged disjoint union
  auto cat = std::make_shared<FinCategory>();
  *cat = *du.cat;
  cat->name = B.name + "++" + C.name;
  // re-intern (assignment copied the private maps as well, so just rebuild)
  {
    FinCategory fresh;
    fresh.name = cat->name;
    for (const auto& id : cat->objects) fresh.add_object(id);
    for (int m = 0; m < cat->num_morphisms(); ++m)
      fresh.add_morphism(cat->morphisms[m], cat->mor_src[m], cat->mor_tgt[m]);
    fresh.identity = cat->identity;
    fresh.comp = cat->comp;
    *cat = std::move(fresh);
  }

  // one cross morphism per class, named by its least word
  fs.word_class.assign(fs.words.size(), -1);
  std::vector<int> class_root;  // word index of representative
  for (size_t i = 0; i < fs.words.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (fs.word_class[root] < 0) {
      const FlowSumWord& w = fs.words[i];  // least in class: words are sorted
      int m = cat->add_morphism(
          "W(" + B.morphisms[w.phi] + "," + A.objects[w.a] + "," +
              C.morphisms[w.psi] + ")",
          du.include_left.obj_map[B.mor_src[w.phi]],
          du.include_right.obj_map[C.mor_tgt[w.psi]]);
      fs.word_class[root] = m;
      class_root.push_back(static_cast<int>(i));
    }
    fs.word_class[i] = fs.word_class[root];
  }

  // composition into and out of cross morphisms, computed on representatives
  for (size_t k = 0; k < class_root.size(); ++k) {
    const FlowSumWord& w = fs.words[class_root[k]];
    int wm = fs.word_class[class_root[k]];
    for (int beta = 0; beta < B.num_morphisms(); ++beta) {
      if (B.mor_tgt[beta] != B.mor_src[w.phi]) continue;
      FlowSumWord pre{B.compose(w.phi, beta), w.a, w.psi};
      cat->set_compose(wm, du.include_left.mor_map[beta],
                       fs.word_class[uf.find(windex.at(pre))]);
    }
    for (int gamma = 0; gamma < C.num_morphisms(); ++gamma) {
      if (C.mor_src[gamma] != C.mor_tgt[w.psi]) continue;
      FlowSumWord post{w.phi, w.a, C.compose(gamma, w.psi)};
      cat->set_compose(du.include_right.mor_map[gamma], wm,
                       fs.word_class[uf.find(windex.at(post))]);
    }
  }

  fs.cat = cat;
  fs.incl_b = du.include_left;
  fs.incl_b.tgt = cat;
  fs.incl_c = du.include_right;
  fs.incl_c.tgt = cat;

  CatNatTrans alpha;
  alpha.source_functor = compose_functors(fs.incl_b, s);
  alpha.target_functor = compose_functors(fs.incl_c, t);
  for (int a = 0; a < A.num_objects(); ++a) {
    FlowSumWord unit{B.identity[s.obj_map[a]], a, C.identity[t.obj_map[a]]};
    alpha.components.push_back(fs.word_class[uf.find(windex.at(unit))]);
  }
  fs.square = LaxSquare{s, t, fs.incl_b, fs.incl_c, std::move(alpha)};
  return fs;
}

// -- fibres and flows ------------------------------------------------------

int FlowTo::object_of(int a, int eta) const {
  auto it = obj_index.find({a, eta});
  return it == obj_index.end() ? -1 : it->second;
}

int FlowTo::morphism_of(int src_obj, int tgt_obj, int phi) const {
  auto it = mor_index.find({src_obj, tgt_obj, phi});
  return it == mor_index.end() ? -1 : it->second;
}

namespace {

// direction=false: flow to d (eta : f(a) -> d), condition eta2 . f(phi) = eta.
// direction=true: flow from d (eta : d -> f(a)), condition f(phi) . eta = eta2.
FlowTo build_flow(const CatFunctor& f, int d, bool from) {
  const FinCategory& A = *f.src;
  const FinCategory& D = *f.tgt;
  if (d < 0 || d >= D.num_objects()) throw StructuralError("unknown object");

  FlowTo ft;
  auto cat = std::make_shared<FinCategory>();
  cat->name = (from ? D.objects[d] + "/" + A.name : A.name + "/" + D.objects[d]);
  for (int a = 0; a < A.num_objects(); ++a) {
    auto etas = from ? D.hom(d, f.obj_map[a]) : D.hom(f.obj_map[a], d);
    for (int eta : etas) {
      int o = cat->add_object("T(" + A.objects[a] + "," + D.morphisms[eta] + ")");
      ft.obj.push_back({a, eta});
      ft.obj_index[{a, eta}] = o;
    }
  }
  int nobj = cat->num_objects();
  for (int o1 = 0; o1 < nobj; ++o1)
    for (int o2 = 0; o2 < nobj; ++o2) {
      auto [a, eta] = ft.obj[o1];
      auto [a2, eta2] = ft.obj[o2];
      for (int phi : A.hom(a, a2)) {
        bool ok = from ? (D.compose(f.mor_map[phi], eta) == eta2)
                       : (D.compose(eta2, f.mor_map[phi]) == eta);
        if (!ok) continue;
        if (o1 == o2 && A.is_identity(phi)) continue;
        int m = cat->add_morphism("P(" + A.morphisms[phi] + "," +
                                      D.morphisms[eta] + "," + D.morphisms[eta2] +
                                      ")",
                                  o1, o2);
        ft.mor.push_back({o1, o2, phi});
        ft.mor_index[{o1, o2, phi}] = m;
      }
    }
  cat->synthesize_identities();
  for (int o = 0; o < nobj; ++o) {
    auto [a, eta] = ft.obj[o];
    ft.mor.push_back({o, o, A.identity[a]});
    ft.mor_index[{o, o, A.identity[a]}] = cat->identity[o];
  }
  for (int m2 = 0; m2 < cat->num_morphisms(); ++m2)
    for (int m1 = 0; m1 < cat->num_morphisms(); ++m1) {
      if (!cat->composable(m2, m1)) continue;
      const auto& a1 = ft.mor[m1];
      const auto& a2 = ft.mor[m2];
      cat->set_compose(m2, m1, ft.mor_index.at({a1.src_obj, a2.tgt_obj,
                                                A.compose(a2.phi, a1.phi)}));
    }
  ft.cat = cat;
  ft.proj.name = "proj";
  ft.proj.src = cat;
  ft.proj.tgt = f.src;
  for (const auto& o : ft.obj) ft.proj.obj_map.push_back(o.first);
  for (const auto& m : ft.mor) ft.proj.mor_map.push_back(m.phi);
  return ft;
}

}  // namespace

FlowTo flow_to(const CatFunctor& f, int d) { return build_flow(f, d, false); }
FlowTo flow_from(const CatFunctor& f, int d) { return build_flow(f, d, true); }

Fiber fiber(const CatFunctor& f, int d) {
  const FinCategory& A = *f.src;
  const FinCategory& D = *f.tgt;
  if (d < 0 || d >= D.num_objects()) throw StructuralError("unknown object");
  Fiber fib;
  auto cat = std::make_shared<FinCategory>();
  cat->name = f.name + "^-1(" + D.objects[d] + ")";
  std::vector<int> obj_here(A.num_objects(), -1);
  for (int x = 0; x < A.num_objects(); ++x)
    if (f.obj_map[x] == d) {
      obj_here[x] = cat->add_object(A.objects[x]);
      fib.obj.push_back(x);
    }
  std::vector<int> mor_here(A.num_morphisms(), -1);
  for (int m = 0; m < A.num_morphisms(); ++m)
    if (f.mor_map[m] == D.identity[d]) {
      mor_here[m] = cat->add_morphism(A.morphisms[m], obj_here[A.mor_src[m]],
                                      obj_here[A.mor_tgt[m]]);
      fib.mor.push_back(m);
    }
  for (int x : fib.obj) cat->identity[obj_here[x]] = mor_here[A.identity[x]];
  for (int g = 0; g < A.num_morphisms(); ++g)
    for (int m = 0; m < A.num_morphisms(); ++m) {
      if (mor_here[g] < 0 || mor_here[m] < 0 || !A.composable(g, m)) continue;
      cat->set_compose(mor_here[g], mor_here[m], mor_here[A.compose(g, m)]);
    }
  fib.cat = cat;
  fib.include_in_source.name = "incl";
  fib.include_in_source.src = cat;
  fib.include_in_source.tgt = f.src;
  fib.include_in_source.obj_map = fib.obj;
  fib.include_in_source.mor_map = fib.mor;
  return fib;
}

CatFunctor fiber_flow_inclusion(const CatFunctor& f, int d, const Fiber& fib,
                                const FlowTo& flow) {
  const FinCategory& D = *f.tgt;
  CatFunctor incl;
  incl.name = "fib_incl";
  incl.src = fib.cat;
  incl.tgt = flow.cat;
  for (int x : fib.obj) incl.obj_map.push_back(flow.object_of(x, D.identity[d]));
  for (size_t i = 0; i < fib.mor.size(); ++i) {
    int m = fib.mor[i];
    int o1 = flow.object_of(f.src->mor_src[m], D.identity[d]);
    int o2 = flow.object_of(f.src->mor_tgt[m], D.identity[d]);
    incl.mor_map.push_back(flow.morphism_of(o1, o2, m));
  }
  return incl;
}

// -- opfibrations and cofinality -------------------------------------------

bool is_cocartesian(const CatFunctor& f, int phi) {
  const FinCategory& A = *f.src;
  const FinCategory& B = *f.tgt;
  if (phi < 0 || phi >= A.num_morphisms()) throw StructuralError("unknown morphism");
  int a = A.mor_src[phi];
  int a2 = A.mor_tgt[phi];
  int fphi = f.mor_map[phi];
  for (int phi2 = 0; phi2 < A.num_morphisms(); ++phi2) {
    if (A.mor_src[phi2] != a) continue;
    for (int psi = 0; psi < B.num_morphisms(); ++psi) {
      if (B.mor_src[psi] != B.mor_tgt[fphi]) continue;
      if (B.compose(psi, fphi) != f.mor_map[phi2]) continue;
      int lifts = 0;
      for (int cand = 0; cand < A.num_morphisms(); ++cand) {
        if (A.mor_src[cand] != a2 || A.mor_tgt[cand] != A.mor_tgt[phi2]) continue;
        if (f.mor_map[cand] != psi) continue;
        if (A.compose(cand, phi) != phi2) continue;
        ++lifts;
      }
      if (lifts != 1) return false;
    }
  }
  return true;
}

OpfibrationWitness is_opfibration(const CatFunctor& f) {
  const FinCategory& A = *f.src;
  const FinCategory& B = *f.tgt;
  OpfibrationWitness w;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int phi = 0; phi < B.num_morphisms(); ++phi) {
      if (B.mor_src[phi] != f.obj_map[a]) continue;
      int lift = -1;
      for (int cand = 0; cand < A.num_morphisms(); ++cand) {
        if (A.mor_src[cand] != a || f.mor_map[cand] != phi) continue;
        if (is_cocartesian(f, cand)) {
          lift = cand;
          break;  // lowest-index tie-break
        }
      }
      if (lift < 0) {
        w.ok = false;
        w.fail_object = a;
        w.fail_morphism = phi;
        return w;
      }
      w.lifts[{a, phi}] = lift;
    }
  w.ok = true;
  return w;
}

CofinalityWitness is_cofinal(const CatFunctor& f) {
  const FinCategory& D = *f.tgt;
  CofinalityWitness w;
  w.ok = true;
  for (int d = 0; d < D.num_objects(); ++d) {
    FlowTo coslice = flow_from(f, d);
    int n = static_cast<int>(connected_components(*coslice.cat).size());
    w.component_counts.push_back(n);
    if (n != 1) w.ok = false;
  }
  return w;
}

// -- mediators -------------------------------------------------------------

CatFunctor flow_sum_mediator(const FlowSum& fs, const LaxSquare& sq) {
  if (!same_functor(sq.s, fs.square.s) || !same_functor(sq.t, fs.square.t))
    throw StructuralError("flow_sum_mediator: square does not share the span");
  const FinCategory& B = *sq.s.tgt;
  const FinCategory& C = *sq.t.tgt;
  const FinCategory& D2 = *sq.f.tgt;
  const FinCategory& FS = *fs.cat;

  CatFunctor h;
  h.name = "mediator";
  h.src = fs.cat;
  h.tgt = sq.f.tgt;
  h.obj_map.assign(FS.num_objects(), -1);
  h.mor_map.assign(FS.num_morphisms(), -1);
  for (int b = 0; b < B.num_objects(); ++b)
    h.obj_map[fs.incl_b.obj_map[b]] = sq.f.obj_map[b];
  for (int c = 0; c < C.num_objects(); ++c)
    h.obj_map[fs.incl_c.obj_map[c]] = sq.g.obj_map[c];
  for (int m = 0; m < B.num_morphisms(); ++m)
    h.mor_map[fs.incl_b.mor_map[m]] = sq.f.mor_map[m];
  for (int m = 0; m < C.num_morphisms(); ++m)
    h.mor_map[fs.incl_c.mor_map[m]] = sq.g.mor_map[m];
  // cross classes: h(psi a phi) = g(psi) . alpha_a . f(phi); checked
  // class-independent on every member
  for (size_t i = 0; i < fs.words.size(); ++i) {
    const FlowSumWord& w = fs.words[i];
    int value = D2.compose(sq.g.mor_map[w.psi],
                           D2.compose(sq.alpha.components[w.a], sq.f.mor_map[w.phi]));
    int slot = fs.word_class[i];
    if (h.mor_map[slot] < 0)
      h.mor_map[slot] = value;
    else if (h.mor_map[slot] != value)
      throw StructuralError("flow_sum_mediator: not well-defined on classes");
  }
  return h;
}

CatFunctor flow_product_mediator(const FlowProduct& fp, const LaxSquare& sq) {
  if (!same_functor(sq.f, fp.square.f) || !same_functor(sq.g, fp.square.g))
    throw StructuralError("flow_product_mediator: square does not share the cospan");
  const FinCategory& A = *sq.s.src;
  CatFunctor h;
  h.name = "mediator";
  h.src = sq.s.src;
  h.tgt = fp.cat;
  for (int a = 0; a < A.num_objects(); ++a) {
    int o = fp.object_of(sq.s.obj_map[a], sq.t.obj_map[a], sq.alpha.components[a]);
    if (o < 0) throw StructuralError("flow_product_mediator: missing triple");
    h.obj_map.push_back(o);
  }
  for (int m = 0; m < A.num_morphisms(); ++m) {
    int o1 = h.obj_map[A.mor_src[m]];
    int o2 = h.obj_map[A.mor_tgt[m]];
    int mm = fp.morphism_of(o1, o2, sq.s.mor_map[m], sq.t.mor_map[m]);
    if (mm < 0) throw StructuralError("flow_product_mediator: missing pair");
    h.mor_map.push_back(mm);
  }
  return h;
}

// -- pasting ---------------------------------------------------------------

LaxSquare paste(const LaxSquare& leftsq, const LaxSquare& rightsq) {
  if (!same_functor(leftsq.f, rightsq.t))
    throw StructuralError("paste: shared edge mismatch");
  const FinCategory& D = *rightsq.f.tgt;
  LaxSquare out;
  out.s = compose_functors(rightsq.s, leftsq.s);
  out.t = leftsq.t;
  out.f = rightsq.f;
  out.g = compose_functors(rightsq.g, leftsq.g);
  out.alpha.source_functor = compose_functors(out.f, out.s);
  out.alpha.target_functor = compose_functors(out.g, out.t);
  const FinCategory& E = *leftsq.s.src;
  for (int e = 0; e < E.num_objects(); ++e) {
    int right_at_ke = rightsq.alpha.components[leftsq.s.obj_map[e]];
    int g_of_left = rightsq.g.mor_map[leftsq.alpha.components[e]];
    out.alpha.components.push_back(D.compose(g_of_left, right_at_ke));
  }
  return out;
}

}  // namespace flowcat
