#include "flowcat/basechange.hpp"

#include <algorithm>

namespace flowcat {

namespace {

// reindexing along alpha: D_s D_f G => D_t D_g G, component at a is G(alpha_a)
SetNatTrans alpha_reindex(const LaxSquare& sq, const SetFunctor& G) {
  SetNatTrans t;
  t.source_functor = pullback(sq.s, pullback(sq.f, G));
  t.target_functor = pullback(sq.t, pullback(sq.g, G));
  const FinCategory& A = *sq.s.src;
  for (int a = 0; a < A.num_objects(); ++a)
    t.components.push_back(G.maps[sq.alpha.components[a]]);
  return t;
}

}  // namespace

SetNatTrans base_change_left(const LaxSquare& sq, const SetFunctor& F) {
  if (!same_category(*F.shape, *sq.s.tgt))
    throw StructuralError("base_change_left: F must live on the top-right category");
  SetFunctor SfF = left_kan(sq.f, F).result;
  // D_s F => D_s D_f S_f F => D_t D_g S_f F
  SetNatTrans mid = compose_setnat(alpha_reindex(sq, SfF),
                                   pullback_nat(sq.s, unit_left(sq.f, F)));
  // S_t D_s F => S_t D_t D_g S_f F => D_g S_f F
  return compose_setnat(counit_left(sq.t, pullback(sq.g, SfF)),
                        leftkan_nat(sq.t, mid));
}

SetNatTrans base_change_left_alt(const LaxSquare& sq, const SetFunctor& F) {
  if (!same_category(*F.shape, *sq.s.tgt))
    throw StructuralError("base_change_left_alt: F must live on the top-right category");
  SetFunctor X = pullback(sq.s, F);
  SetFunctor SsX = left_kan(sq.s, X).result;
  SetFunctor W = left_kan(sq.f, SsX).result;  // S_f S_s D_s F

  // the mate S_g S_t X => S_f S_s X, transposed twice from
  // X => D_s S_s X => D_s D_f W => D_t D_g W
  SetNatTrans h = compose_setnat(
      alpha_reindex(sq, W),
      compose_setnat(pullback_nat(sq.s, unit_left(sq.f, SsX)), unit_left(sq.s, X)));
  SetNatTrans p = adjunct_left(sq.t, h, pullback(sq.g, W));
  SetNatTrans mate = adjunct_left(sq.g, p, W);

  // S_t D_s F => D_g S_g S_t D_s F => D_g W => D_g S_f F
  SetNatTrans last =
      pullback_nat(sq.g, leftkan_nat(sq.f, counit_left(sq.s, F)));
  SetFunctor StX = left_kan(sq.t, X).result;
  return compose_setnat(
      last, compose_setnat(pullback_nat(sq.g, mate), unit_left(sq.g, StX)));
}

SetNatTrans base_change_right(const LaxSquare& sq, const SetFunctor& G) {
  // pointwise evaluation of the unit/counit chain (see the _via_units variant):
  // a family y over the flow of g from f(d) goes to the family
  // (p, eta) |-> y at (t(p), alpha_p . f(eta)). The chain itself materializes
  // P_s D_s D_f P_g G, whose sets grow exponentially in the flow size.
  if (!same_category(*G.shape, *sq.t.tgt))
    throw StructuralError("base_change_right: G must live on the bottom-left category");
  const FinCategory& B = *sq.s.tgt;
  const FinCategory& D = *sq.f.tgt;
  RightKan pg = right_kan(sq.g, G);
  RightKan target = right_kan(sq.s, pullback(sq.t, G));
  SetNatTrans out;
  out.source_functor = pullback(sq.f, pg.result);
  out.target_functor = target.result;
  for (int d = 0; d < B.num_objects(); ++d) {
    int fd = sq.f.obj_map[d];
    const FlowTo& src_flow = pg.flows[fd];
    const FlowTo& tgt_flow = target.flows[d];
    std::vector<int> comp;
    for (const auto& fam : pg.limits[fd].families) {
      std::vector<int> moved(tgt_flow.obj.size());
      for (size_t k = 0; k < tgt_flow.obj.size(); ++k) {
        auto [p, eta] = tgt_flow.obj[k];
        int arrow = D.compose(sq.alpha.components[p], sq.f.mor_map[eta]);
        moved[k] = fam[src_flow.object_of(sq.t.obj_map[p], arrow)];
      }
      int idx = target.limits[d].family_of(moved);
      if (idx < 0)
        throw StructuralError("base_change_right: image family not in limit");
      comp.push_back(idx);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SetNatTrans base_change_right_via_units(const LaxSquare& sq, const SetFunctor& G) {
  if (!same_category(*G.shape, *sq.t.tgt))
    throw StructuralError("base_change_right: G must live on the bottom-left category");
  SetFunctor PgG = right_kan(sq.g, G).result;
  SetFunctor X = pullback(sq.f, PgG);
  // D_f P_g G => P_s D_s D_f P_g G
  SetNatTrans first = unit_right(sq.s, X);
  // P_s D_s D_f P_g G => P_s D_t D_g P_g G
  SetNatTrans second = rightkan_nat(sq.s, alpha_reindex(sq, PgG));
  // P_s D_t D_g P_g G => P_s D_t G
  SetNatTrans third =
      rightkan_nat(sq.s, pullback_nat(sq.t, counit_right(sq.g, G)));
  return compose_setnat(third, compose_setnat(second, first));
}

IsoCheck is_iso(const SetNatTrans& eta) {
  const FinCategory& c = *eta.source_functor.shape;
  IsoCheck out;
  for (int x = 0; x < c.num_objects(); ++x) {
    int n = eta.source_functor.set_size(x);
    int m = eta.target_functor.set_size(x);
    std::vector<bool> hit(m, false);
    bool bad = (n != m);
    for (int e = 0; e < n && !bad; ++e) {
      int v = eta.components[x][e];
      if (hit[v]) bad = true;
      hit[v] = true;
    }
    if (bad) {
      out.iso = false;
      out.fail_object = x;
      out.detail = "component at " + c.objects[x] + " is not a bijection (" +
                   std::to_string(n) + " -> " + std::to_string(m) + ")";
      return out;
    }
  }
  out.iso = true;
  return out;
}

bool check_pasting_lemma(const LaxSquare& leftsq, const LaxSquare& rightsq,
                         const SetFunctor& F) {
  LaxSquare outer = paste(leftsq, rightsq);
  SetNatTrans pasted = base_change_left(outer, F);
  // whiskered composite: D_r (bc of right square) after (bc of left square) D_s
  SetNatTrans left_part = base_change_left(leftsq, pullback(rightsq.s, F));
  SetNatTrans right_part = pullback_nat(leftsq.g, base_change_left(rightsq, F));
  SetNatTrans composite = compose_setnat(right_part, left_part);
  return pasted.components == composite.components &&
         same_setfunctor(pasted.source_functor, composite.source_functor) &&
         same_setfunctor(pasted.target_functor, composite.target_functor);
}

bool ExactnessReport::all_iso() const {
  if (refused) return false;
  for (const auto& v : verdicts)
    if (!v.iso) return false;
  return true;
}

ExactnessReport verify_square(const LaxSquare& sq, const std::string& square_id,
                              const std::vector<SetFunctor>& samples,
                              Direction direction) {
  ExactnessReport rep;
  rep.square_id = square_id;
  for (size_t i = 0; i < samples.size(); ++i) {
    const SetFunctor& F = samples[i];
    bool on_b = same_category(*F.shape, *sq.s.tgt);
    bool on_c = same_category(*F.shape, *sq.t.tgt);
    bool want_left = direction != Direction::Right;
    bool want_right = direction != Direction::Left;
    if ((want_left && on_b) || (want_right && on_c)) {
      if (want_left && on_b) {
        IsoCheck ic = is_iso(base_change_left(sq, F));
        rep.verdicts.push_back({static_cast<int>(i), 'L', ic.iso, ic.detail});
      }
      if (want_right && on_c) {
        IsoCheck ic = is_iso(base_change_right(sq, F));
        rep.verdicts.push_back({static_cast<int>(i), 'R', ic.iso, ic.detail});
      }
    } else {
      rep.notices.push_back("sample " + std::to_string(i) +
                            " skipped: shape matches no requested direction");
    }
  }
  return rep;
}

ExactnessReport verify_opfibration_case(const LaxSquare& sq,
                                        const std::string& square_id,
                                        const std::vector<SetFunctor>& samples) {
  ExactnessReport rep;
  rep.square_id = square_id;
  const FinCategory& D = *sq.f.tgt;
  for (int c : sq.alpha.components)
    if (!D.is_identity(c)) {
      rep.refused = true;
      rep.refusal = "square is not strict (alpha has a non-identity component)";
      return rep;
    }
  // the corner must be the whole fibre product
  FibreProduct fb = fibre_product(sq.f, sq.g);
  CatFunctor med = flow_product_mediator(fb.ambient, sq);
  std::vector<bool> obj_hit(fb.ambient.cat->num_objects(), false);
  std::vector<bool> mor_hit(fb.ambient.cat->num_morphisms(), false);
  bool inj = true;
  for (int o : med.obj_map) {
    if (obj_hit[o]) inj = false;
    obj_hit[o] = true;
  }
  for (int m : med.mor_map) {
    if (mor_hit[m]) inj = false;
    mor_hit[m] = true;
  }
  bool onto = true;
  for (int o : fb.inclusion.obj_map)
    if (!obj_hit[o]) onto = false;
  for (int m : fb.inclusion.mor_map)
    if (!mor_hit[m]) onto = false;
  if (!inj || !onto ||
      sq.s.src->num_objects() != fb.cat->num_objects() ||
      sq.s.src->num_morphisms() != fb.cat->num_morphisms()) {
    rep.refused = true;
    rep.refusal = "square corner is not the fibre product of its cospan";
    return rep;
  }
  if (!is_opfibration(sq.f).ok) {
    rep.refused = true;
    rep.refusal = "right edge is not an opfibration";
    return rep;
  }
  ExactnessReport inner = verify_square(sq, square_id, samples, Direction::Both);
  rep.verdicts = std::move(inner.verdicts);
  rep.notices = std::move(inner.notices);
  return rep;
}

// -- span algebra ----------------------------------------------------------

SpanComposition span_compose(const Span& sp1, const Span& sp2) {
  if (!same_category(*sp1.right_leg.tgt, *sp2.left_leg.tgt))
    throw StructuralError("span_compose: middle categories differ");
  SpanComposition out;
  out.middle = flow_product(sp1.right_leg, sp2.left_leg);
  out.span.left_leg = compose_functors(sp1.left_leg, out.middle.proj_b);
  out.span.right_leg = compose_functors(sp2.right_leg, out.middle.proj_c);
  return out;
}

SetFunctor span_action(const Span& sp, const SetFunctor& F) {
  if (!same_category(*F.shape, *sp.left_leg.tgt))
    throw StructuralError("span_action: F must live on the left foot");
  return left_kan(sp.right_leg, pullback(sp.left_leg, F)).result;
}

bool check_flow_adjunction(const Span& sp, const Cospan& csp) {
  const CatFunctor& s = sp.right_leg;
  const CatFunctor& t = sp.left_leg;
  const CatFunctor& f = csp.right_leg;
  const CatFunctor& g = csp.left_leg;
  if (!same_category(*s.tgt, *f.src) || !same_category(*t.tgt, *g.src))
    throw StructuralError("check_flow_adjunction: feet mismatch");

  FlowSum fs = flow_sum(s, t);
  FlowProduct fp = flow_product(f, g);

  // cospan morphisms: h with h.incl_b = f and h.incl_c = g
  std::vector<CatFunctor> cospan_side;
  for (const auto& h : enumerate_functors(fs.cat, f.tgt)) {
    if (same_functor(compose_functors(h, fs.incl_b), f) &&
        same_functor(compose_functors(h, fs.incl_c), g))
      cospan_side.push_back(h);
  }
  // span morphisms: m with proj_b.m = s and proj_c.m = t
  std::vector<CatFunctor> span_side;
  for (const auto& m : enumerate_functors(s.src, fp.cat)) {
    if (same_functor(compose_functors(fp.proj_b, m), s) &&
        same_functor(compose_functors(fp.proj_c, m), t))
      span_side.push_back(m);
  }
  if (cospan_side.size() != span_side.size()) return false;

  // the mediation map must be a bijection between the two sides
  std::vector<bool> hit(span_side.size(), false);
  for (const auto& h : cospan_side) {
    LaxSquare sq;
    sq.s = s;
    sq.t = t;
    sq.f = f;
    sq.g = g;
    sq.alpha.source_functor = compose_functors(f, s);
    sq.alpha.target_functor = compose_functors(g, t);
    for (int c : fs.square.alpha.components)
      sq.alpha.components.push_back(h.mor_map[c]);
    CatFunctor med = flow_product_mediator(fp, sq);
    bool found = false;
    for (size_t i = 0; i < span_side.size(); ++i)
      if (!hit[i] && same_functor(span_side[i], med)) {
        hit[i] = true;
        found = true;
        break;
      }
    if (!found) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace flowcat
