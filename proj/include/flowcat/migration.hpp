#ifndef FLOWCAT_MIGRATION_HPP
#define FLOWCAT_MIGRATION_HPP

#include "flowcat/fincat.hpp"
#include "flowcat/flow.hpp"

namespace flowcat {

/// Enumeration refused because the candidate space exceeds the cap.
struct CapExceeded : std::runtime_error {
  double estimate;
  explicit CapExceeded(double est)
      : std::runtime_error("enumeration cap exceeded; candidate count ~" +
                           std::to_string(est)),
        estimate(est) {}
};

// Default 1e6, overridable via FLOWCAT_ENUM_CAP.
double enumeration_cap();

// -- colimits and limits of finite-set diagrams ----------------------------

struct Colimit {
  std::vector<std::string> apex;            // class names K(<obj>,<elem>)
  std::vector<std::vector<int>> legs;       // per object: elem -> class
  std::vector<std::pair<int, int>> rep;     // least member (obj, elem) per class
};

Colimit colimit(const SetFunctor& diagram);

struct Limit {
  std::vector<std::string> apex;            // family names (<e1>,...,<ek>)
  std::vector<std::vector<int>> families;   // per family: one elem per object
  std::map<std::vector<int>, int> index;
  int family_of(const std::vector<int>& fam) const;
};

Limit limit(const SetFunctor& diagram);

// -- the adjoint triple ----------------------------------------------------

SetFunctor pullback(const CatFunctor& f, const SetFunctor& g);

struct LeftKan {
  SetFunctor result;                            // on the target of f
  std::vector<FlowTo> flows;                    // flow_to(f, d) per d
  std::vector<std::vector<std::vector<int>>> cls;  // d, flow obj, elem -> class
};

LeftKan left_kan(const CatFunctor& f, const SetFunctor& diagram);

struct RightKan {
  SetFunctor result;
  std::vector<FlowTo> flows;                    // flow_from(f, d) per d
  std::vector<Limit> limits;                    // limit data per d
};

RightKan right_kan(const CatFunctor& f, const SetFunctor& diagram);

// Independent dual route: Pi_f F(d) computed as the set of natural
// transformations hom(d, f(-)) => F. Returns per-object family sets in the
// same (flow-from object order) tuple encoding as right_kan.
std::vector<std::vector<std::vector<int>>> right_kan_via_nat(
    const CatFunctor& f, const SetFunctor& diagram);

// -- units, counits, transposes --------------------------------------------

SetNatTrans unit_left(const CatFunctor& f, const SetFunctor& F);
SetNatTrans counit_left(const CatFunctor& f, const SetFunctor& G);
SetNatTrans unit_right(const CatFunctor& f, const SetFunctor& G);
SetNatTrans counit_right(const CatFunctor& f, const SetFunctor& F);

// whiskering
SetNatTrans pullback_nat(const CatFunctor& f, const SetNatTrans& t);
SetNatTrans leftkan_nat(const CatFunctor& f, const SetNatTrans& t);
SetNatTrans rightkan_nat(const CatFunctor& f, const SetNatTrans& t);

// Adjunction transposes, two-sided inverses of each other. The functor the
// transpose lands in (or comes from) cannot be recovered from a pullback or
// Kan image, so it is passed explicitly.
SetNatTrans adjunct_left(const CatFunctor& f, const SetNatTrans& h,
                         const SetFunctor& Y);  // (X => Df Y) to (Sf X => Y)
SetNatTrans adjunct_left_inv(const CatFunctor& f, const SetNatTrans& h,
                             const SetFunctor& X);  // (Sf X => Y) to (X => Df Y)
SetNatTrans adjunct_right(const CatFunctor& f, const SetNatTrans& h,
                          const SetFunctor& G);  // (Df G => X) to (G => Pf X)
SetNatTrans adjunct_right_inv(const CatFunctor& f, const SetNatTrans& h,
                              const SetFunctor& X);  // (G => Pf X) to (Df G => X)

// -- enumeration oracles ---------------------------------------------------

std::vector<SetNatTrans> enumerate_nat_trans(const SetFunctor& F,
                                             const SetFunctor& G,
                                             double cap = enumeration_cap());

std::vector<CatFunctor> enumerate_functors(CatPtr a, CatPtr b,
                                           double cap = enumeration_cap());

}  // namespace flowcat

#endif
