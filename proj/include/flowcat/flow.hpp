#ifndef FLOWCAT_FLOW_HPP
#define FLOWCAT_FLOW_HPP

#include <array>
#include <compare>
#include <map>
#include <utility>

#include "flowcat/fincat.hpp"

namespace flowcat {

struct Span {
  CatFunctor left_leg;   // apex -> C
  CatFunctor right_leg;  // apex -> B
};

struct Cospan {
  CatFunctor left_leg;   // C -> D
  CatFunctor right_leg;  // B -> D
};

/// s: A -> B (top), t: A -> C (left), f: B -> D (right), g: C -> D (bottom),
/// alpha: f.s => g.t.
struct LaxSquare {
  CatFunctor s, t, f, g;
  CatNatTrans alpha;
};

Report validate_lax_square(const LaxSquare& sq);

// -- flow product (comma category) -----------------------------------------

struct FlowProduct {
  CatPtr cat;
  CatFunctor proj_b;  // projection to the source of f
  CatFunctor proj_c;  // projection to the source of g
  LaxSquare square;   // (proj_b, proj_c, f, g, eta-components)

  std::vector<std::array<int, 3>> obj;  // (b, c, eta)
  struct Mor {
    int src_obj, tgt_obj, phi, psi;
  };
  std::vector<Mor> mor;

  int object_of(int b, int c, int eta) const;
  int morphism_of(int src_obj, int tgt_obj, int phi, int psi) const;

  std::map<std::array<int, 3>, int> obj_index;
  std::map<std::array<int, 4>, int> mor_index;
};

// f: B -> D, g: C -> D.
FlowProduct flow_product(const CatFunctor& f, const CatFunctor& g);

struct FibreProduct {
  CatPtr cat;
  CatFunctor inclusion;  // full inclusion into the ambient flow product
  FlowProduct ambient;
};

FibreProduct fibre_product(const CatFunctor& f, const CatFunctor& g);

// -- flow sum (co-comma category) ------------------------------------------

struct FlowSumWord {
  int phi, a, psi;
  auto operator<=>(const FlowSumWord&) const = default;
};

struct FlowSum {
  CatPtr cat;
  CatFunctor incl_b, incl_c;
  LaxSquare square;  // (s, t, incl_b, incl_c, alpha)

  std::vector<FlowSumWord> words;  // sorted lexicographically
  std::vector<int> word_class;     // word index -> cross morphism in cat

  int word_index(const FlowSumWord& w) const;  // -1 if not a word
  int class_of(const FlowSumWord& w) const;    // cross morphism index
  bool words_equal(const FlowSumWord& w1, const FlowSumWord& w2) const;
};

// s: A -> B, t: A -> C.
FlowSum flow_sum(const CatFunctor& s, const CatFunctor& t);

// -- fibres and flows ------------------------------------------------------

struct FlowTo {
  CatPtr cat;
  CatFunctor proj;                      // to the source of f
  std::vector<std::pair<int, int>> obj; // (a, eta : f(a) -> d)
  struct Mor {
    int src_obj, tgt_obj, phi;
  };
  std::vector<Mor> mor;
  int object_of(int a, int eta) const;
  int morphism_of(int src_obj, int tgt_obj, int phi) const;
  std::map<std::pair<int, int>, int> obj_index;
  std::map<std::array<int, 3>, int> mor_index;
};

FlowTo flow_to(const CatFunctor& f, int d);    // comma f | d
FlowTo flow_from(const CatFunctor& f, int d);  // comma d | f; eta : d -> f(a)

struct Fiber {
  CatPtr cat;
  CatFunctor include_in_source;
  std::vector<int> obj;  // object index in the source of f
  std::vector<int> mor;
};

Fiber fiber(const CatFunctor& f, int d);
// x |-> (x, id_d); full inclusion into flow_to(f, d).
CatFunctor fiber_flow_inclusion(const CatFunctor& f, int d, const Fiber& fib,
                                const FlowTo& flow);

// -- opfibrations and cofinality -------------------------------------------

bool is_cocartesian(const CatFunctor& f, int phi);

struct OpfibrationWitness {
  bool ok = false;
  // (object a, morphism out of f(a)) -> chosen cocartesian lift
  std::map<std::pair<int, int>, int> lifts;
  int fail_object = -1, fail_morphism = -1;
};

OpfibrationWitness is_opfibration(const CatFunctor& f);

struct CofinalityWitness {
  bool ok = false;
  std::vector<int> component_counts;  // per object of the target
};

CofinalityWitness is_cofinal(const CatFunctor& f);

// -- universal-property mediators ------------------------------------------

// sq shares the span (s, t) of fs; returns the unique functor to sq's D.
CatFunctor flow_sum_mediator(const FlowSum& fs, const LaxSquare& sq);
// sq shares the cospan (f, g) of fp; returns the unique functor from sq's A.
CatFunctor flow_product_mediator(const FlowProduct& fp, const LaxSquare& sq);

// -- square pasting --------------------------------------------------------

// rightsq's left edge (t) must equal leftsq's right edge (f).
LaxSquare paste(const LaxSquare& leftsq, const LaxSquare& rightsq);

}  // namespace flowcat

#endif
