#ifndef FLOWCAT_BASECHANGE_HPP
#define FLOWCAT_BASECHANGE_HPP

#include "flowcat/flow.hpp"
#include "flowcat/migration.hpp"

namespace flowcat {

// canonical comparison S_t D_s F => D_g S_f F of a lax square
SetNatTrans base_change_left(const LaxSquare& sq, const SetFunctor& F);
// the same transformation written through S_g S_t => S_f S_s
SetNatTrans base_change_left_alt(const LaxSquare& sq, const SetFunctor& F);
// dual comparison D_f P_g G => P_s D_t G, evaluated pointwise
SetNatTrans base_change_right(const LaxSquare& sq, const SetFunctor& G);
// the same comparison assembled from units and counits; exponential
// intermediates, kept as a cross-check oracle for small squares
SetNatTrans base_change_right_via_units(const LaxSquare& sq, const SetFunctor& G);

struct IsoCheck {
  bool iso = false;
  int fail_object = -1;
  std::string detail;
};

IsoCheck is_iso(const SetNatTrans& eta);

// pasted base change equals the whiskered composite, elementwise
bool check_pasting_lemma(const LaxSquare& leftsq, const LaxSquare& rightsq,
                         const SetFunctor& F);

enum class Direction { Left, Right, Both };

struct SampleVerdict {
  int sample;
  char direction;  // 'L' or 'R'
  bool iso;
  std::string witness;
};

struct ExactnessReport {
  std::string square_id;
  bool refused = false;
  std::string refusal;
  std::vector<SampleVerdict> verdicts;
  std::vector<std::string> notices;  // skipped samples etc.
  bool all_iso() const;
};

ExactnessReport verify_square(const LaxSquare& sq, const std::string& square_id,
                              const std::vector<SetFunctor>& samples,
                              Direction direction);

// strict fibre-product square whose right edge is an opfibration
ExactnessReport verify_opfibration_case(const LaxSquare& sq,
                                        const std::string& square_id,
                                        const std::vector<SetFunctor>& samples);

// -- span algebra ----------------------------------------------------------

struct SpanComposition {
  Span span;
  FlowProduct middle;  // flow product of the middle cospan
};

// sp1's right foot must equal sp2's left foot
SpanComposition span_compose(const Span& sp1, const Span& sp2);

// F lives on the left foot; result is S_right D_left F on the right foot
SetFunctor span_action(const Span& sp, const SetFunctor& F);

// hom-set bijection between cospan morphisms out of the flow sum and span
// morphisms into the flow product, per enumeration (cap-guarded)
bool check_flow_adjunction(const Span& sp, const Cospan& csp);

}  // namespace flowcat

#endif
