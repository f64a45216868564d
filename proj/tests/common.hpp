// Shared builders for the unit tests: small categories parsed from inline
// text, plus a few canonical functors between them.
#ifndef FLOWCAT_TESTS_COMMON_HPP
#define FLOWCAT_TESTS_COMMON_HPP

#include <sstream>
#include <string>

#include "flowcat/io.hpp"
#include "flowcat/migration.hpp"

namespace tc {

using namespace flowcat;

inline CatPtr cat(const std::string& text) {
  std::istringstream in(text);
  return std::make_shared<FinCategory>(parse_fincat(in, "inline"));
}

inline CatFunctor fun(const Workspace& ws, const std::string& text) {
  std::istringstream in(text);
  return parse_catfun(in, "inline", ws);
}

inline SetFunctor setf(const Workspace& ws, const std::string& text) {
  std::istringstream in(text);
  return parse_setfun(in, "inline", ws);
}

// terminal, the walking arrow, and a parallel pair, pre-registered
struct Standard {
  Workspace ws;
  CatPtr pt, two, par, empty;

  Standard() {
    pt = cat("category terminal\nobject pt\n");
    two = cat("category two\nobject o0\nobject o1\narrow u : o0 -> o1\n");
    par = cat(
        "category parallel\nobject p\nobject q\n"
        "arrow alpha : p -> q\narrow beta : p -> q\n");
    auto e = std::make_shared<FinCategory>();
    e->name = "empty";
    e->synthesize_identities();
    empty = e;
    ws.categories["terminal"] = pt;
    ws.categories["two"] = two;
    ws.categories["parallel"] = par;
    ws.categories["empty"] = empty;
  }

  CatFunctor pick(int i) const { return constant_functor(pt, two, i); }
  CatFunctor collapse() const { return constant_functor(two, pt, 0); }
  CatFunctor collapse_par() const { return constant_functor(par, pt, 0); }
  CatFunctor from_empty(CatPtr tgt) const {
    CatFunctor f;
    f.src = empty;
    f.tgt = std::move(tgt);
    return f;
  }
};

inline LaxSquare identity_square(CatPtr c) {
  LaxSquare sq;
  sq.s = sq.t = sq.f = sq.g = identity_functor(c);
  sq.alpha.source_functor = sq.s;
  sq.alpha.target_functor = sq.s;
  sq.alpha.components = c->identity;
  return sq;
}

// constant singleton diagram on an arbitrary shape
inline SetFunctor singleton_diagram(CatPtr shape) {
  SetFunctor f;
  f.shape = std::move(shape);
  f.elems.assign(f.shape->num_objects(), {"e"});
  f.maps.assign(f.shape->num_morphisms(), {0});
  return f;
}

}  // namespace tc

#endif
