#ifndef FLOWCAT_GENERATE_HPP
#define FLOWCAT_GENERATE_HPP

#include <cstdint>
#include <random>

#include "flowcat/fincat.hpp"
#include "flowcat/flow.hpp"

namespace flowcat {

/// Deterministic source of choices. All generators draw through below(), so a
/// seed fixes every emitted structure byte for byte.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % n); }
  bool coin() { return below(2) == 1; }
  // independent stream for a sub-task, stable under reordering
  Rng split(uint64_t salt) { return Rng(eng_() ^ (salt * 0x9e3779b97f4a7c15ull)); }

 private:
  std::mt19937_64 eng_;
};

// Acyclic by construction: edges only go from lower to higher vertex index.
Quiver random_quiver(Rng& rng, int max_objects, int max_edges);

FreeCat random_free_category(Rng& rng, int max_objects = 3, int max_edges = 4);

// Picks object images, then generator images from the matching hom-sets.
// Retries on an empty hom-set; falls back to a constant functor.
CatFunctor random_functor(Rng& rng, const FreeCat& src, CatPtr tgt);

// Sets of size <= max_elems (possibly empty where no arrow forbids it),
// generator actions random, paths extended by composition.
SetFunctor random_setfunctor(Rng& rng, const FreeCat& shape, int max_elems = 4);

struct RandomCospan {
  FreeCat b, c, d;
  CatFunctor f;  // b -> d
  CatFunctor g;  // c -> d
};

struct RandomSpan {
  FreeCat a, b, c;
  CatFunctor s;  // a -> b
  CatFunctor t;  // a -> c
};

RandomCospan random_cospan(Rng& rng, int max_objects = 3, int max_edges = 4);
RandomSpan random_span(Rng& rng, int max_objects = 3, int max_edges = 4);

}  // namespace flowcat

#endif
