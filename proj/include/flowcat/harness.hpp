#ifndef FLOWCAT_HARNESS_HPP
#define FLOWCAT_HARNESS_HPP

#include <cstdint>

#include "flowcat/basechange.hpp"
#include "flowcat/generate.hpp"

namespace flowcat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, witnesses, or the first failure
};

// Strict square over the fibre product of (f, g): corner = f x_D g,
// edges the two projections, alpha all identities.
LaxSquare strict_square(const CatFunctor& f, const CatFunctor& g);

// Comparison colim(Delta_f F) -> colim(F); a bijection when f is cofinal.
struct ColimitComparison {
  Colimit restricted;
  Colimit total;
  std::vector<int> map;  // restricted class -> total class
  bool bijective = false;
};
ColimitComparison colimit_comparison(const CatFunctor& f, const SetFunctor& F);

// Independent oracle for flow-sum word equality: breadth-first search over
// single hammock rewrite steps, no union-find involved.
bool words_equal_bfs(const FlowSum& fs, const FlowSumWord& w1,
                     const FlowSumWord& w2);

// -- acceptance checks -----------------------------------------------------
// Each is deterministic in the seed and returns pass/fail with a summary.

CheckResult check_flow_product_exactness(uint64_t seed, int squares, int samples);
CheckResult check_flow_sum_exactness(uint64_t seed, int squares, int samples);
CheckResult check_opfibration_pullbacks(uint64_t seed, int squares, int samples);
CheckResult check_stored_counterexample();
CheckResult check_pasting(uint64_t seed, int pairs);
CheckResult check_alt_composite(uint64_t seed, int squares, int samples);
CheckResult check_adjunction_oracle(uint64_t seed, int instances);
CheckResult check_cofinality(uint64_t seed, int passing, int failing);
CheckResult check_flow_sum_words(uint64_t seed, int pairs);
CheckResult check_composition_lemma(uint64_t seed, int instances);
CheckResult check_span_associativity(uint64_t seed, int triples);
// corpus round-trip plus byte-determinism of seeded generation
CheckResult check_round_trip(const std::vector<std::string>& corpus_paths,
                             uint64_t seed);

struct SuiteConfig {
  uint64_t seed = 7;
  int squares = 100;
  int samples = 20;
  std::vector<std::string> corpus_paths;
};

std::vector<CheckResult> run_acceptance_suite(const SuiteConfig& cfg);

}  // namespace flowcat

#endif
