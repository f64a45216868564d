// Runs the twelve acceptance checks at their contract scale and prints one
// pass/fail line per criterion. Optional argv[1] points at the sample-file
// corpus for the round-trip criterion.
#include <chrono>
#include <filesystem>
#include <iostream>

#include "flowcat/harness.hpp"

using namespace flowcat;

int main(int argc, char** argv) {
  std::vector<std::string> corpus;
  if (argc > 1) {
    for (const auto& entry : std::filesystem::directory_iterator(argv[1]))
      corpus.push_back(entry.path().string());
    std::sort(corpus.begin(), corpus.end());
  }
  const uint64_t seed = 7;

  int idx = 0;
  bool all_pass = true;
  auto run = [&](auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = fn();
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << ++idx << ": "
              << r.name << " [" << r.detail << "] ("
              << static_cast<int>(secs * 1000) << " ms)\n";
    std::cout.flush();
    all_pass = all_pass && r.pass;
  };

  run([&] { return check_flow_product_exactness(seed, 100, 20); });
  run([&] { return check_flow_sum_exactness(seed, 100, 20); });
  run([&] { return check_opfibration_pullbacks(seed, 50, 20); });
  run([&] { return check_stored_counterexample(); });
  run([&] { return check_pasting(seed, 50); });
  run([&] { return check_alt_composite(seed, 100, 2); });
  run([&] { return check_adjunction_oracle(seed, 20); });
  run([&] { return check_cofinality(seed, 50, 20); });
  run([&] { return check_flow_sum_words(seed, 1000); });
  run([&] { return check_composition_lemma(seed, 50); });
  run([&] { return check_span_associativity(seed, 20); });
  run([&] { return check_round_trip(corpus, seed); });

  return all_pass ? 0 : 1;
}
