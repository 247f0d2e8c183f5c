// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>

#include "bigmap/repro.hpp"

int main() {
  const auto seed = bigmap::repro::seed_from_env();
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  bool ok = true;
  // Serial, so each runtime is measured without contention.
  for (const auto& r : bigmap::repro::run_all(seed, false)) {
    ok = ok && r.passed;
    std::printf("criterion %d: %s  %s  (%.3f s, budget %.0f s)  %s\n", r.id,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.budget_seconds,
                r.detail.c_str());
  }
  return ok ? 0 : 1;
}
