#pragma once

// Reproduction checks: each one exercises a headline identity on random or
// exhaustive input and reports pass/fail against its runtime budget.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bigmap/end_perm.hpp"
#include "bigmap/graded.hpp"
#include "bigmap/qinf.hpp"

namespace bigmap::repro {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Seed from the SEED environment variable if set, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 20240501);

// Random inputs shared by the checks and the property tests.

/// A product of at most `max_letters` generators: h^{+-1} or a random
/// side-preserving cycle on a short interval.
EndPerm random_end_perm(std::mt19937_64& rng, int max_letters);

/// Random subset of [1, max_pos].
BinarySeq random_binary_seq(std::mt19937_64& rng, std::int64_t max_pos);

/// Window inside [-4, 4], invertible block matrix, offset in [-3, 3].
GradedAut random_graded_aut(std::mt19937_64& rng, std::size_t block_dim = 2);

CheckResult check_zn_isometry(std::uint64_t seed);
CheckResult check_crossing_length_function(std::uint64_t seed);
CheckResult check_phi_distance(std::uint64_t seed);
CheckResult check_witness_sandwich(std::uint64_t seed);
CheckResult check_oracle_lower_bound(std::uint64_t seed);
CheckResult check_shift_homology(std::uint64_t seed);
CheckResult check_homology_length_function(std::uint64_t seed);
CheckResult check_golden_verdicts(std::uint64_t seed);
CheckResult check_phi_support(std::uint64_t seed);

struct Check {
  int id;
  std::string name;
  double budget_seconds;
  std::function<CheckResult(std::uint64_t)> run;
};

/// All nine checks in order.
const std::vector<Check>& all_checks();

/// Runs every check, concurrently when `parallel`. Results come back in order.
std::vector<CheckResult> run_all(std::uint64_t seed, bool parallel = true);

}  // namespace bigmap::repro
