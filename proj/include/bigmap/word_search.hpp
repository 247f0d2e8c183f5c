#pragma once

// Brute-force word length in the shark-tank model over a restricted alphabet:
// h, h^{-1} and every non-trivial side-preserving EndPerm whose window lies in
// [-W, W]. The restricted length is an upper bound for the word length with
// the full generating set, and the crossing norm is a lower bound for both.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bigmap/end_perm.hpp"

namespace bigmap {

struct WordSearchOptions {
  std::int64_t support_bound = 2;  // W
  std::size_t depth_bound = 4;     // D
  /// Refuse alphabets larger than this; the nu part has (W+1)! W! - 1 letters.
  std::size_t max_alphabet = 20000;
  /// States whose window leaves [-window_bound, window_bound] are dropped.
  /// Zero means W + D, which never prunes anything reachable.
  std::int64_t window_bound = 0;
};

/// The letters of the restricted alphabet, shifts first.
std::vector<EndPerm> restricted_alphabet(const WordSearchOptions& opts);

/// Every element reachable with at most D letters, with its least length.
/// Throws std::invalid_argument on W < 1 or an alphabet over the cap.
std::unordered_map<EndPerm, std::size_t> word_ball(const WordSearchOptions& opts);

/// Least restricted word length of target if it is at most D.
std::optional<std::size_t> word_length_oracle(const EndPerm& target,
                                              const WordSearchOptions& opts);

}  // namespace bigmap
