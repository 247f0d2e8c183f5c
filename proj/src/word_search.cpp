#include "bigmap/word_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bigmap/shark.hpp"

namespace bigmap {

namespace {

std::size_t nu_alphabet_size(std::int64_t w, std::size_t cap) {
  // (W+1)! * W! with early exit once the cap is passed.
  std::size_t n = 1;
  for (std::int64_t k = 2; k <= w + 1; ++k) {
    n *= static_cast<std::size_t>(k);
    if (n > cap) return cap + 1;
  }
  for (std::int64_t k = 2; k <= w; ++k) {
    n *= static_cast<std::size_t>(k);
    if (n > cap) return cap + 1;
  }
  return n;
}

void check_options(const WordSearchOptions& opts) {
  if (opts.support_bound < 1) {
    throw std::invalid_argument("word search: support bound must be at least 1");
  }
  if (nu_alphabet_size(opts.support_bound, opts.max_alphabet) + 1 > opts.max_alphabet) {
    throw std::invalid_argument("word search: alphabet for W = " +
                                std::to_string(opts.support_bound) + " exceeds the cap of " +
                                std::to_string(opts.max_alphabet));
  }
}

std::int64_t effective_window_bound(const WordSearchOptions& opts) {
  return opts.window_bound > 0
             ? opts.window_bound
             : opts.support_bound + static_cast<std::int64_t>(opts.depth_bound);
}

bool within(const EndPerm& p, std::int64_t bound) {
  return p.window_empty() || (p.lo() >= -bound && p.hi() <= bound);
}

// BFS from the identity; stops early once `target` is settled.
std::unordered_map<EndPerm, std::size_t> bfs(const WordSearchOptions& opts,
                                             const EndPerm* target) {
  check_options(opts);
  const auto alphabet = restricted_alphabet(opts);
  const auto bound = effective_window_bound(opts);

  std::unordered_map<EndPerm, std::size_t> dist;
  dist.emplace(EndPerm{}, 0);
  std::vector<EndPerm> frontier{EndPerm{}};
  for (std::size_t depth = 1; depth <= opts.depth_bound && !frontier.empty(); ++depth) {
    if (target && dist.count(*target)) break;
    std::vector<EndPerm> next;
    for (const auto& g : frontier) {
      for (const auto& s : alphabet) {
        EndPerm h = compose(g, s);
        if (!within(h, bound)) continue;
        if (dist.emplace(h, depth).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

std::vector<EndPerm> restricted_alphabet(const WordSearchOptions& opts) {
  check_options(opts);
  const std::int64_t w = opts.support_bound;
  std::vector<EndPerm> out{shift_power(1), shift_power(-1)};

  std::vector<std::int64_t> left(static_cast<std::size_t>(w + 1));
  std::vector<std::int64_t> right(static_cast<std::size_t>(w));
  std::iota(left.begin(), left.end(), -w);
  std::iota(right.begin(), right.end(), 1);
  const auto right_start = right;
  do {
    right = right_start;
    do {
      std::vector<std::int64_t> images(left);
      images.insert(images.end(), right.begin(), right.end());
      EndPerm u(0, -w, std::move(images));
      if (!u.is_identity()) out.push_back(std::move(u));
    } while (std::next_permutation(right.begin(), right.end()));
  } while (std::next_permutation(left.begin(), left.end()));
  return out;
}

std::unordered_map<EndPerm, std::size_t> word_ball(const WordSearchOptions& opts) {
  return bfs(opts, nullptr);
}

std::optional<std::size_t> word_length_oracle(const EndPerm& target,
                                              const WordSearchOptions& opts) {
  const auto dist = bfs(opts, &target);
  const auto it = dist.find(target);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

}  // namespace bigmap
