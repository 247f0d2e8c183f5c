#include "bigmap/shark.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bigmap {

EndPerm shift_power(std::int64_t n) { return EndPerm::translation(n); }

EndPerm frac_twist(std::int64_t s, std::int64_t e) {
  if (s > e) {
    throw std::invalid_argument("frac_twist: empty window [" + std::to_string(s) + ", " +
                                std::to_string(e) + "]");
  }
  std::vector<std::int64_t> images;
  images.reserve(static_cast<std::size_t>(e - s + 1));
  for (std::int64_t j = s; j < e; ++j) images.push_back(j + 1);
  images.push_back(s);
  return EndPerm(0, s, std::move(images));
}

ZeroStats zero_stats(const BinarySeq& a) {
  ZeroStats out;
  if (a.empty()) return out;
  const auto ones = a.machine_ones();
  std::int64_t next = 1;
  for (auto one : ones) {
    for (; next < one; ++next) out.positions.push_back(next);
    next = one + 1;
  }
  out.count = out.positions.size();
  return out;
}

EndPerm puncture_permutation(const BinarySeq& a) {
  const auto zs = zero_stats(a);
  const auto weight = static_cast<std::int64_t>(a.weight());
  EndPerm pi;
  for (std::size_t i = 1; i <= zs.count; ++i) {
    pi = compose(frac_twist(zs.positions[i - 1], weight + static_cast<std::int64_t>(i)), pi);
  }
  return pi;
}

EndPerm phi(const BinarySeq& a) {
  return compose(puncture_permutation(a), shift_power(static_cast<std::int64_t>(a.weight())));
}

namespace {

// Number of integers in [a, b] lying outside phi's window.
std::size_t count_outside_window(const EndPerm& phi, std::int64_t a, std::int64_t b) {
  if (b < a) return 0;
  auto n = static_cast<std::size_t>(b - a + 1);
  if (!phi.window_empty()) {
    const std::int64_t lo = std::max(a, phi.lo());
    const std::int64_t hi = std::min(b, phi.hi());
    if (lo <= hi) n -= static_cast<std::size_t>(hi - lo + 1);
  }
  return n;
}

}  // namespace

Crossings crossings(const EndPerm& phi) {
  Crossings c;
  if (!phi.window_empty()) {
    for (std::int64_t i = phi.lo(); i <= phi.hi(); ++i) {
      const std::int64_t j = phi(i);
      if (i <= 0 && j > 0) ++c.a_to_b;
      if (i > 0 && j <= 0) ++c.b_to_a;
    }
  }
  // Translational part: i -> i + t crosses iff i lies in [1 - t, 0] (t > 0)
  // or [1, -t] (t < 0).
  const std::int64_t t = phi.offset();
  if (t > 0) c.a_to_b += count_outside_window(phi, 1 - t, 0);
  if (t < 0) c.b_to_a += count_outside_window(phi, 1, -t);
  return c;
}

std::size_t crossing_norm(const EndPerm& phi) {
  const auto c = crossings(phi);
  return c.a_to_b + c.b_to_a;
}

GenWord::GenWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (const auto* nu = std::get_if<NuLetter>(&l)) {
      if (!is_side_preserving(nu->perm)) {
        throw std::invalid_argument("GenWord: nu letter is not side-preserving");
      }
    } else if (const auto* s = std::get_if<ShiftLetter>(&l)) {
      if (s->sign != 1 && s->sign != -1) {
        throw std::invalid_argument("GenWord: shift letter must have sign +1 or -1");
      }
    }
  }
}

EndPerm letter_value(const Letter& l) {
  if (const auto* nu = std::get_if<NuLetter>(&l)) return nu->perm;
  return shift_power(std::get<ShiftLetter>(l).sign);
}

EndPerm replay(const GenWord& word) {
  EndPerm out;
  for (const auto& l : word.letters()) out = compose(out, letter_value(l));
  return out;
}

namespace {

// Side-preserving u with u(sources[r]) = targets[r]; every source and target
// lies on one side, the rest of that side is moved in increasing order into
// the positions left over. Identity outside the hull of sources and targets.
EndPerm line_up(const std::vector<std::int64_t>& sources,
                const std::vector<std::int64_t>& targets) {
  if (sources.empty()) return EndPerm{};
  std::int64_t lo = std::min(*std::min_element(sources.begin(), sources.end()),
                             *std::min_element(targets.begin(), targets.end()));
  std::int64_t hi = std::max(*std::max_element(sources.begin(), sources.end()),
                             *std::max_element(targets.begin(), targets.end()));
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::int64_t> images(width, 0);
  std::vector<bool> assigned(width, false), taken(width, false);
  for (std::size_t r = 0; r < sources.size(); ++r) {
    images[static_cast<std::size_t>(sources[r] - lo)] = targets[r];
    assigned[static_cast<std::size_t>(sources[r] - lo)] = true;
    taken[static_cast<std::size_t>(targets[r] - lo)] = true;
  }
  std::size_t free_target = 0;
  for (std::size_t k = 0; k < width; ++k) {
    if (assigned[k]) continue;
    while (taken[free_target]) ++free_target;
    images[k] = lo + static_cast<std::int64_t>(free_target);
    taken[free_target] = true;
  }
  return EndPerm(0, lo, std::move(images));
}

void append_shifts(std::vector<Letter>& letters, std::size_t count, int sign) {
  for (std::size_t k = 0; k < count; ++k) letters.emplace_back(ShiftLetter{sign});
}

void append_nu(std::vector<Letter>& letters, EndPerm u) {
  if (!u.is_identity()) letters.emplace_back(NuLetter{std::move(u)});
}

}  // namespace

GenWord witness_factorization(const EndPerm& psi) {
  // Positions in B currently holding A-origin punctures, and positions in A
  // holding B-origin punctures.
  const EndPerm psi_inv = inverse(psi);
  std::vector<std::int64_t> a_in_b, b_in_a;
  if (!psi_inv.window_empty()) {
    for (std::int64_t j = psi_inv.lo(); j <= psi_inv.hi(); ++j) {
      const std::int64_t origin = psi_inv(j);
      if (j > 0 && origin <= 0) a_in_b.push_back(j);
      if (j <= 0 && origin > 0) b_in_a.push_back(j);
    }
  }
  // The translational part of psi_inv (offset -t) contributes whole runs.
  const std::int64_t t = psi.offset();
  auto outside = [&](std::int64_t j) {
    return psi_inv.window_empty() || j < psi_inv.lo() || j > psi_inv.hi();
  };
  if (t > 0) {
    for (std::int64_t j = 1; j <= t; ++j) {
      if (outside(j)) a_in_b.push_back(j);
    }
  } else if (t < 0) {
    for (std::int64_t j = t + 1; j <= 0; ++j) {
      if (outside(j)) b_in_a.push_back(j);
    }
  }
  std::sort(a_in_b.begin(), a_in_b.end());
  std::sort(b_in_a.begin(), b_in_a.end());
  const auto k1 = a_in_b.size();
  const auto k2 = b_in_a.size();

  // s1: line the A-origin punctures up at 1..k1.
  std::vector<std::int64_t> targets1(k1);
  for (std::size_t r = 0; r < k1; ++r) targets1[r] = static_cast<std::int64_t>(r) + 1;
  const EndPerm s1 = line_up(a_in_b, targets1);

  // After h^{-k1} s1 the B-origin punctures in A sit at b_in_a - k1.
  std::vector<std::int64_t> sources2(k2), targets2(k2);
  for (std::size_t r = 0; r < k2; ++r) {
    sources2[r] = b_in_a[r] - static_cast<std::int64_t>(k1);
    targets2[r] = static_cast<std::int64_t>(r) - static_cast<std::int64_t>(k2) + 1;
  }
  const EndPerm s2 = line_up(sources2, targets2);

  const auto n1 = static_cast<std::int64_t>(k1);
  const auto n2 = static_cast<std::int64_t>(k2);
  const EndPerm undo =
      compose(shift_power(n2), compose(s2, compose(shift_power(-n1), s1)));
  // undo * psi is side-preserving; call it r, so psi = s1^-1 h^k1 s2^-1 h^-k2 r.
  const EndPerm rest = compose(undo, psi);

  std::vector<Letter> letters;
  append_nu(letters, inverse(s1));
  append_shifts(letters, k1, +1);
  append_nu(letters, inverse(s2));
  append_shifts(letters, k2, -1);
  append_nu(letters, rest);
  return GenWord(std::move(letters));
}

}  // namespace bigmap
