#pragma once

// The shark tank: a bi-infinite cylinder with punctures p_i, i in Z, exiting
// both ends. Its finite-index subgroup fixing the two limit ends is modelled
// through its action on the punctures (an EndPerm). Generators collapse to
// their puncture shadows: every element of nu_beta becomes a side-preserving
// EndPerm and the shift h_sigma becomes i -> i + 1. The quotient keeps the
// crossing norm exact and can only shorten words, so lower bounds on word
// length proved here hold for the full group.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "bigmap/end_perm.hpp"
#include "bigmap/qinf.hpp"

namespace bigmap {

/// h^n : i -> i + n.
EndPerm shift_power(std::int64_t n);

/// The fractional twist on the punctures s..e: j -> j + 1 for s <= j < e and
/// e -> s. Throws std::invalid_argument if s > e.
EndPerm frac_twist(std::int64_t s, std::int64_t e);

struct ZeroStats {
  /// Number of zeros before the final one.
  std::size_t count = 0;
  /// Increasing positions of those zeros.
  std::vector<std::int64_t> positions;
};

ZeroStats zero_stats(const BinarySeq& a);

/// pi_a: the product of frac_twist(z_a(i), |a| + i) for i = 1..z(a), with the
/// i = 1 factor applied first. Sends |a| + i to z_a(i).
EndPerm puncture_permutation(const BinarySeq& a);

/// Phi(a) = pi_a h^{|a|}. The punctures -|a|+1 .. 0 land exactly on the ones of a.
EndPerm phi(const BinarySeq& a);

/// #{i <= 0 : phi(i) > 0} + #{i > 0 : phi(i) <= 0}.
std::size_t crossing_norm(const EndPerm& phi);

/// The two crossing counts separately: A-to-B and B-to-A.
struct Crossings {
  std::size_t a_to_b = 0;
  std::size_t b_to_a = 0;
};
Crossings crossings(const EndPerm& phi);

/// A side-preserving generator (element of nu_beta's shadow).
struct NuLetter {
  EndPerm perm;
  friend bool operator==(const NuLetter&, const NuLetter&) = default;
};

/// h or h^{-1}.
struct ShiftLetter {
  int sign = 1;
  friend bool operator==(const ShiftLetter&, const ShiftLetter&) = default;
};

using Letter = std::variant<NuLetter, ShiftLetter>;

/// A word in the generators. The word w_0 w_1 ... w_{n-1} denotes the group
/// product, so w_{n-1} acts first and w_0 last.
class GenWord {
 public:
  GenWord() = default;
  /// Throws std::invalid_argument if a nu letter is not side-preserving or a
  /// shift letter has a sign other than +-1.
  explicit GenWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  /// Every letter costs one.
  std::size_t cost() const noexcept { return letters_.size(); }

  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  std::vector<Letter> letters_;
};

EndPerm letter_value(const Letter& l);

/// The group element the word denotes.
EndPerm replay(const GenWord& word);

/// A word for phi of cost at most crossing_norm(phi) + 3, built by the five
/// step reduction: line up the A-origin punctures sitting in B at 1..k1, shift
/// them over by h^{-k1}, line up the B-origin punctures sitting in A at
/// -k2+1..0, shift them back by h^{k2}, and absorb the side-preserving rest.
GenWord witness_factorization(const EndPerm& phi);

}  // namespace bigmap
