#pragma once

// The cube Q^inf of eventually-zero 0/1 sequences with the l1 metric, and the
// isometric embeddings of Z and Z^n into it.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bigmap {

using BigIndex = boost::multiprecision::cpp_int;

/// An element of Q^inf, stored as the sorted set of 1-based positions holding a 1.
class BinarySeq {
 public:
  BinarySeq() = default;

  /// Throws std::invalid_argument if any index is < 1. Duplicates are merged.
  explicit BinarySeq(std::vector<BigIndex> ones);
  BinarySeq(std::initializer_list<std::int64_t> ones);

  static BinarySeq from_machine(std::span<const std::int64_t> ones);

  const std::vector<BigIndex>& ones() const noexcept { return ones_; }

  /// |a|, the number of ones.
  std::size_t weight() const noexcept { return ones_.size(); }
  bool empty() const noexcept { return ones_.empty(); }
  bool contains(const BigIndex& i) const;

  /// The ones as machine integers; throws std::out_of_range if one does not fit.
  std::vector<std::int64_t> machine_ones() const;

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;

 private:
  std::vector<BigIndex> ones_;
};

/// a - b in (Z/2)^N: the symmetric difference of supports.
BinarySeq symmetric_difference(const BinarySeq& a, const BinarySeq& b);

std::size_t l1_distance(const BinarySeq& a, const BinarySeq& b);

bool is_odd_prime(std::int64_t p);

/// The first n odd primes 3, 5, 7, ...
std::vector<std::int64_t> first_odd_primes(std::size_t n);

/// f_p(m): ones at p^k for 0 < k <= m when m > 0, at 2 p^k for 0 < k <= |m|
/// when m < 0, and the zero sequence for m = 0.
BinarySeq prime_line_embed(std::int64_t p, std::int64_t m);

/// F(a) = sum_i f_{p_i}(a_i). The primes must be distinct odd primes.
BinarySeq zn_embed(std::span<const std::int64_t> primes,
                   std::span<const std::int64_t> point);

/// zn_embed with the default primes 3, 5, 7, ...
BinarySeq zn_embed(std::span<const std::int64_t> point);

/// Comma separated list of positions; the empty string is the zero sequence.
BinarySeq parse_binary_seq(const std::string& text);
std::string to_string(const BinarySeq& a);

}  // namespace bigmap
