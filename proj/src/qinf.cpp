#include "bigmap/qinf.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace bigmap {

BinarySeq::BinarySeq(std::vector<BigIndex> ones) : ones_(std::move(ones)) {
  for (const auto& i : ones_) {
    if (i < 1) {
      throw std::invalid_argument("BinarySeq: index " + i.str() + " is not positive");
    }
  }
  std::sort(ones_.begin(), ones_.end());
  ones_.erase(std::unique(ones_.begin(), ones_.end()), ones_.end());
}

BinarySeq::BinarySeq(std::initializer_list<std::int64_t> ones)
    : BinarySeq(std::vector<BigIndex>(ones.begin(), ones.end())) {}

BinarySeq BinarySeq::from_machine(std::span<const std::int64_t> ones) {
  return BinarySeq(std::vector<BigIndex>(ones.begin(), ones.end()));
}

bool BinarySeq::contains(const BigIndex& i) const {
  return std::binary_search(ones_.begin(), ones_.end(), i);
}

std::vector<std::int64_t> BinarySeq::machine_ones() const {
  std::vector<std::int64_t> out;
  out.reserve(ones_.size());
  for (const auto& i : ones_) {
    if (i > std::numeric_limits<std::int64_t>::max()) {
      throw std::out_of_range("BinarySeq: index " + i.str() + " exceeds 64-bit range");
    }
    out.push_back(static_cast<std::int64_t>(i));
  }
  return out;
}

BinarySeq symmetric_difference(const BinarySeq& a, const BinarySeq& b) {
  std::vector<BigIndex> out;
  std::set_symmetric_difference(a.ones().begin(), a.ones().end(), b.ones().begin(),
                                b.ones().end(), std::back_inserter(out));
  return BinarySeq(std::move(out));
}

std::size_t l1_distance(const BinarySeq& a, const BinarySeq& b) {
  // Merge walk; avoids materialising the difference.
  const auto& x = a.ones();
  const auto& y = b.ones();
  std::size_t i = 0, j = 0, common = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return x.size() + y.size() - 2 * common;
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> first_odd_primes(std::size_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; out.size() < n; p += 2) {
    if (is_odd_prime(p)) out.push_back(p);
  }
  return out;
}

BinarySeq prime_line_embed(std::int64_t p, std::int64_t m) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("prime_line_embed: " + std::to_string(p) +
                                " is not an odd prime");
  }
  std::vector<BigIndex> ones;
  const std::int64_t steps = m < 0 ? -m : m;
  ones.reserve(static_cast<std::size_t>(steps));
  BigIndex power = m < 0 ? 2 : 1;
  for (std::int64_t k = 1; k <= steps; ++k) {
    power *= p;
    ones.push_back(power);
  }
  return BinarySeq(std::move(ones));
}

BinarySeq zn_embed(std::span<const std::int64_t> primes,
                   std::span<const std::int64_t> point) {
  if (primes.size() != point.size()) {
    throw std::invalid_argument("zn_embed: " + std::to_string(primes.size()) +
                                " primes for a point of dimension " +
                                std::to_string(point.size()));
  }
  std::vector<std::int64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("zn_embed: primes must be pairwise distinct");
  }
  std::vector<BigIndex> ones;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto line = prime_line_embed(primes[i], point[i]);
    ones.insert(ones.end(), line.ones().begin(), line.ones().end());
  }
  return BinarySeq(std::move(ones));
}

BinarySeq zn_embed(std::span<const std::int64_t> point) {
  const auto primes = first_odd_primes(point.size());
  return zn_embed(primes, point);
}

BinarySeq parse_binary_seq(const std::string& text) {
  std::vector<BigIndex> ones;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const auto token = item.substr(first, last - first + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("BinarySeq: '" + token + "' is not a positive integer");
    }
    ones.emplace_back(token);
  }
  return BinarySeq(std::move(ones));
}

std::string to_string(const BinarySeq& a) {
  std::string out;
  for (std::size_t i = 0; i < a.ones().size(); ++i) {
    if (i) out += ',';
    out += a.ones()[i].str();
  }
  return out;
}

}  // namespace bigmap
