#pragma once

// Bit-packed GF(2) vectors and subspaces kept in reduced row echelon form.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigmap::gf2 {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  /// From a string of '0'/'1' characters, position 0 first.
  static Vector from_bits(const std::string& bits);

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) noexcept {
    const auto mask = std::uint64_t{1} << (i % 64);
    if (v) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  Vector& operator^=(const Vector& other);
  friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }

  bool is_zero() const noexcept;
  /// Index of the lowest set bit.
  std::optional<std::size_t> lowest() const noexcept;
  std::size_t popcount() const noexcept;

  std::string to_bits() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSubspace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subspace of GF(2)^n. The basis is in reduced row echelon form with
/// pivots (lowest set bit) strictly increasing, so equal subspaces have
/// identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace full(std::size_t ambient);
  /// The span of the given coordinate axes.
  static Subspace coordinates(std::size_t ambient, std::span<const std::size_t> axes);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  bool contains(const Vector& v) const;
  /// Reduces v against the basis in place; the result is zero iff v is in the span.
  void reduce(Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace rref_basis(std::span<const Vector> rows, std::size_t ambient);
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

/// The span of rows in canonical form. Throws AmbientMismatch if a row has
/// the wrong length.
Subspace rref_basis(std::span<const Vector> rows, std::size_t ambient);

Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Zassenhaus: reduce [u | u] and [v | 0]; rows with zero left half span U n V.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

bool is_subspace_of(const Subspace& w, const Subspace& v);

/// dim V - dim W. Throws NotSubspace unless W is contained in V.
std::size_t codim(const Subspace& v, const Subspace& w);

/// Row-vector convention: x -> x M. Throws if the matrix is not square or
/// not invertible.
std::vector<Vector> invert(std::span<const Vector> rows);

std::size_t rank(std::span<const Vector> rows);

}  // namespace bigmap::gf2
