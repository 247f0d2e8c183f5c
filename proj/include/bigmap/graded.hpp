#pragma once

// Graded GF(2) homology of a surface with a Z-indexed family of handles.
//
// Coordinates are pairs (block i, k) with 0 <= k < d; block i stands for
// H_i, the homology of the i-th shifted subsurface modulo separating classes
// (d = 2 for genus one subsurfaces). The split is H_- = blocks i <= 0 and
// H_+ = blocks i >= 1, each optionally widened by extra coordinates that
// every automorphism fixes (the homology of the complement of the strip).
// Nothing here is built from a surface; we work in the quotient's
// coordinates directly.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bigmap/gf2.hpp"

namespace bigmap {

struct BlockRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const noexcept { return hi < lo; }
  std::size_t size() const noexcept {
    return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1);
  }
  bool contains(std::int64_t i) const noexcept { return lo <= i && i <= hi; }
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

struct Coord {
  std::int64_t block = 0;
  std::size_t k = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// An automorphism of the graded space that sends (i, k) to (i + t, k)
/// outside a finite block window. Row r of the window matrix is the image of
/// window coordinate r, both sides in (block, k) lexicographic order, the
/// image side indexed from block lo + t.
class GradedAut {
 public:
  /// The identity with block dimension d.
  explicit GradedAut(std::size_t block_dim = 2);

  /// Throws std::invalid_argument on a shape mismatch or a singular matrix.
  GradedAut(std::int64_t offset, std::size_t block_dim, BlockRange window,
            std::vector<gf2::Vector> matrix);

  static GradedAut translation(std::int64_t offset, std::size_t block_dim);

  std::int64_t offset() const noexcept { return offset_; }
  std::size_t block_dim() const noexcept { return d_; }
  const BlockRange& window() const noexcept { return window_; }
  const std::vector<gf2::Vector>& matrix() const noexcept { return rows_; }

  /// Image of one basis coordinate, as a set of coordinates.
  std::vector<Coord> image(Coord c) const;

  friend bool operator==(const GradedAut&, const GradedAut&) = default;

 private:
  void canonicalize();

  std::int64_t offset_ = 0;
  std::size_t d_ = 2;
  BlockRange window_;
  std::vector<gf2::Vector> rows_;
};

/// outer after inner. Throws std::invalid_argument on block dimension mismatch.
GradedAut compose(const GradedAut& outer, const GradedAut& inner);
GradedAut inverse(const GradedAut& phi);

/// The pure block translation by n.
GradedAut graded_shift(std::int64_t n, std::size_t block_dim);

/// Extra fixed coordinates on each side (the complement of the strip).
struct SplitSpec {
  std::size_t extra_minus = 0;
  std::size_t extra_plus = 0;
  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

class HullTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subspace of the coordinates of blocks in a hull, followed by the
/// extra coordinates of the split.
struct GradedSubspace {
  BlockRange hull;
  std::size_t block_dim = 2;
  SplitSpec split;
  gf2::Subspace space;

  std::size_t ambient() const noexcept {
    return hull.size() * block_dim + split.extra_minus + split.extra_plus;
  }
  /// Position of (block, k) in the coordinate vector.
  std::size_t index(Coord c) const;

  /// The span of all coordinates of blocks [first, last] within the hull.
  static GradedSubspace blocks(BlockRange hull, std::size_t block_dim, SplitSpec split,
                               std::int64_t first, std::int64_t last);

  friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;
};

/// phi*(U), evaluated exactly. Throws HullTooSmall if an image leaves the hull.
GradedSubspace graded_apply(const GradedAut& phi, const GradedSubspace& u);

/// The smallest hull used by homology_norm:
/// [min(lo, 0) - |t|, max(hi, 1) + |t|].
BlockRange minimal_hull(const GradedAut& phi);
BlockRange hull_union(const BlockRange& a, const BlockRange& b);

/// codim of (H_+ n phi* H_+) + (H_- n phi* H_-) in the whole space, computed
/// on the finite hull. Outside a valid hull the map is a side-preserving
/// translation and contributes nothing, so the value does not depend on the
/// hull chosen. Throws HullTooSmall if hull does not contain minimal_hull(phi).
std::size_t homology_norm(const GradedAut& phi, const SplitSpec& split, BlockRange hull);
std::size_t homology_norm(const GradedAut& phi, const SplitSpec& split = {});

}  // namespace bigmap
