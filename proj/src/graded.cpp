#include "bigmap/graded.hpp"

#include <algorithm>
#include <string>

namespace bigmap {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

gf2::Vector slice(const gf2::Vector& v, std::size_t from, std::size_t count) {
  gf2::Vector out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (v.get(from + i)) out.set(i);
  }
  return out;
}

bool is_unit(const gf2::Vector& v, std::size_t pos) {
  return v.get(pos) && v.popcount() == 1;
}

}  // namespace

GradedAut::GradedAut(std::size_t block_dim) : d_(block_dim) {
  if (d_ == 0) throw std::invalid_argument("GradedAut: block dimension must be at least 1");
}

GradedAut::GradedAut(std::int64_t offset, std::size_t block_dim, BlockRange window,
                     std::vector<gf2::Vector> matrix)
    : offset_(offset), d_(block_dim), window_(window), rows_(std::move(matrix)) {
  if (d_ == 0) throw std::invalid_argument("GradedAut: block dimension must be at least 1");
  if (window_.empty()) {
    if (!rows_.empty()) throw std::invalid_argument("GradedAut: matrix given for an empty window");
    window_ = BlockRange{};
    return;
  }
  const std::size_t n = window_.size() * d_;
  if (rows_.size() != n) {
    throw std::invalid_argument("GradedAut: expected " + std::to_string(n) +
                                " matrix rows, got " + std::to_string(rows_.size()));
  }
  for (const auto& r : rows_) {
    if (r.size() != n) {
      throw std::invalid_argument("GradedAut: expected rows of length " + std::to_string(n) +
                                  ", got " + std::to_string(r.size()));
    }
  }
  if (gf2::rank(rows_) != n) throw std::invalid_argument("GradedAut: window matrix is singular");
  canonicalize();
}

GradedAut GradedAut::translation(std::int64_t offset, std::size_t block_dim) {
  GradedAut g(block_dim);
  g.offset_ = offset;
  return g;
}

void GradedAut::canonicalize() {
  // An endpoint block can be dropped when it maps coordinatewise onto its
  // translate and no other window coordinate touches that translate.
  while (!window_.empty()) {
    const std::size_t n = rows_.size();
    bool trim_lo = true;
    for (std::size_t r = 0; r < n && trim_lo; ++r) {
      if (r < d_) {
        trim_lo = is_unit(rows_[r], r);
      } else {
        for (std::size_t c = 0; c < d_; ++c) {
          if (rows_[r].get(c)) trim_lo = false;
        }
      }
    }
    if (trim_lo) {
      std::vector<gf2::Vector> next;
      for (std::size_t r = d_; r < n; ++r) next.push_back(slice(rows_[r], d_, n - d_));
      rows_ = std::move(next);
      ++window_.lo;
      continue;
    }
    bool trim_hi = true;
    for (std::size_t r = 0; r < n && trim_hi; ++r) {
      if (r >= n - d_) {
        trim_hi = is_unit(rows_[r], r);
      } else {
        for (std::size_t c = n - d_; c < n; ++c) {
          if (rows_[r].get(c)) trim_hi = false;
        }
      }
    }
    if (trim_hi) {
      std::vector<gf2::Vector> next;
      for (std::size_t r = 0; r + d_ < n; ++r) next.push_back(slice(rows_[r], 0, n - d_));
      rows_ = std::move(next);
      --window_.hi;
      continue;
    }
    break;
  }
  if (window_.empty()) {
    window_ = BlockRange{};
    rows_.clear();
  }
}

std::vector<Coord> GradedAut::image(Coord c) const {
  if (c.k >= d_) throw std::invalid_argument("GradedAut::image: coordinate index out of range");
  if (!window_.contains(c.block)) return {Coord{c.block + offset_, c.k}};
  const auto r = static_cast<std::size_t>(c.block - window_.lo) * d_ + c.k;
  std::vector<Coord> out;
  const auto& row = rows_[r];
  for (std::size_t col = 0; col < row.size(); ++col) {
    if (row.get(col)) {
      out.push_back(Coord{window_.lo + offset_ + static_cast<std::int64_t>(col / d_), col % d_});
    }
  }
  return out;
}

GradedAut compose(const GradedAut& outer, const GradedAut& inner) {
  if (outer.block_dim() != inner.block_dim()) {
    throw std::invalid_argument("compose: block dimensions differ");
  }
  const std::size_t d = inner.block_dim();
  const std::int64_t offset = outer.offset() + inner.offset();
  BlockRange w;
  if (!inner.window().empty()) w = inner.window();
  if (!outer.window().empty()) {
    const BlockRange pulled{outer.window().lo - inner.offset(), outer.window().hi - inner.offset()};
    w = w.empty() ? pulled : hull_union(w, pulled);
  }
  if (w.empty()) return GradedAut::translation(offset, d);

  const std::size_t n = w.size() * d;
  const std::int64_t target_lo = w.lo + offset;
  std::vector<gf2::Vector> rows;
  rows.reserve(n);
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      gf2::Vector row(n);
      for (const auto& mid : inner.image({i, k})) {
        for (const auto& c : outer.image(mid)) {
          const std::int64_t rel = c.block - target_lo;
          if (rel < 0 || static_cast<std::size_t>(rel) >= w.size()) {
            throw std::logic_error("compose: image escaped the target window");
          }
          row.flip(static_cast<std::size_t>(rel) * d + c.k);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return GradedAut(offset, d, w, std::move(rows));
}

GradedAut inverse(const GradedAut& phi) {
  if (phi.window().empty()) return GradedAut::translation(-phi.offset(), phi.block_dim());
  const BlockRange w{phi.window().lo + phi.offset(), phi.window().hi + phi.offset()};
  return GradedAut(-phi.offset(), phi.block_dim(), w, gf2::invert(phi.matrix()));
}

GradedAut graded_shift(std::int64_t n, std::size_t block_dim) {
  if (block_dim == 0) throw std::invalid_argument("graded_shift: block dimension must be >= 1");
  return GradedAut::translation(n, block_dim);
}

std::size_t GradedSubspace::index(Coord c) const {
  if (!hull.contains(c.block) || c.k >= block_dim) {
    throw HullTooSmall("graded coordinate (" + std::to_string(c.block) + ", " +
                       std::to_string(c.k) + ") lies outside the hull [" +
                       std::to_string(hull.lo) + ", " + std::to_string(hull.hi) + "]");
  }
  return static_cast<std::size_t>(c.block - hull.lo) * block_dim + c.k;
}

GradedSubspace GradedSubspace::blocks(BlockRange hull, std::size_t block_dim, SplitSpec split,
                                      std::int64_t first, std::int64_t last) {
  GradedSubspace out{hull, block_dim, split, gf2::Subspace(0)};
  std::vector<std::size_t> axes;
  for (std::int64_t i = std::max(first, hull.lo); i <= std::min(last, hull.hi); ++i) {
    for (std::size_t k = 0; k < block_dim; ++k) axes.push_back(out.index({i, k}));
  }
  out.space = gf2::Subspace::coordinates(out.ambient(), axes);
  return out;
}

GradedSubspace graded_apply(const GradedAut& phi, const GradedSubspace& u) {
  if (phi.block_dim() != u.block_dim) {
    throw std::invalid_argument("graded_apply: block dimensions differ");
  }
  const std::size_t d = u.block_dim;
  const std::size_t graded = u.hull.size() * d;
  std::vector<gf2::Vector> images;
  for (const auto& b : u.space.basis()) {
    gf2::Vector img(u.ambient());
    for (std::size_t pos = 0; pos < b.size(); ++pos) {
      if (!b.get(pos)) continue;
      if (pos >= graded) {
        img.flip(pos);  // extra coordinates are fixed
        continue;
      }
      const Coord c{u.hull.lo + static_cast<std::int64_t>(pos / d), pos % d};
      for (const auto& t : phi.image(c)) img.flip(u.index(t));
    }
    images.push_back(std::move(img));
  }
  GradedSubspace out = u;
  out.space = gf2::rref_basis(images, u.ambient());
  return out;
}

BlockRange minimal_hull(const GradedAut& phi) {
  const std::int64_t t = abs64(phi.offset());
  // Always keeps blocks 0 and 1 so the hull is never empty.
  const std::int64_t lo = phi.window().empty() ? 0 : std::min<std::int64_t>(phi.window().lo, 0);
  const std::int64_t hi = phi.window().empty() ? 1 : std::max<std::int64_t>(phi.window().hi, 1);
  return BlockRange{lo - t, hi + t};
}

BlockRange hull_union(const BlockRange& a, const BlockRange& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return BlockRange{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace {

// Codimension of (H_side n phi* H_side) in H_side, restricted to the hull.
// `tail` is the part of phi*(H_side) coming from blocks beyond the hull,
// clipped to the working range.
std::size_t side_codim(const GradedAut& phi, const GradedSubspace& side,
                       const GradedSubspace& tail, const GradedSubspace& hull_space) {
  const auto image = graded_apply(phi, side);
  const auto reachable = gf2::subspace_sum(image.space, tail.space);
  const auto image_in_hull = gf2::subspace_intersect(reachable, hull_space.space);
  const auto kept = gf2::subspace_intersect(side.space, image_in_hull);
  return gf2::codim(side.space, kept);
}

GradedSubspace with_extras(GradedSubspace s, bool minus, bool plus) {
  const std::size_t graded = s.hull.size() * s.block_dim;
  std::vector<gf2::Vector> rows(s.space.basis());
  auto add_axis = [&](std::size_t pos) {
    gf2::Vector v(s.ambient());
    v.set(pos);
    rows.push_back(std::move(v));
  };
  if (minus) {
    for (std::size_t j = 0; j < s.split.extra_minus; ++j) add_axis(graded + j);
  }
  if (plus) {
    for (std::size_t j = 0; j < s.split.extra_plus; ++j) {
      add_axis(graded + s.split.extra_minus + j);
    }
  }
  s.space = gf2::rref_basis(rows, s.ambient());
  return s;
}

}  // namespace

std::size_t homology_norm(const GradedAut& phi, const SplitSpec& split, BlockRange hull) {
  const BlockRange need = minimal_hull(phi);
  if (hull.empty() || hull.lo > need.lo || hull.hi < need.hi) {
    throw HullTooSmall("homology_norm: hull [" + std::to_string(hull.lo) + ", " +
                       std::to_string(hull.hi) + "] does not contain [" +
                       std::to_string(need.lo) + ", " + std::to_string(need.hi) + "]");
  }
  const std::size_t d = phi.block_dim();
  const std::int64_t t = phi.offset();
  const std::int64_t a = hull.lo;
  const std::int64_t b = hull.hi;
  // Images of the hull land in [a - |t|, b + |t|].
  const BlockRange work{a - abs64(t), b + abs64(t)};

  const auto hull_space =
      with_extras(GradedSubspace::blocks(work, d, split, a, b), true, true);

  const auto plus = with_extras(GradedSubspace::blocks(work, d, split, 1, b), false, true);
  // Blocks beyond b are translated to blocks beyond b + t.
  const auto plus_tail = GradedSubspace::blocks(work, d, split, b + t + 1, work.hi);
  const auto minus = with_extras(GradedSubspace::blocks(work, d, split, a, 0), true, false);
  const auto minus_tail = GradedSubspace::blocks(work, d, split, work.lo, a + t - 1);

  return side_codim(phi, plus, plus_tail, hull_space) +
         side_codim(phi, minus, minus_tail, hull_space);
}

std::size_t homology_norm(const GradedAut& phi, const SplitSpec& split) {
  return homology_norm(phi, split, minimal_hull(phi));
}

}  // namespace bigmap
