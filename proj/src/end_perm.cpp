#include "bigmap/end_perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bigmap {

EndPerm::EndPerm(std::int64_t offset, std::int64_t lo, std::vector<std::int64_t> images)
    : offset_(offset), lo_(lo), images_(std::move(images)) {
  if (static_cast<std::int64_t>(images_.size()) > kMaxWindow) {
    throw std::invalid_argument("EndPerm: window of " + std::to_string(images_.size()) +
                                " points exceeds the supported size");
  }
  // The images must hit every point of [lo + t, hi + t] exactly once.
  const std::int64_t target_lo = lo_ + offset_;
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const std::int64_t rel = images_[k] - target_lo;
    if (rel < 0 || rel >= static_cast<std::int64_t>(images_.size()) ||
        hit[static_cast<std::size_t>(rel)]) {
      throw std::invalid_argument("EndPerm: images are not a bijection onto [" +
                                  std::to_string(target_lo) + ", " +
                                  std::to_string(target_lo +
                                                 static_cast<std::int64_t>(images_.size()) - 1) +
                                  "] (at " + std::to_string(lo_ + static_cast<std::int64_t>(k)) +
                                  " -> " + std::to_string(images_[k]) + ")");
    }
    hit[static_cast<std::size_t>(rel)] = true;
  }
  canonicalize();
}

EndPerm EndPerm::from_map(std::int64_t offset, std::int64_t lo, std::int64_t hi,
                          const std::map<std::int64_t, std::int64_t>& images) {
  if (hi < lo) {
    if (!images.empty()) throw std::invalid_argument("EndPerm: images given for an empty window");
    return translation(offset);
  }
  if (hi - lo + 1 > kMaxWindow) {
    throw std::invalid_argument("EndPerm: window exceeds the supported size");
  }
  if (static_cast<std::int64_t>(images.size()) != hi - lo + 1) {
    throw std::invalid_argument("EndPerm: expected " + std::to_string(hi - lo + 1) +
                                " window images, got " + std::to_string(images.size()));
  }
  std::vector<std::int64_t> dense;
  dense.reserve(images.size());
  for (std::int64_t i = lo; i <= hi; ++i) {
    const auto it = images.find(i);
    if (it == images.end()) {
      throw std::invalid_argument("EndPerm: missing image for " + std::to_string(i));
    }
    dense.push_back(it->second);
  }
  return EndPerm(offset, lo, std::move(dense));
}

EndPerm EndPerm::translation(std::int64_t offset) {
  EndPerm p;
  p.offset_ = offset;
  return p;
}

void EndPerm::canonicalize() {
  // Trimming a translational endpoint keeps the rest a bijection onto the
  // shrunken target interval, so the invariant survives.
  std::size_t first = 0;
  std::size_t last = images_.size();
  while (first < last &&
         images_[first] == lo_ + static_cast<std::int64_t>(first) + offset_) {
    ++first;
  }
  while (last > first &&
         images_[last - 1] == lo_ + static_cast<std::int64_t>(last - 1) + offset_) {
    --last;
  }
  if (first == last) {
    images_.clear();
    lo_ = 0;
    return;
  }
  images_ = std::vector<std::int64_t>(images_.begin() + static_cast<std::ptrdiff_t>(first),
                                      images_.begin() + static_cast<std::ptrdiff_t>(last));
  lo_ += static_cast<std::int64_t>(first);
}

EndPerm compose(const EndPerm& outer, const EndPerm& inner) {
  const std::int64_t offset = outer.offset() + inner.offset();
  // The result is translational outside inner's window and the preimage of
  // outer's window under inner's translation.
  bool any = false;
  std::int64_t lo = 0, hi = -1;
  auto include = [&](std::int64_t a, std::int64_t b) {
    if (!any) {
      lo = a;
      hi = b;
      any = true;
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  };
  if (!inner.window_empty()) include(inner.lo(), inner.hi());
  if (!outer.window_empty()) {
    include(outer.lo() - inner.offset(), outer.hi() - inner.offset());
  }
  if (!any) return EndPerm::translation(offset);
  if (hi - lo + 1 > kMaxWindow) {
    throw std::invalid_argument("compose: result window exceeds the supported size");
  }
  std::vector<std::int64_t> images;
  images.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = lo; i <= hi; ++i) images.push_back(outer(inner(i)));
  return EndPerm(offset, lo, std::move(images));
}

EndPerm inverse(const EndPerm& phi) {
  if (phi.window_empty()) return EndPerm::translation(-phi.offset());
  const std::int64_t lo = phi.lo() + phi.offset();
  std::vector<std::int64_t> images(phi.window_images().size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    const std::int64_t source = phi.lo() + static_cast<std::int64_t>(k);
    images[static_cast<std::size_t>(phi.window_images()[k] - lo)] = source;
  }
  return EndPerm(-phi.offset(), lo, std::move(images));
}

bool is_side_preserving(const EndPerm& phi) {
  if (phi.offset() != 0) return false;
  if (phi.window_empty()) return true;
  for (std::int64_t i = phi.lo(); i <= phi.hi(); ++i) {
    if ((i <= 0) != (phi(i) <= 0)) return false;
  }
  return true;
}

}  // namespace bigmap
