#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace bigmap {

/// A bijection of Z that agrees with i -> i + offset outside a finite window.
///
/// This is the action of an element of the shark-tank group on its punctures
/// p_i, with A = {i <= 0} and B = {i > 0}. Values are kept in canonical form:
/// both window endpoints act non-translationally, or the window is empty. Two
/// EndPerms compare equal exactly when they are the same bijection.
class EndPerm {
 public:
  /// The identity.
  EndPerm() = default;

  /// Builds from explicit images of the window [lo, lo + images.size() - 1].
  /// Throws std::invalid_argument unless the images are a bijection onto
  /// [lo + offset, hi + offset].
  EndPerm(std::int64_t offset, std::int64_t lo, std::vector<std::int64_t> images);

  /// Builds from a sparse table; every window integer must be a key.
  static EndPerm from_map(std::int64_t offset, std::int64_t lo, std::int64_t hi,
                          const std::map<std::int64_t, std::int64_t>& images);

  static EndPerm translation(std::int64_t offset);

  std::int64_t offset() const noexcept { return offset_; }
  bool window_empty() const noexcept { return images_.empty(); }
  /// Only meaningful when the window is non-empty.
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept {
    return lo_ + static_cast<std::int64_t>(images_.size()) - 1;
  }
  const std::vector<std::int64_t>& window_images() const noexcept { return images_; }

  std::int64_t operator()(std::int64_t i) const noexcept {
    if (!images_.empty() && i >= lo_ && i <= hi()) {
      return images_[static_cast<std::size_t>(i - lo_)];
    }
    return i + offset_;
  }

  bool is_identity() const noexcept { return offset_ == 0 && images_.empty(); }

  friend bool operator==(const EndPerm&, const EndPerm&) = default;

 private:
  void canonicalize();

  std::int64_t offset_ = 0;
  std::int64_t lo_ = 0;
  std::vector<std::int64_t> images_;
};

/// i -> outer(inner(i)).
EndPerm compose(const EndPerm& outer, const EndPerm& inner);

EndPerm inverse(const EndPerm& phi);

/// True when phi maps A = {i <= 0} into A and B = {i > 0} into B.
bool is_side_preserving(const EndPerm& phi);

/// Windows larger than this are refused, since the window is stored densely.
inline constexpr std::int64_t kMaxWindow = std::int64_t{1} << 26;

}  // namespace bigmap

template <>
struct std::hash<bigmap::EndPerm> {
  std::size_t operator()(const bigmap::EndPerm& p) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(p.offset());
    auto mix = [&h](std::int64_t v) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    if (!p.window_empty()) mix(p.lo());
    for (auto v : p.window_images()) mix(v);
    return h;
  }
};
