#include "bigmap/gf2.hpp"

#include <algorithm>
#include <bit>

namespace bigmap::gf2 {

Vector Vector::from_bits(const std::string& bits) {
  Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("gf2::Vector: bad bit character '" +
                                  std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

Vector& Vector::operator^=(const Vector& other) {
  if (other.size_ != size_) throw AmbientMismatch("gf2::Vector: size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::optional<std::size_t> Vector::lowest() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

std::size_t Vector::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string Vector::to_bits() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> axes(ambient);
  for (std::size_t i = 0; i < ambient; ++i) axes[i] = i;
  return coordinates(ambient, axes);
}

Subspace Subspace::coordinates(std::size_t ambient, std::span<const std::size_t> axes) {
  std::vector<Vector> rows;
  rows.reserve(axes.size());
  for (auto a : axes) {
    if (a >= ambient) throw AmbientMismatch("gf2::Subspace: axis out of range");
    Vector v(ambient);
    v.set(a);
    rows.push_back(std::move(v));
  }
  return rref_basis(rows, ambient);
}

void Subspace::reduce(Vector& v) const {
  for (const auto& b : basis_) {
    if (v.get(*b.lowest())) v ^= b;
  }
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("gf2::Subspace: vector size mismatch");
  Vector r = v;
  reduce(r);
  return r.is_zero();
}

Subspace rref_basis(std::span<const Vector> rows, std::size_t ambient) {
  std::vector<Vector> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ambient) {
      throw AmbientMismatch("rref_basis: row of length " + std::to_string(r.size()) +
                            " in ambient " + std::to_string(ambient));
    }
    work.push_back(r);
  }
  // Forward elimination on lowest-bit pivots.
  std::vector<Vector> echelon;
  for (auto& r : work) {
    for (const auto& e : echelon) {
      if (r.get(*e.lowest())) r ^= e;
    }
    if (r.is_zero()) continue;
    // Keep earlier rows reduced against the new pivot.
    const auto p = *r.lowest();
    for (auto& e : echelon) {
      if (e.get(p)) e ^= r;
    }
    echelon.push_back(std::move(r));
  }
  std::sort(echelon.begin(), echelon.end(),
            [](const Vector& a, const Vector& b) { return *a.lowest() < *b.lowest(); });
  Subspace out(ambient);
  out.basis_ = std::move(echelon);
  return out;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw AmbientMismatch("subspace_sum: ambient mismatch");
  std::vector<Vector> rows(u.basis());
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return rref_basis(rows, u.ambient());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) {
    throw AmbientMismatch("subspace_intersect: ambients " + std::to_string(u.ambient()) +
                          " and " + std::to_string(v.ambient()));
  }
  const std::size_t n = u.ambient();
  std::vector<Vector> rows;
  rows.reserve(u.dim() + v.dim());
  for (const auto& b : u.basis()) {
    Vector r(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (b.get(i)) {
        r.set(i);
        r.set(n + i);
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& b : v.basis()) {
    Vector r(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (b.get(i)) r.set(i);
    }
    rows.push_back(std::move(r));
  }
  const auto reduced = rref_basis(rows, 2 * n);
  std::vector<Vector> meet;
  for (const auto& r : reduced.basis()) {
    if (*r.lowest() < n) continue;
    Vector w(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (r.get(n + i)) w.set(i);
    }
    meet.push_back(std::move(w));
  }
  return rref_basis(meet, n);
}

bool is_subspace_of(const Subspace& w, const Subspace& v) {
  if (w.ambient() != v.ambient()) throw AmbientMismatch("is_subspace_of: ambient mismatch");
  return std::all_of(w.basis().begin(), w.basis().end(),
                     [&](const Vector& b) { return v.contains(b); });
}

std::size_t codim(const Subspace& v, const Subspace& w) {
  if (!is_subspace_of(w, v)) throw NotSubspace("codim: W is not contained in V");
  return v.dim() - w.dim();
}

std::size_t rank(std::span<const Vector> rows) {
  if (rows.empty()) return 0;
  return rref_basis(rows, rows.front().size()).dim();
}

std::vector<Vector> invert(std::span<const Vector> rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("gf2::invert: matrix is not square");
  }
  // Gauss-Jordan on [M | I].
  std::vector<Vector> a(rows.begin(), rows.end());
  std::vector<Vector> inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e.set(i);
    inv.push_back(std::move(e));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot].get(col)) ++pivot;
    if (pivot == n) throw std::invalid_argument("gf2::invert: matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].get(col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

}  // namespace bigmap::gf2
