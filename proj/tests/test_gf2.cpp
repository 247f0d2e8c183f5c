#include <doctest.h>

#include <random>
#include <set>

#include "bigmap/gf2.hpp"
#include "bigmap/repro.hpp"

using namespace bigmap::gf2;

namespace {

Vector bits(const char* s) { return Vector::from_bits(s); }

Subspace span(std::initializer_list<const char*> rows, std::size_t n) {
  std::vector<Vector> v;
  for (const auto* r : rows) v.push_back(bits(r));
  return rref_basis(v, n);
}

// Oracle: every vector of the span, as bit strings, by enumerating all
// combinations of the generators.
std::set<std::string> enumerate(const std::vector<Vector>& gens, std::size_t n) {
  std::set<std::string> out;
  const std::size_t m = gens.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Vector v(n);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) v ^= gens[i];
    }
    out.insert(v.to_bits());
  }
  return out;
}

std::set<std::string> enumerate(const Subspace& s) { return enumerate(s.basis(), s.ambient()); }

std::vector<Vector> random_rows(std::mt19937_64& rng, std::size_t count, std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < count; ++r) {
    Vector v(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 3 == 0) v.set(c);
    }
    rows.push_back(v);
  }
  return rows;
}

}  // namespace

TEST_CASE("vectors") {
  auto v = bits("10110");
  CHECK(v.size() == 5);
  CHECK(v.popcount() == 3);
  CHECK(v.lowest() == 0u);
  CHECK(v.to_bits() == "10110");
  v ^= bits("10000");
  CHECK(v.lowest() == 2u);
  CHECK(Vector(70).is_zero());
  Vector w(130);
  w.set(129);
  CHECK(w.lowest() == 129u);
  CHECK_THROWS(Vector::from_bits("10a"));
}

TEST_CASE("row reduction examples") {
  CHECK(rref_basis({}, 4).dim() == 0);
  CHECK(span({"1100", "0110", "1010"}, 4).dim() == 2);
  CHECK(span({"1000", "0100", "0010", "0001"}, 4) == Subspace::full(4));
  CHECK_THROWS_AS(span({"110"}, 4), AmbientMismatch);
}

TEST_CASE("intersection examples") {
  const auto u = span({"1100", "0011"}, 4);
  CHECK(subspace_intersect(u, u) == u);
  CHECK(subspace_intersect(u, span({"1000", "0100"}, 4)) == span({"1100"}, 4));
  CHECK(subspace_intersect(span({"1000"}, 4), span({"0100"}, 4)).dim() == 0);
}

TEST_CASE("codimension examples") {
  const auto v = span({"1100", "0011", "1010"}, 4);
  CHECK(codim(v, v) == 0);
  CHECK(codim(Subspace::full(4), span({"1000"}, 4)) == 3);
  CHECK(codim(v, span({"1100"}, 4)) == 2);
  CHECK_THROWS_AS(codim(span({"1000"}, 4), span({"0100"}, 4)), NotSubspace);
}

TEST_CASE("inverse and rank") {
  const std::vector<Vector> m{bits("110"), bits("010"), bits("011")};
  const auto inv = invert(m);
  // x M M^-1 = x for each basis row.
  for (std::size_t i = 0; i < 3; ++i) {
    Vector x(3);
    for (std::size_t c = 0; c < 3; ++c) {
      if (m[i].get(c)) x ^= inv[c];
    }
    Vector e(3);
    e.set(i);
    CHECK(x == e);
  }
  CHECK(rank(m) == 3);
  CHECK_THROWS(invert(std::vector<Vector>{bits("11"), bits("11")}));
}

TEST_CASE("subspace operations agree with enumeration") {
  std::mt19937_64 rng(bigmap::repro::seed_from_env() + 7);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 9;
    const auto gu = random_rows(rng, rng() % 6, n);
    const auto gv = random_rows(rng, rng() % 6, n);
    const auto u = rref_basis(gu, n);
    const auto v = rref_basis(gv, n);
    const auto su = enumerate(gu, n);
    const auto sv = enumerate(gv, n);
    CHECK(enumerate(u) == su);
    CHECK(su.size() == (std::size_t{1} << u.dim()));

    std::set<std::string> inter;
    for (const auto& x : su) {
      if (sv.count(x)) inter.insert(x);
    }
    const auto i = subspace_intersect(u, v);
    CHECK(enumerate(i) == inter);

    std::vector<Vector> both = gu;
    both.insert(both.end(), gv.begin(), gv.end());
    const auto s = subspace_sum(u, v);
    CHECK(enumerate(s) == enumerate(both, n));
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(is_subspace_of(i, u));
    CHECK(is_subspace_of(u, s));
    CHECK(codim(s, u) == s.dim() - u.dim());

    // Canonical form: any spanning set of the same space gives the same basis.
    std::vector<Vector> shuffled(u.basis().rbegin(), u.basis().rend());
    if (shuffled.size() > 1) shuffled[0] ^= shuffled[1];
    CHECK(rref_basis(shuffled, n) == u);
  }
}
