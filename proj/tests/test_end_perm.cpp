#include <doctest.h>

#include <random>

#include "bigmap/end_perm.hpp"
#include "bigmap/repro.hpp"
#include "bigmap/shark.hpp"

using namespace bigmap;

namespace {

constexpr std::int64_t kProbe = 40;

// Oracle: two bijections agree pointwise on a range well beyond any window used here.
bool same_map(const EndPerm& p, const std::function<std::int64_t(std::int64_t)>& f) {
  for (std::int64_t i = -kProbe; i <= kProbe; ++i) {
    if (p(i) != f(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction validates bijectivity") {
  CHECK_NOTHROW(EndPerm(0, 1, {2, 1}));
  CHECK_THROWS_AS(EndPerm(0, 1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(EndPerm(0, 1, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(EndPerm::from_map(0, 1, 3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("canonical form trims translational endpoints") {
  const EndPerm p(1, -3, {-2, -1, 1, 0, 2});
  CHECK(p.lo() == -1);
  CHECK(p.hi() == 0);
  CHECK(EndPerm(2, 0, {2, 3, 4}) == EndPerm::translation(2));
  CHECK(EndPerm(0, 5, {5}).is_identity());
}

TEST_CASE("composition examples") {
  CHECK(compose(EndPerm{}, EndPerm{}).is_identity());
  CHECK(compose(shift_power(1), shift_power(-1)).is_identity());
  const auto p = compose(frac_twist(1, 2), shift_power(1));
  CHECK(p(0) == 2);
  CHECK(p(1) == 1);
  CHECK(same_map(p, [](std::int64_t i) { return i == 0 ? 2 : i == 1 ? 1 : i + 1; }));
}

TEST_CASE("inverse examples") {
  CHECK(inverse(EndPerm{}).is_identity());
  CHECK(inverse(shift_power(3)) == shift_power(-3));
  const auto q = inverse(frac_twist(1, 3));
  CHECK(q(1) == 3);
  CHECK(q(2) == 1);
  CHECK(q(3) == 2);
}

TEST_CASE("side preservation") {
  CHECK(is_side_preserving(frac_twist(-3, 0)));
  CHECK(is_side_preserving(compose(frac_twist(-3, 0), frac_twist(1, 4))));
  CHECK_FALSE(is_side_preserving(frac_twist(0, 1)));
  CHECK_FALSE(is_side_preserving(shift_power(1)));
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(repro::seed_from_env() + 2);
  for (int k = 0; k < 500; ++k) {
    const auto p = repro::random_end_perm(rng, 8);
    const auto q = repro::random_end_perm(rng, 8);
    const auto r = repro::random_end_perm(rng, 8);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, EndPerm{}) == p);
    CHECK(compose(EndPerm{}, p) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    CHECK(same_map(compose(p, q), [&](std::int64_t i) { return p(q(i)); }));
    CHECK(std::hash<EndPerm>{}(compose(p, q)) == std::hash<EndPerm>{}(compose(compose(p, q), EndPerm{})));
  }
}
