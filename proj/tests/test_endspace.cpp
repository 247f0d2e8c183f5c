#include <doctest.h>

#include <random>

#include "bigmap/endspace.hpp"
#include "bigmap/repro.hpp"

using namespace bigmap::ends;

namespace {

EndClass make_class(std::string id, Cardinality card, bool nonplanar,
                    std::map<std::string, Presence> presence, std::set<std::string> accu = {}) {
  return EndClass{std::move(id), card, nonplanar, std::move(presence), std::move(accu)};
}

constexpr auto P = Presence::Present;
constexpr auto M = Presence::Maximal;

// Oracle for the edge relation, written from the rules directly.
bool edge_oracle(const EndClass& c, const std::string& a, const std::string& b) {
  const bool both_present = c.in(a) == P && c.in(b) == P;
  const bool cantor_shared = c.card.kind == CardKind::Cantor && c.in(a) != Presence::Absent &&
                             c.in(b) != Presence::Absent;
  return both_present || cantor_shared;
}

std::set<std::string> nonplanar(const EndClassTable& t) {
  std::set<std::string> out;
  for (const auto& c : t.classes) {
    if (c.nonplanar) out.insert(c.id);
  }
  return out;
}

void check_partition(const EndClassTable& t, const Partition& p, const std::set<std::string>& rel,
                     const std::string& px, const std::string& py) {
  CHECK(p.x.count(px) == 1);
  CHECK(p.y.count(py) == 1);
  CHECK(p.x.size() + p.y.size() == t.pieces.size());
  for (const auto& a : p.x) CHECK(p.y.count(a) == 0);
  for (const auto& a : p.x) {
    for (const auto& b : p.y) {
      for (const auto& c : t.classes) {
        if (rel.count(c.id)) CHECK_FALSE(edge_oracle(c, a, b));
      }
    }
  }
}

// A random table that passes validation: every piece gets a maximal class,
// the other classes sit in random pieces and accumulate to those pieces'
// maximal classes.
EndClassTable random_table(std::mt19937_64& rng, std::size_t max_pieces, std::size_t max_classes) {
  auto coin = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (;;) {
    EndClassTable t;
    const std::size_t pieces = 1 + static_cast<std::size_t>(coin(static_cast<int>(max_pieces)));
    for (std::size_t i = 0; i < pieces; ++i) t.pieces.push_back(std::string(1, char('A' + i)));
    const std::size_t maxima = 1 + static_cast<std::size_t>(coin(static_cast<int>(pieces)));
    const std::size_t others = static_cast<std::size_t>(coin(static_cast<int>(max_classes - maxima + 1)));
    for (std::size_t m = 0; m < maxima; ++m) {
      t.classes.push_back(make_class("m" + std::to_string(m),
                                     coin(2) ? Cardinality::countable() : Cardinality::cantor(),
                                     coin(2) == 0, {}));
    }
    for (std::size_t i = 0; i < pieces; ++i) {
      const auto m = i < maxima ? i : static_cast<std::size_t>(coin(static_cast<int>(maxima)));
      t.classes[m].presence[t.pieces[i]] = M;
    }
    auto top_of = [&](const std::string& piece) -> EndClass& {
      for (auto& c : t.classes) {
        if (c.in(piece) == M) return c;
      }
      throw std::logic_error("no maximal class");
    };
    for (std::size_t o = 0; o < others; ++o) {
      EndClass c = make_class("c" + std::to_string(o),
                              coin(3) == 0   ? Cardinality::finite(1 + coin(3))
                              : coin(2) == 0 ? Cardinality::cantor()
                                             : Cardinality::countable(),
                              coin(2) == 0, {});
      for (const auto& piece : t.pieces) {
        if (coin(2)) {
          c.presence[piece] = P;
          c.accumulates_to.insert(top_of(piece).id);
        }
      }
      if (c.presence.empty()) {
        c.presence[t.pieces.front()] = P;
        c.accumulates_to.insert(top_of(t.pieces.front()).id);
      }
      t.classes.push_back(std::move(c));
    }
    t.genus = nonplanar(t).empty() ? (coin(2) ? Genus::zero() : Genus::finite(2)) : Genus::infinite();
    if (validate_table(t).ok()) return t;
  }
}

std::vector<ShiftDescriptor> all_descriptors(const EndClassTable& t) {
  std::vector<EndRef> refs;
  for (const auto& piece : t.pieces) {
    for (const auto& c : t.classes) {
      if (c.occurs_in(piece)) refs.push_back({piece, c.id});
    }
  }
  std::vector<ShiftDescriptor> out;
  for (const auto& x : refs) {
    for (const auto& y : refs) {
      if (x.piece == y.piece) continue;
      for (const auto& g : {Genus::zero(), Genus::finite(1)}) {
        out.push_back({x, y, g, {}});
        for (const auto& c : t.classes) {
          out.push_back({x, y, g, {{c.id, Multiplicity::One}}});
          out.push_back({x, y, g, {{c.id, Multiplicity::Cantor}}});
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("builtin tables") {
  for (const auto& name : builtin_names()) {
    const auto t = compile_builtin(name);
    INFO(name);
    CHECK(validate_table(t).ok());
  }
  const auto tank = compile_builtin("shark_tank");
  CHECK(tank.pieces.size() == 2);
  CHECK(tank.classes.size() == 2);
  CHECK(tank.genus == Genus::zero());
  const auto loch = compile_builtin("loch_ness");
  CHECK(loch.pieces.size() == 1);
  CHECK(loch.classes.size() == 1);
  CHECK(loch.classes[0].nonplanar);
  CHECK(loch.genus == Genus::infinite());
  const auto spider = compile_builtin("spider");
  CHECK(spider.pieces.size() == 2);
  CHECK(spider.classes.size() == 4);
  CHECK_FALSE(has_essential_shift(spider).two_sided);
  CHECK_THROWS_AS(compile_builtin("torus"), std::invalid_argument);
}

TEST_CASE("validation catches broken tables") {
  auto t = compile_builtin("shark_tank");
  CHECK(validate_table(t).ok());

  auto two_max = t;
  two_max.classes[1].presence["A"] = M;
  const auto r1 = validate_table(two_max);
  REQUIRE_FALSE(r1.ok());
  bool saw = false;
  for (const auto& v : r1.violations) saw = saw || v.rule == "one-maximal-per-piece";
  CHECK(saw);

  EndClassTable planar_target{{"A"},
                              Genus::infinite(),
                              {make_class("top", Cardinality::countable(), false, {{"A", M}}),
                               make_class("g", Cardinality::countable(), true, {{"A", P}}, {"top"})}};
  const auto r2 = validate_table(planar_target);
  saw = false;
  for (const auto& v : r2.violations) saw = saw || v.rule == "nonplanar-accumulation";
  CHECK(saw);

  auto unknown = t;
  unknown.classes[1].accumulates_to.insert("ghost");
  CHECK_FALSE(validate_table(unknown).ok());
  CHECK_THROWS_AS(require_valid(unknown), std::invalid_argument);
}

TEST_CASE("accumulation closure") {
  const auto tank = compile_builtin("shark_tank");
  CHECK(accumulation_closure(tank, "punctures") == std::set<std::string>{"limit"});
  CHECK(accumulation_closure(tank, "limit").empty());
  EndClassTable chain{{"A"},
                      Genus::zero(),
                      {make_class("z", Cardinality::countable(), false, {{"A", P}}, {"w"}),
                       make_class("w", Cardinality::countable(), false, {{"A", P}}, {"m"}),
                       make_class("m", Cardinality::countable(), false, {{"A", M}})}};
  CHECK(accumulation_closure(chain, "z") == std::set<std::string>{"w", "m"});
  CHECK_THROWS_AS(accumulation_closure(chain, "q"), std::invalid_argument);
}

TEST_CASE("genus partitions") {
  const auto ladder = compile_builtin("jacobs_ladder");
  const auto p = genus_side_partition(ladder, "A", "B");
  REQUIRE(p);
  CHECK(p->x == std::set<std::string>{"A"});
  CHECK(p->y == std::set<std::string>{"B"});
  CHECK_FALSE(genus_side_partition(compile_builtin("loch_ness"), "A", "A"));
  CHECK_FALSE(genus_side_partition(compile_builtin("spider"), "A", "B"));
  CHECK_THROWS_AS(genus_side_partition(ladder, "A", "Z"), std::invalid_argument);
}

TEST_CASE("class partitions") {
  const auto tank = compile_builtin("shark_tank");
  const auto p = class_side_partition(tank, "punctures", "A", "B");
  REQUIRE(p);
  CHECK(p->x == std::set<std::string>{"A"});
  CHECK(p->y == std::set<std::string>{"B"});
  CHECK_FALSE(class_side_partition(compile_builtin("cantor_tree"), "cantor_end", "A", "B"));
  CHECK_FALSE(class_side_partition(compile_builtin("spider"), "punctures", "A", "B"));
  CHECK_THROWS_AS(class_side_partition(tank, "ghost", "A", "B"), std::invalid_argument);
}

TEST_CASE("existence verdicts") {
  const auto tank = has_essential_shift(compile_builtin("shark_tank"));
  CHECK(tank.two_sided);
  REQUIRE(tank.witness);
  CHECK(tank.witness->mode == Mode::Class);
  CHECK(tank.witness->class_id == "punctures");
  CHECK_FALSE(has_essential_shift(compile_builtin("blooming_cantor_tree")).two_sided);
  const auto ladder = has_essential_shift(compile_builtin("jacobs_ladder"));
  CHECK(ladder.two_sided);
  REQUIRE(ladder.witness);
  CHECK(ladder.witness->mode == Mode::Genus);
  CHECK_FALSE(has_essential_shift(compile_builtin("loch_ness")).two_sided);
  CHECK_FALSE(has_essential_shift(compile_builtin("cantor_tree")).two_sided);
}

TEST_CASE("shift classification examples") {
  const auto ladder = compile_builtin("jacobs_ladder");
  const auto handle =
      classify_shift(ladder, {{"A", "genus_end"}, {"B", "genus_end"}, Genus::finite(1), {}});
  CHECK(handle.essential);
  REQUIRE(handle.reasons.size() == 1);
  CHECK(handle.reasons[0].mode == Mode::Genus);

  const auto tank = compile_builtin("shark_tank");
  const auto puncture = classify_shift(
      tank, {{"A", "limit"}, {"B", "limit"}, Genus::zero(), {{"punctures", Multiplicity::One}}});
  CHECK(puncture.essential);
  REQUIRE(puncture.reasons.size() == 1);
  CHECK(puncture.reasons[0].mode == Mode::Class);
  CHECK(puncture.reasons[0].class_id == "punctures");

  const auto tree = compile_builtin("cantor_tree");
  CHECK_FALSE(classify_shift(tree, {{"A", "cantor_end"},
                                    {"B", "cantor_end"},
                                    Genus::zero(),
                                    {{"cantor_end", Multiplicity::Cantor}}})
                  .essential);

  // Genus-zero blocks never fire the genus criterion.
  CHECK_FALSE(
      classify_shift(ladder, {{"A", "genus_end"}, {"B", "genus_end"}, Genus::zero(), {}}).essential);
}

TEST_CASE("descriptor validation") {
  const auto tank = compile_builtin("shark_tank");
  CHECK_THROWS_AS(classify_shift(tank, {{"A", "limit"}, {"A", "limit"}, Genus::zero(), {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_shift(tank, {{"A", "ghost"}, {"B", "limit"}, Genus::zero(), {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_shift(tank, {{"A", "limit"}, {"C", "limit"}, Genus::zero(), {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_shift(tank, {{"A", "limit"},
                                        {"B", "limit"},
                                        Genus::zero(),
                                        {{"ghost", Multiplicity::One}}}),
                  std::invalid_argument);
}

TEST_CASE("cantor rule decisiveness is reported") {
  // Two pieces sharing a Cantor maximal class, with a countable class in each.
  EndClassTable t{{"A", "B"},
                  Genus::zero(),
                  {make_class("top", Cardinality::cantor(), false, {{"A", M}, {"B", M}}),
                   make_class("p", Cardinality::countable(), false, {{"A", P}, {"B", P}}, {"top"})}};
  REQUIRE(validate_table(t).ok());
  // class p: Accu(p) = {top}; the Cantor rule joins A and B.
  const auto v = has_essential_shift(t);
  CHECK_FALSE(v.two_sided);
  CHECK(v.cantor_edge_decisive);
  CHECK_FALSE(has_essential_shift(compile_builtin("shark_tank")).cantor_edge_decisive);
}

TEST_CASE("partition soundness and symmetry on random tables") {
  std::mt19937_64 rng(bigmap::repro::seed_from_env() + 11);
  for (int k = 0; k < 400; ++k) {
    const auto t = random_table(rng, 4, 5);
    for (const auto& px : t.pieces) {
      for (const auto& py : t.pieces) {
        if (px == py) continue;
        const auto g = genus_side_partition(t, px, py);
        const auto g_rev = genus_side_partition(t, py, px);
        CHECK(g.has_value() == g_rev.has_value());
        if (g && g_rev) {
          check_partition(t, *g, nonplanar(t), px, py);
          CHECK(g_rev->x == g->y);
          CHECK(g_rev->y == g->x);
        }
        for (const auto& c : t.classes) {
          const auto p = class_side_partition(t, c.id, px, py);
          const auto p_rev = class_side_partition(t, c.id, py, px);
          CHECK(p.has_value() == p_rev.has_value());
          if (c.card.kind == CardKind::Cantor) CHECK_FALSE(p);
          if (p && p_rev) {
            check_partition(t, *p, accumulation_closure(t, c.id), px, py);
            CHECK(p_rev->x == p->y);
            CHECK(p_rev->y == p->x);
          }
        }
      }
    }
  }
}

TEST_CASE("existence agrees with exhaustive shift classification") {
  std::mt19937_64 rng(bigmap::repro::seed_from_env() + 12);
  for (int k = 0; k < 300; ++k) {
    const auto t = random_table(rng, 3, 4);
    bool any = false;
    for (const auto& s : all_descriptors(t)) {
      const auto v = classify_shift(t, s);
      any = any || v.essential;
      for (const auto& r : v.reasons) {
        CHECK(r.partition.x.count(s.x.piece) == 1);
        CHECK(r.partition.y.count(s.y.piece) == 1);
      }
      // Cantor-multiplicity block classes never contribute.
      if (!s.block_maximal_classes.empty() &&
          s.block_maximal_classes[0].multiplicity == Multiplicity::Cantor) {
        for (const auto& r : v.reasons) CHECK(r.mode == Mode::Genus);
      }
    }
    CHECK(any == has_essential_shift(t).two_sided);
  }
}

TEST_CASE("adding an edge-creating class never creates a partition") {
  std::mt19937_64 rng(bigmap::repro::seed_from_env() + 13);
  int augmented = 0;
  for (int k = 0; k < 400; ++k) {
    const auto t = random_table(rng, 4, 4);
    if (t.pieces.size() < 2) continue;
    const auto a = t.pieces[rng() % t.pieces.size()];
    auto b = a;
    while (b == a) b = t.pieces[rng() % t.pieces.size()];
    auto bigger = t;
    EndClass extra = make_class("joiner", Cardinality::countable(), rng() % 2 == 0,
                                {{a, P}, {b, P}});
    for (const auto& piece : {a, b}) {
      for (const auto& c : t.classes) {
        if (c.in(piece) == M) extra.accumulates_to.insert(c.id);
      }
    }
    bigger.classes.push_back(extra);
    if (!validate_table(bigger).ok()) continue;
    ++augmented;
    for (const auto& px : t.pieces) {
      for (const auto& py : t.pieces) {
        if (px == py) continue;
        if (genus_side_partition(bigger, px, py)) CHECK(genus_side_partition(t, px, py));
        for (const auto& c : t.classes) {
          if (class_side_partition(bigger, c.id, px, py)) {
            CHECK(class_side_partition(t, c.id, px, py));
          }
        }
      }
    }
  }
  CHECK(augmented > 50);
}

TEST_CASE("free components go to the side that needs relevant ends") {
  // Three isolated pieces; only A and C carry genus.
  EndClassTable t{{"A", "B", "C"},
                  Genus::infinite(),
                  {make_class("g", Cardinality::countable(), true, {{"A", M}, {"C", M}}),
                   make_class("b", Cardinality::countable(), false, {{"B", M}})}};
  REQUIRE(validate_table(t).ok());
  const auto ab = genus_side_partition(t, "A", "B");
  const auto ba = genus_side_partition(t, "B", "A");
  REQUIRE(ab);
  REQUIRE(ba);
  CHECK(ab->x == std::set<std::string>{"A"});
  CHECK(ab->y == std::set<std::string>{"B", "C"});
  CHECK(ba->x == ab->y);
  CHECK(ba->y == ab->x);
  // Without C, the side holding B has no genus.
  t.pieces.pop_back();
  t.classes[0].presence.erase("C");
  REQUIRE(validate_table(t).ok());
  CHECK_FALSE(genus_side_partition(t, "A", "B"));
}
