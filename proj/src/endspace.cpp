#include "bigmap/endspace.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bigmap::ends {

Presence EndClass::in(const std::string& piece) const {
  const auto it = presence.find(piece);
  return it == presence.end() ? Presence::Absent : it->second;
}

const EndClass* EndClassTable::find(const std::string& id) const {
  for (const auto& c : classes) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool EndClassTable::has_piece(const std::string& piece) const {
  return std::find(pieces.begin(), pieces.end(), piece) != pieces.end();
}

std::string to_string(Mode m) { return m == Mode::Genus ? "genus" : "class"; }

namespace {

std::set<std::string> closure_unchecked(const EndClassTable& t, const std::string& z) {
  std::set<std::string> seen;
  std::deque<std::string> todo;
  if (const auto* c = t.find(z)) {
    for (const auto& a : c->accumulates_to) todo.push_back(a);
  }
  while (!todo.empty()) {
    auto id = std::move(todo.front());
    todo.pop_front();
    if (!seen.insert(id).second) continue;
    if (const auto* c = t.find(id)) {
      for (const auto& a : c->accumulates_to) todo.push_back(a);
    }
  }
  return seen;
}

}  // namespace

ValidationReport validate_table(const EndClassTable& t) {
  ValidationReport rep;
  auto fail = [&rep](std::string rule, std::string detail) {
    rep.violations.push_back({std::move(rule), std::move(detail)});
  };

  if (t.pieces.empty()) fail("pieces-nonempty", "the table lists no pieces");
  {
    std::set<std::string> seen;
    for (const auto& p : t.pieces) {
      if (!seen.insert(p).second) fail("unique-ids", "piece '" + p + "' listed twice");
    }
    seen.clear();
    for (const auto& c : t.classes) {
      if (!seen.insert(c.id).second) fail("unique-ids", "class '" + c.id + "' listed twice");
    }
  }
  if (t.genus.kind == GenusKind::Finite && t.genus.count < 1) {
    fail("genus-range", "finite genus must be at least 1");
  }

  for (const auto& c : t.classes) {
    if (c.card.kind == CardKind::Finite && c.card.count < 1) {
      fail("cardinality-range", "class '" + c.id + "' has finite cardinality below 1");
    }
    for (const auto& [piece, pres] : c.presence) {
      if (!t.has_piece(piece)) {
        fail("unknown-reference", "class '" + c.id + "' names unknown piece '" + piece + "'");
      }
    }
    for (const auto& a : c.accumulates_to) {
      const auto* target = t.find(a);
      if (!target) {
        fail("unknown-reference", "class '" + c.id + "' accumulates to unknown class '" + a + "'");
      } else if (c.nonplanar && !target->nonplanar) {
        fail("nonplanar-accumulation", "nonplanar class '" + c.id +
                                           "' accumulates to planar class '" + a + "'");
      }
    }
  }

  for (const auto& piece : t.pieces) {
    std::vector<const EndClass*> maximal;
    for (const auto& c : t.classes) {
      if (c.in(piece) == Presence::Maximal) maximal.push_back(&c);
    }
    if (maximal.size() != 1) {
      fail("one-maximal-per-piece", "piece '" + piece + "' has " +
                                        std::to_string(maximal.size()) + " maximal classes");
      continue;
    }
    const auto& top = *maximal.front();
    for (const auto& c : t.classes) {
      if (c.in(piece) != Presence::Present) continue;
      if (!closure_unchecked(t, c.id).count(top.id)) {
        fail("maximal-accumulation", "class '" + c.id + "' occurs in piece '" + piece +
                                         "' but does not accumulate to its maximal class '" +
                                         top.id + "'");
      }
    }
  }

  for (const auto& c : t.classes) {
    const bool is_max = std::any_of(c.presence.begin(), c.presence.end(),
                                    [](const auto& kv) { return kv.second == Presence::Maximal; });
    if (is_max && c.card.kind == CardKind::Finite) {
      fail("maximal-cardinality",
           "maximal class '" + c.id + "' must be countable (isolated) or cantor");
    }
  }

  const bool any_nonplanar = std::any_of(t.classes.begin(), t.classes.end(),
                                         [](const EndClass& c) { return c.nonplanar; });
  if (any_nonplanar && t.genus.kind != GenusKind::Infinite) {
    fail("genus-consistency", "nonplanar classes require infinite genus");
  }
  if (!any_nonplanar && t.genus.kind == GenusKind::Infinite) {
    fail("genus-consistency", "infinite genus requires a nonplanar class");
  }
  return rep;
}

void require_valid(const EndClassTable& t) {
  const auto rep = validate_table(t);
  if (rep.ok()) return;
  std::string msg = "invalid end class table:";
  for (const auto& v : rep.violations) msg += " [" + v.rule + "] " + v.detail + ";";
  throw std::invalid_argument(msg);
}

std::set<std::string> accumulation_closure(const EndClassTable& t, const std::string& z) {
  if (!t.find(z)) throw std::invalid_argument("accumulation_closure: unknown class '" + z + "'");
  return closure_unchecked(t, z);
}

namespace {

void require_piece(const EndClassTable& t, const std::string& p) {
  if (!t.has_piece(p)) throw std::invalid_argument("unknown piece '" + p + "'");
}

bool joins(const EndClass& c, const std::string& a, const std::string& b, bool cantor_rule) {
  if (c.in(a) == Presence::Present && c.in(b) == Presence::Present) return true;
  return cantor_rule && c.card.kind == CardKind::Cantor && c.occurs_in(a) && c.occurs_in(b);
}

// Pieces reachable from start through the relevant classes.
std::set<std::string> component(const EndClassTable& t, const std::set<std::string>& relevant,
                                const std::string& start, bool cantor_rule) {
  std::set<std::string> reach{start};
  std::deque<std::string> todo{start};
  while (!todo.empty()) {
    const auto a = todo.front();
    todo.pop_front();
    for (const auto& b : t.pieces) {
      if (reach.count(b)) continue;
      const bool edge = std::any_of(t.classes.begin(), t.classes.end(), [&](const EndClass& c) {
        return relevant.count(c.id) && joins(c, a, b, cantor_rule);
      });
      if (edge) {
        reach.insert(b);
        todo.push_back(b);
      }
    }
  }
  return reach;
}

bool side_meets(const EndClassTable& t, const std::set<std::string>& side,
                const std::set<std::string>& relevant) {
  for (const auto& c : t.classes) {
    if (!relevant.count(c.id)) continue;
    for (const auto& p : side) {
      if (c.occurs_in(p)) return true;
    }
  }
  return false;
}

// X holds px's component and Y holds py's. Each remaining component goes to
// a side that still lacks relevant ends, else to the side of whichever of
// px, py comes first in the piece list; that tie-break keeps the result
// symmetric under swapping px and py.
std::optional<Partition> split_pieces(const EndClassTable& t,
                                      const std::set<std::string>& relevant,
                                      const std::string& px, const std::string& py,
                                      bool cantor_rule) {
  if (px == py) return std::nullopt;
  auto cx = component(t, relevant, px, cantor_rule);
  if (cx.count(py)) return std::nullopt;
  auto cy = component(t, relevant, py, cantor_rule);

  std::vector<std::set<std::string>> others;
  std::set<std::string> placed = cx;
  placed.insert(cy.begin(), cy.end());
  for (const auto& piece : t.pieces) {
    if (placed.count(piece)) continue;
    auto c = component(t, relevant, piece, cantor_rule);
    placed.insert(c.begin(), c.end());
    others.push_back(std::move(c));
  }

  const auto pos = [&](const std::string& p) {
    return std::find(t.pieces.begin(), t.pieces.end(), p) - t.pieces.begin();
  };
  const bool x_first = pos(px) < pos(py);
  auto& first = x_first ? cx : cy;
  auto& second = x_first ? cy : cx;
  for (auto* side : {&first, &second}) {
    if (side_meets(t, *side, relevant)) continue;
    for (auto& c : others) {
      if (!c.empty() && side_meets(t, c, relevant)) {
        side->insert(c.begin(), c.end());
        c.clear();
        break;
      }
    }
  }
  for (const auto& c : others) first.insert(c.begin(), c.end());
  if (!side_meets(t, cx, relevant) || !side_meets(t, cy, relevant)) return std::nullopt;
  return Partition{std::move(cx), std::move(cy)};
}

std::set<std::string> nonplanar_ids(const EndClassTable& t) {
  std::set<std::string> out;
  for (const auto& c : t.classes) {
    if (c.nonplanar) out.insert(c.id);
  }
  return out;
}

std::optional<Partition> genus_partition(const EndClassTable& t, const std::string& px,
                                         const std::string& py, bool cantor_rule) {
  require_piece(t, px);
  require_piece(t, py);
  return split_pieces(t, nonplanar_ids(t), px, py, cantor_rule);
}

std::optional<Partition> class_partition(const EndClassTable& t, const std::string& z,
                                         const std::string& px, const std::string& py,
                                         bool cantor_rule) {
  require_piece(t, px);
  require_piece(t, py);
  const auto* c = t.find(z);
  if (!c) throw std::invalid_argument("unknown class '" + z + "'");
  if (!c->card.is_countable()) return std::nullopt;
  return split_pieces(t, accumulation_closure(t, z), px, py, cantor_rule);
}

ExistenceVerdict existence(const EndClassTable& t, bool cantor_rule) {
  for (const auto& px : t.pieces) {
    for (const auto& py : t.pieces) {
      if (px == py) continue;
      if (auto p = genus_partition(t, px, py, cantor_rule)) {
        return {true, Witness{Mode::Genus, "", px, py, std::move(*p)}};
      }
    }
  }
  for (const auto& c : t.classes) {
    if (!c.card.is_countable()) continue;
    for (const auto& px : t.pieces) {
      for (const auto& py : t.pieces) {
        if (px == py) continue;
        if (auto p = class_partition(t, c.id, px, py, cantor_rule)) {
          return {true, Witness{Mode::Class, c.id, px, py, std::move(*p)}};
        }
      }
    }
  }
  return {};
}

ShiftVerdict classify(const EndClassTable& t, const ShiftDescriptor& s, bool cantor_rule) {
  ShiftVerdict v;
  const auto& px = s.x.piece;
  const auto& py = s.y.piece;
  if (s.block_genus.kind == GenusKind::Finite && s.block_genus.count >= 1) {
    const bool ends_nonplanar = t.find(s.x.class_id)->nonplanar && t.find(s.y.class_id)->nonplanar;
    if (ends_nonplanar) {
      if (auto p = genus_partition(t, px, py, cantor_rule)) {
        v.reasons.push_back(Witness{Mode::Genus, "", px, py, std::move(*p)});
      }
    }
  }
  for (const auto& bc : s.block_maximal_classes) {
    // Cantor-many maximal ends per block never give an essential shift.
    if (bc.multiplicity != Multiplicity::One) continue;
    const auto closure = accumulation_closure(t, bc.class_id);
    if (!closure.count(s.x.class_id) || !closure.count(s.y.class_id)) continue;
    if (auto p = class_partition(t, bc.class_id, px, py, cantor_rule)) {
      v.reasons.push_back(Witness{Mode::Class, bc.class_id, px, py, std::move(*p)});
    }
  }
  v.essential = !v.reasons.empty();
  return v;
}

}  // namespace

std::optional<Partition> genus_side_partition(const EndClassTable& t, const std::string& px,
                                              const std::string& py) {
  return genus_partition(t, px, py, true);
}

std::optional<Partition> class_side_partition(const EndClassTable& t, const std::string& z,
                                              const std::string& px, const std::string& py) {
  return class_partition(t, z, px, py, true);
}

ExistenceVerdict has_essential_shift(const EndClassTable& t) {
  auto v = existence(t, true);
  v.cantor_edge_decisive = existence(t, false).two_sided != v.two_sided;
  return v;
}

void validate_descriptor(const EndClassTable& t, const ShiftDescriptor& s) {
  for (const auto* e : {&s.x, &s.y}) {
    require_piece(t, e->piece);
    const auto* c = t.find(e->class_id);
    if (!c) throw std::invalid_argument("shift descriptor: unknown class '" + e->class_id + "'");
    if (!c->occurs_in(e->piece)) {
      throw std::invalid_argument("shift descriptor: class '" + e->class_id +
                                  "' does not occur in piece '" + e->piece + "'");
    }
  }
  if (s.x.piece == s.y.piece) {
    throw std::invalid_argument("shift descriptor: x and y lie in the same piece '" + s.x.piece +
                                "'; same-piece shifts are not decided");
  }
  if (s.block_genus.kind == GenusKind::Finite && s.block_genus.count < 1) {
    throw std::invalid_argument("shift descriptor: finite block genus must be at least 1");
  }
  for (const auto& bc : s.block_maximal_classes) {
    if (!t.find(bc.class_id)) {
      throw std::invalid_argument("shift descriptor: unknown block class '" + bc.class_id + "'");
    }
  }
}

ShiftVerdict classify_shift(const EndClassTable& t, const ShiftDescriptor& s) {
  validate_descriptor(t, s);
  auto v = classify(t, s, true);
  v.cantor_edge_decisive = classify(t, s, false).essential != v.essential;
  return v;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"shark_tank",  "jacobs_ladder",
                                              "loch_ness",   "cantor_tree",
                                              "blooming_cantor_tree", "spider"};
  return names;
}

EndClassTable compile_builtin(const std::string& name) {
  using P = Presence;
  EndClassTable t;
  if (name == "shark_tank") {
    // Two limit ends, each accumulated by one side's punctures.
    t.pieces = {"A", "B"};
    t.genus = Genus::zero();
    t.classes = {
        {"limit", Cardinality::countable(), false, {{"A", P::Maximal}, {"B", P::Maximal}}, {}},
        {"punctures", Cardinality::countable(), false,
         {{"A", P::Present}, {"B", P::Present}}, {"limit"}},
    };
  } else if (name == "jacobs_ladder") {
    t.pieces = {"A", "B"};
    t.genus = Genus::infinite();
    t.classes = {
        {"genus_end", Cardinality::countable(), true, {{"A", P::Maximal}, {"B", P::Maximal}}, {}},
    };
  } else if (name == "loch_ness") {
    t.pieces = {"A"};
    t.genus = Genus::infinite();
    t.classes = {
        {"end", Cardinality::countable(), true, {{"A", P::Maximal}}, {}},
    };
  } else if (name == "cantor_tree") {
    t.pieces = {"A", "B"};
    t.genus = Genus::zero();
    t.classes = {
        {"cantor_end", Cardinality::cantor(), false, {{"A", P::Maximal}, {"B", P::Maximal}}, {}},
    };
  } else if (name == "blooming_cantor_tree") {
    t.pieces = {"A", "B"};
    t.genus = Genus::infinite();
    t.classes = {
        {"cantor_end", Cardinality::cantor(), true, {{"A", P::Maximal}, {"B", P::Maximal}}, {}},
    };
  } else if (name == "spider") {
    // Nonplanar ends w shared non-maximally by both pieces tie them together.
    t.pieces = {"A", "B"};
    t.genus = Genus::infinite();
    t.classes = {
        {"limit", Cardinality::cantor(), true, {{"A", P::Maximal}, {"B", P::Maximal}}, {}},
        {"w", Cardinality::countable(), true, {{"A", P::Present}, {"B", P::Present}}, {"limit"}},
        {"punctures", Cardinality::countable(), false, {{"A", P::Present}, {"B", P::Present}},
         {"w", "limit"}},
        {"dust", Cardinality::cantor(), false, {{"A", P::Present}}, {"limit"}},
    };
  } else {
    throw std::invalid_argument("unknown builtin table '" + name + "'");
  }
  require_valid(t);
  return t;
}

}  // namespace bigmap::ends
