#pragma once

// Two-sidedness of end spaces and the essential-shift classifier.
//
// An EndClassTable is an asserted abstraction of (E, E^G): the pieces of the
// end space cut off by a finite-type subsurface L, the equivalence classes of
// ends, where each class occurs, and which classes accumulate onto which.
// The order on ends is input data, not computed.
//
// Both decision procedures build a graph on pieces. Two pieces are joined
// when a relevant class
//   (a) occurs non-maximally in both, or
//   (b) has Cantor cardinality and occurs (maximally or not) in both.
// A countable maximal class shared by two pieces does not join them; isolated
// maximal ends stay fixed. Two-sidedness is then
// reachability: the sides are unions of components, px's on one side and
// py's on the other, and each side must meet a relevant class.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bigmap::ends {

enum class GenusKind { Zero, Finite, Infinite };

struct Genus {
  GenusKind kind = GenusKind::Zero;
  std::int64_t count = 0;  // only for Finite, >= 1

  static Genus zero() { return {GenusKind::Zero, 0}; }
  static Genus finite(std::int64_t g) { return {GenusKind::Finite, g}; }
  static Genus infinite() { return {GenusKind::Infinite, 0}; }
  friend bool operator==(const Genus&, const Genus&) = default;
};

enum class CardKind { Finite, Countable, Cantor };

struct Cardinality {
  CardKind kind = CardKind::Countable;
  std::int64_t count = 0;  // only for Finite

  static Cardinality finite(std::int64_t n) { return {CardKind::Finite, n}; }
  static Cardinality countable() { return {CardKind::Countable, 0}; }
  static Cardinality cantor() { return {CardKind::Cantor, 0}; }
  bool is_countable() const noexcept { return kind != CardKind::Cantor; }
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

enum class Presence { Absent, Present, Maximal };

struct EndClass {
  std::string id;
  Cardinality card;
  bool nonplanar = false;
  /// Pieces not listed are Absent.
  std::map<std::string, Presence> presence;
  std::set<std::string> accumulates_to;

  Presence in(const std::string& piece) const;
  bool occurs_in(const std::string& piece) const { return in(piece) != Presence::Absent; }
  friend bool operator==(const EndClass&, const EndClass&) = default;
};

struct EndClassTable {
  std::vector<std::string> pieces;
  Genus genus;
  std::vector<EndClass> classes;

  const EndClass* find(const std::string& id) const;
  bool has_piece(const std::string& piece) const;
  friend bool operator==(const EndClassTable&, const EndClassTable&) = default;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_table(const EndClassTable& t);

/// Throws std::invalid_argument listing the violations if t is invalid.
void require_valid(const EndClassTable& t);

/// Classes reachable from z along accumulates_to; z itself only via a cycle.
/// Throws std::invalid_argument on an unknown id.
std::set<std::string> accumulation_closure(const EndClassTable& t, const std::string& z);

struct Partition {
  std::set<std::string> x;
  std::set<std::string> y;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Two-sidedness of E^G separating px from py, or nullopt.
std::optional<Partition> genus_side_partition(const EndClassTable& t, const std::string& px,
                                              const std::string& py);

/// Two-sidedness of Accu(z) separating px from py, or nullopt. Always
/// nullopt for a class of Cantor cardinality.
std::optional<Partition> class_side_partition(const EndClassTable& t, const std::string& z,
                                              const std::string& px, const std::string& py);

enum class Mode { Genus, Class };

struct Witness {
  Mode mode = Mode::Genus;
  std::string class_id;  // empty in genus mode
  std::string px, py;
  Partition partition;
};

struct ExistenceVerdict {
  bool two_sided = false;
  std::optional<Witness> witness;
  /// The verdict flips if Cantor-sharing edges (rule (b)) are dropped.
  bool cantor_edge_decisive = false;
};

/// Whether the surface carries an essential shift, i.e. whether E is two-sided.
ExistenceVerdict has_essential_shift(const EndClassTable& t);

struct EndRef {
  std::string piece;
  std::string class_id;
  friend bool operator==(const EndRef&, const EndRef&) = default;
};

enum class Multiplicity { One, Cantor };

struct BlockClass {
  std::string class_id;
  Multiplicity multiplicity = Multiplicity::One;
  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

/// A shift map h_sigma: the ends x, y its strip exits towards and the
/// content of each shifted block Sigma_i.
struct ShiftDescriptor {
  EndRef x;
  EndRef y;
  Genus block_genus;
  std::vector<BlockClass> block_maximal_classes;
  friend bool operator==(const ShiftDescriptor&, const ShiftDescriptor&) = default;
};

/// Throws std::invalid_argument if s refers to unknown entries, or x and y
/// share a piece.
void validate_descriptor(const EndClassTable& t, const ShiftDescriptor& s);

struct ShiftVerdict {
  bool essential = false;
  /// One per criterion that fires.
  std::vector<Witness> reasons;
  bool cantor_edge_decisive = false;
};

ShiftVerdict classify_shift(const EndClassTable& t, const ShiftDescriptor& s);

/// Names accepted by compile_builtin.
const std::vector<std::string>& builtin_names();

/// Curated tables: shark_tank, jacobs_ladder, loch_ness, cantor_tree,
/// blooming_cantor_tree, spider. Throws std::invalid_argument otherwise.
EndClassTable compile_builtin(const std::string& name);

std::string to_string(Mode m);

}  // namespace bigmap::ends
