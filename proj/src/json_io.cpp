#include "bigmap/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bigmap::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

bool as_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) bad(where, "expected a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

BlockRange as_range(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [lo, hi]");
  return BlockRange{as_int(j[0], where + "[0]"), as_int(j[1], where + "[1]")};
}

// "prefix:n" with n a positive integer.
std::int64_t tagged_count(const std::string& s, const std::string& prefix,
                          const std::string& where) {
  const auto digits = s.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 18) {
    bad(where, "bad count in \"" + s + "\"");
  }
  return std::stoll(digits);
}

std::string genus_text(const ends::Genus& g) {
  switch (g.kind) {
    case ends::GenusKind::Zero: return "zero";
    case ends::GenusKind::Finite: return "finite:" + std::to_string(g.count);
    case ends::GenusKind::Infinite: return "infinite";
  }
  return "zero";
}

ends::Genus genus_from(const json& j, const std::string& where) {
  const auto s = as_string(j, where);
  if (s == "zero") return ends::Genus::zero();
  if (s == "infinite") return ends::Genus::infinite();
  if (s.rfind("finite:", 0) == 0) return ends::Genus::finite(tagged_count(s, "finite:", where));
  bad(where, "unknown genus \"" + s + "\"");
}

std::string card_text(const ends::Cardinality& c) {
  switch (c.kind) {
    case ends::CardKind::Finite: return "finite:" + std::to_string(c.count);
    case ends::CardKind::Countable: return "countable";
    case ends::CardKind::Cantor: return "cantor";
  }
  return "countable";
}

ends::Cardinality card_from(const json& j, const std::string& where) {
  const auto s = as_string(j, where);
  if (s == "countable") return ends::Cardinality::countable();
  if (s == "cantor") return ends::Cardinality::cantor();
  if (s.rfind("finite:", 0) == 0) {
    return ends::Cardinality::finite(tagged_count(s, "finite:", where));
  }
  bad(where, "unknown cardinality \"" + s + "\"");
}

std::string presence_text(ends::Presence p) {
  switch (p) {
    case ends::Presence::Absent: return "absent";
    case ends::Presence::Present: return "present";
    case ends::Presence::Maximal: return "maximal";
  }
  return "absent";
}

ends::Presence presence_from(const json& j, const std::string& where) {
  const auto s = as_string(j, where);
  if (s == "absent") return ends::Presence::Absent;
  if (s == "present") return ends::Presence::Present;
  if (s == "maximal") return ends::Presence::Maximal;
  bad(where, "unknown presence \"" + s + "\"");
}

json set_json(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path.string());
}

// ---- BinarySeq ----

json to_json(const BinarySeq& a) {
  json ones = json::array();
  for (const auto& i : a.ones()) {
    if (i <= std::numeric_limits<std::uint64_t>::max()) {
      ones.push_back(static_cast<std::uint64_t>(i));
    } else {
      ones.push_back(i.str());
    }
  }
  return json{{"ones", ones}};
}

BinarySeq binary_seq_from_json(const json& j) {
  const auto& ones = as_array(field(j, "ones", "BinarySeq"), "BinarySeq.ones");
  std::vector<BigIndex> out;
  for (std::size_t k = 0; k < ones.size(); ++k) {
    const auto where = "BinarySeq.ones[" + std::to_string(k) + "]";
    BigIndex v;
    if (ones[k].is_number_unsigned()) {
      v = ones[k].get<std::uint64_t>();
    } else if (ones[k].is_number_integer()) {
      v = ones[k].get<std::int64_t>();
    } else if (ones[k].is_string()) {
      const auto s = ones[k].get<std::string>();
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        bad(where, "expected a positive integer");
      }
      v = BigIndex(s);
    } else {
      bad(where, "expected a positive integer");
    }
    if (v < 1) bad(where, "index must be positive");
    if (!out.empty() && v <= out.back()) bad(where, "indices must be strictly increasing");
    out.push_back(std::move(v));
  }
  return BinarySeq(std::move(out));
}

// ---- EndPerm ----

json to_json(const EndPerm& p) {
  json j{{"offset", p.offset()}};
  json images = json::object();
  if (!p.window_empty()) {
    j["window"] = {p.lo(), p.hi()};
    for (std::int64_t i = p.lo(); i <= p.hi(); ++i) images[std::to_string(i)] = p(i);
  }
  j["images"] = images;
  return j;
}

EndPerm end_perm_from_json(const json& j) {
  const auto offset = as_int(field(j, "offset", "EndPerm"), "EndPerm.offset");
  const auto w = j.find("window");
  const auto img = j.find("images");
  if (w == j.end()) {
    if (img != j.end() && !(img->is_object() && img->empty())) {
      bad("EndPerm", "images given without a window");
    }
    return EndPerm::translation(offset);
  }
  const auto range = as_range(*w, "EndPerm.window");
  if (img == j.end() || !img->is_object()) bad("EndPerm.images", "expected an object");
  std::map<std::int64_t, std::int64_t> images;
  for (const auto& [key, value] : img->items()) {
    std::size_t used = 0;
    std::int64_t i = 0;
    try {
      i = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) bad("EndPerm.images", "key \"" + key + "\" is not an integer");
    images[i] = as_int(value, "EndPerm.images[\"" + key + "\"]");
  }
  try {
    return EndPerm::from_map(offset, range.lo, range.hi, images);
  } catch (const std::invalid_argument& e) {
    bad("EndPerm", e.what());
  }
}

// ---- GenWord ----

json to_json(const GenWord& w) {
  json out = json::array();
  for (const auto& l : w.letters()) {
    if (const auto* nu = std::get_if<NuLetter>(&l)) {
      out.push_back(json{{"nu", to_json(nu->perm)}});
    } else {
      out.push_back(json{{"shift", std::get<ShiftLetter>(l).sign}});
    }
  }
  return out;
}

GenWord gen_word_from_json(const json& j) {
  const auto& arr = as_array(j, "GenWord");
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto where = "GenWord[" + std::to_string(k) + "]";
    const auto& item = arr[k];
    if (!item.is_object() || item.size() != 1) bad(where, "expected {\"nu\": ...} or {\"shift\": +-1}");
    if (item.contains("nu")) {
      letters.emplace_back(NuLetter{end_perm_from_json(item["nu"])});
    } else if (item.contains("shift")) {
      const auto s = as_int(item["shift"], where + ".shift");
      if (s != 1 && s != -1) bad(where, "shift must be +1 or -1");
      letters.emplace_back(ShiftLetter{static_cast<int>(s)});
    } else {
      bad(where, "expected {\"nu\": ...} or {\"shift\": +-1}");
    }
  }
  try {
    return GenWord(std::move(letters));
  } catch (const std::invalid_argument& e) {
    bad("GenWord", e.what());
  }
}

// ---- GradedAut ----

json to_json(const GradedAut& g) {
  json j{{"offset", g.offset()}, {"block_dim", g.block_dim()}};
  json rows = json::array();
  if (!g.window().empty()) {
    j["window"] = {g.window().lo, g.window().hi};
    for (const auto& r : g.matrix()) {
      json row = json::array();
      for (std::size_t c = 0; c < r.size(); ++c) row.push_back(r.get(c) ? 1 : 0);
      rows.push_back(row);
    }
  }
  j["matrix"] = rows;
  return j;
}

GradedAut graded_aut_from_json(const json& j) {
  const auto offset = as_int(field(j, "offset", "GradedAut"), "GradedAut.offset");
  const auto d = as_int(field(j, "block_dim", "GradedAut"), "GradedAut.block_dim");
  if (d < 1) bad("GradedAut.block_dim", "must be at least 1");
  BlockRange w;
  if (j.contains("window")) w = as_range(j["window"], "GradedAut.window");
  std::vector<gf2::Vector> rows;
  if (j.contains("matrix")) {
    const auto& m = as_array(j["matrix"], "GradedAut.matrix");
    for (std::size_t r = 0; r < m.size(); ++r) {
      const auto where = "GradedAut.matrix[" + std::to_string(r) + "]";
      const auto& row = as_array(m[r], where);
      gf2::Vector v(row.size());
      for (std::size_t c = 0; c < row.size(); ++c) {
        const auto bit = as_int(row[c], where + "[" + std::to_string(c) + "]");
        if (bit != 0 && bit != 1) bad(where, "entries must be 0 or 1");
        if (bit) v.set(c);
      }
      rows.push_back(std::move(v));
    }
  }
  try {
    return GradedAut(offset, static_cast<std::size_t>(d), w, std::move(rows));
  } catch (const std::invalid_argument& e) {
    bad("GradedAut", e.what());
  }
}

// ---- EndClassTable ----

json to_json(const ends::EndClassTable& t) {
  json classes = json::array();
  for (const auto& c : t.classes) {
    json presence = json::object();
    for (const auto& [piece, p] : c.presence) {
      if (p != ends::Presence::Absent) presence[piece] = presence_text(p);
    }
    classes.push_back(json{{"id", c.id},
                           {"card", card_text(c.card)},
                           {"nonplanar", c.nonplanar},
                           {"presence", presence},
                           {"accu", set_json(c.accumulates_to)}});
  }
  return json{{"pieces", t.pieces}, {"genus", genus_text(t.genus)}, {"classes", classes}};
}

ends::EndClassTable table_from_json(const json& j) {
  ends::EndClassTable t;
  const auto& pieces = as_array(field(j, "pieces", "EndClassTable"), "EndClassTable.pieces");
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    t.pieces.push_back(as_string(pieces[k], "EndClassTable.pieces[" + std::to_string(k) + "]"));
  }
  t.genus = genus_from(field(j, "genus", "EndClassTable"), "EndClassTable.genus");
  const auto& classes = as_array(field(j, "classes", "EndClassTable"), "EndClassTable.classes");
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto where = "EndClassTable.classes[" + std::to_string(k) + "]";
    const auto& cj = classes[k];
    ends::EndClass c;
    c.id = as_string(field(cj, "id", where), where + ".id");
    c.card = card_from(field(cj, "card", where), where + ".card");
    c.nonplanar = cj.contains("nonplanar") ? as_bool(cj["nonplanar"], where + ".nonplanar") : false;
    if (cj.contains("presence")) {
      const auto& pj = cj["presence"];
      if (!pj.is_object()) bad(where + ".presence", "expected an object");
      for (const auto& [piece, p] : pj.items()) {
        const auto pres = presence_from(p, where + ".presence." + piece);
        if (pres != ends::Presence::Absent) c.presence[piece] = pres;
      }
    }
    if (cj.contains("accu")) {
      const auto& aj = as_array(cj["accu"], where + ".accu");
      for (std::size_t a = 0; a < aj.size(); ++a) {
        c.accumulates_to.insert(as_string(aj[a], where + ".accu[" + std::to_string(a) + "]"));
      }
    }
    t.classes.push_back(std::move(c));
  }
  return t;
}

// ---- ShiftDescriptor ----

namespace {

json end_ref_json(const ends::EndRef& e) { return json{{"piece", e.piece}, {"class", e.class_id}}; }

ends::EndRef end_ref_from(const json& j, const std::string& where) {
  return {as_string(field(j, "piece", where), where + ".piece"),
          as_string(field(j, "class", where), where + ".class")};
}

}  // namespace

json to_json(const ends::ShiftDescriptor& s) {
  json blocks = json::array();
  for (const auto& b : s.block_maximal_classes) {
    blocks.push_back(json{{"class", b.class_id},
                          {"multiplicity",
                           b.multiplicity == ends::Multiplicity::One ? "one" : "cantor"}});
  }
  return json{{"x", end_ref_json(s.x)},
              {"y", end_ref_json(s.y)},
              {"block_genus", genus_text(s.block_genus)},
              {"block_maximal_classes", blocks}};
}

ends::ShiftDescriptor descriptor_from_json(const json& j) {
  ends::ShiftDescriptor s;
  s.x = end_ref_from(field(j, "x", "ShiftDescriptor"), "ShiftDescriptor.x");
  s.y = end_ref_from(field(j, "y", "ShiftDescriptor"), "ShiftDescriptor.y");
  s.block_genus = genus_from(field(j, "block_genus", "ShiftDescriptor"),
                             "ShiftDescriptor.block_genus");
  if (j.contains("block_maximal_classes")) {
    const auto& arr = as_array(j["block_maximal_classes"], "ShiftDescriptor.block_maximal_classes");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto where = "ShiftDescriptor.block_maximal_classes[" + std::to_string(k) + "]";
      ends::BlockClass b;
      b.class_id = as_string(field(arr[k], "class", where), where + ".class");
      const auto m = as_string(field(arr[k], "multiplicity", where), where + ".multiplicity");
      if (m == "one") {
        b.multiplicity = ends::Multiplicity::One;
      } else if (m == "cantor") {
        b.multiplicity = ends::Multiplicity::Cantor;
      } else {
        bad(where, "multiplicity must be \"one\" or \"cantor\"");
      }
      s.block_maximal_classes.push_back(std::move(b));
    }
  }
  return s;
}

// ---- verdicts ----

json to_json(const ends::ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(json{{"rule", x.rule}, {"detail", x.detail}});
  return json{{"ok", r.ok()}, {"violations", v}};
}

json to_json(const ends::Partition& p) { return json{{"X", set_json(p.x)}, {"Y", set_json(p.y)}}; }

json to_json(const ends::Witness& w) {
  json j{{"mode", ends::to_string(w.mode)}, {"px", w.px}, {"py", w.py},
         {"X", set_json(w.partition.x)}, {"Y", set_json(w.partition.y)}};
  if (w.mode == ends::Mode::Class) j["class"] = w.class_id;
  return j;
}

json to_json(const ends::ExistenceVerdict& v) {
  json j{{"two_sided", v.two_sided}, {"cantor_edge_decisive", v.cantor_edge_decisive}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const ends::ShiftVerdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) reasons.push_back(to_json(r));
  return json{{"essential", v.essential},
              {"reasons", reasons},
              {"cantor_edge_decisive", v.cantor_edge_decisive}};
}

}  // namespace bigmap::io
