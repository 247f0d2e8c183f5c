#pragma once

// JSON forms of every value the library exchanges.
//
//   BinarySeq       {"ones": [i1, i2, ...]}  strictly increasing positive
//                   integers; indices beyond 64 bits are written as decimal
//                   strings and both spellings are accepted
//   EndPerm         {"offset": t, "window": [lo, hi], "images": {"i": j, ...}}
//                   window omitted when empty
//   GenWord         [{"nu": EndPerm} | {"shift": +-1}, ...]
//   GradedAut       {"offset": t, "block_dim": d, "window": [lo, hi],
//                    "matrix": [[0, 1, ...], ...]}
//   EndClassTable   {"pieces": [...], "genus": "zero"|"finite:g"|"infinite",
//                    "classes": [{"id", "card", "nonplanar", "presence", "accu"}]}
//   ShiftDescriptor {"x": {"piece", "class"}, "y": {...}, "block_genus": ...,
//                    "block_maximal_classes": [{"class", "multiplicity"}]}

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bigmap/end_perm.hpp"
#include "bigmap/endspace.hpp"
#include "bigmap/graded.hpp"
#include "bigmap/qinf.hpp"
#include "bigmap/shark.hpp"

namespace bigmap::io {

using nlohmann::json;

/// Malformed or ill-typed input. The message carries the location.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json parse_text(const std::string& text, const std::string& source = "<input>");
json read_file(const std::filesystem::path& path);

json to_json(const BinarySeq& a);
BinarySeq binary_seq_from_json(const json& j);

json to_json(const EndPerm& p);
EndPerm end_perm_from_json(const json& j);

json to_json(const GenWord& w);
GenWord gen_word_from_json(const json& j);

json to_json(const GradedAut& g);
GradedAut graded_aut_from_json(const json& j);

json to_json(const ends::EndClassTable& t);
ends::EndClassTable table_from_json(const json& j);

json to_json(const ends::ShiftDescriptor& s);
ends::ShiftDescriptor descriptor_from_json(const json& j);

json to_json(const ends::ValidationReport& r);
json to_json(const ends::Partition& p);
json to_json(const ends::Witness& w);
json to_json(const ends::ExistenceVerdict& v);
json to_json(const ends::ShiftVerdict& v);

}  // namespace bigmap::io
