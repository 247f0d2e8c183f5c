#include <doctest.h>

#include <random>

#include "bigmap/json_io.hpp"
#include "bigmap/repro.hpp"

using namespace bigmap;
using io::json;

namespace {

template <typename T, typename Load>
void round_trip(const T& value, Load load) {
  const auto text = io::to_json(value).dump();
  CHECK(load(io::parse_text(text)) == value);
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("binary sequences") {
  round_trip(BinarySeq{}, io::binary_seq_from_json);
  round_trip(BinarySeq{3, 5, 90}, io::binary_seq_from_json);
  const auto big = parse_binary_seq("3,123456789012345678901234567890");
  const auto j = io::to_json(big);
  CHECK(j["ones"][0] == 3);
  CHECK(j["ones"][1] == "123456789012345678901234567890");
  round_trip(big, io::binary_seq_from_json);
  CHECK(io::binary_seq_from_json(json::parse(R"({"ones": ["7", 9]})")) == BinarySeq{7, 9});
  CHECK_THROWS_AS(io::binary_seq_from_json(json::parse(R"({"ones": [5, 3]})")), io::FormatError);
  CHECK_THROWS_AS(io::binary_seq_from_json(json::parse(R"({"ones": [0]})")), io::FormatError);
  CHECK_THROWS_AS(io::binary_seq_from_json(json::parse(R"({"one": []})")), io::FormatError);
}

TEST_CASE("end permutations and words") {
  std::mt19937_64 rng(repro::seed_from_env() + 14);
  for (int k = 0; k < 200; ++k) {
    const auto p = repro::random_end_perm(rng, 8);
    round_trip(p, io::end_perm_from_json);
    round_trip(witness_factorization(p), io::gen_word_from_json);
  }
  round_trip(EndPerm{}, io::end_perm_from_json);
  const auto swap = io::end_perm_from_json(
      json::parse(R"({"offset": 0, "window": [1, 2], "images": {"1": 2, "2": 1}})"));
  CHECK(swap == frac_twist(1, 2));
  const auto msg = error_of([] {
    io::end_perm_from_json(
        json::parse(R"({"offset": 0, "window": [1, 2], "images": {"1": 1, "2": 1}})"));
  });
  CHECK(msg.find("EndPerm") != std::string::npos);
  CHECK_THROWS_AS(io::gen_word_from_json(json::parse(R"([{"shift": 2}])")), io::FormatError);
  CHECK_THROWS_AS(
      io::gen_word_from_json(json::parse(
          R"([{"nu": {"offset": 0, "window": [0, 1], "images": {"0": 1, "1": 0}}}])")),
      io::FormatError);
}

TEST_CASE("graded automorphisms") {
  std::mt19937_64 rng(repro::seed_from_env() + 15);
  for (int k = 0; k < 200; ++k) round_trip(repro::random_graded_aut(rng), io::graded_aut_from_json);
  round_trip(GradedAut(3), io::graded_aut_from_json);
  CHECK_THROWS_AS(io::graded_aut_from_json(json::parse(
                      R"({"offset": 0, "block_dim": 1, "window": [0, 0], "matrix": [[0]]})")),
                  io::FormatError);
  CHECK_THROWS_AS(io::graded_aut_from_json(json::parse(
                      R"({"offset": 0, "block_dim": 1, "window": [0, 0], "matrix": [[2]]})")),
                  io::FormatError);
}

TEST_CASE("end class tables and descriptors") {
  for (const auto& name : ends::builtin_names()) {
    round_trip(ends::compile_builtin(name), io::table_from_json);
  }
  ends::ShiftDescriptor s{{"A", "limit"},
                          {"B", "limit"},
                          ends::Genus::finite(3),
                          {{"punctures", ends::Multiplicity::One},
                           {"limit", ends::Multiplicity::Cantor}}};
  round_trip(s, io::descriptor_from_json);

  const auto msg = error_of([] {
    io::table_from_json(json::parse(
        R"({"pieces": ["A"], "genus": "zero", "classes": [{"id": "x", "card": "lots"}]})"));
  });
  CHECK(msg.find("classes[0].card") != std::string::npos);
  CHECK(io::table_from_json(json::parse(R"({"pieces": ["A"], "genus": "finite:2", "classes": []})"))
            .genus == ends::Genus::finite(2));
}

TEST_CASE("malformed text reports its location") {
  const auto msg = error_of([] { io::parse_text("{\"ones\": [1, 2", "doc.json"); });
  CHECK(msg.find("doc.json") != std::string::npos);
  CHECK(msg.find("byte") != std::string::npos);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), io::FormatError);
}

TEST_CASE("verdicts serialize their witnesses") {
  const auto v = ends::has_essential_shift(ends::compile_builtin("shark_tank"));
  const auto j = io::to_json(v);
  CHECK(j["two_sided"] == true);
  CHECK(j["witness"]["mode"] == "class");
  CHECK(j["witness"]["class"] == "punctures");
  CHECK(j["witness"]["X"] == json::array({"A"}));
  CHECK(j["witness"]["Y"] == json::array({"B"}));
  CHECK(j["cantor_edge_decisive"] == false);
}
