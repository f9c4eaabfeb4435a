#include <catch2/catch.hpp>

#include "test_util.hpp"

using namespace compgraph;

TEST_CASE("DMT round trip over the embedded witnesses", "[io]") {
  for (WitnessId id : kAllWitnessIds) {
    const auto t = load_witness(id);
    const auto back = parse_dmt(emit_dmt(t));
    CHECK(back.d == t.d);
    CHECK(back.parts.sizes() == t.parts.sizes());
  }
}

TEST_CASE("DMT accepts comments and trailing whitespace", "[io]") {
  const std::string text =
      "# an orientation of K_{1,1}\n"
      "2 1 1   \n"
      "# matrix follows\n"
      "01\t\n"
      "00\n"
      "\n"
      "# trailing comment\n";
  const auto t = parse_dmt(text);
  CHECK(t.parts.sizes() == std::vector<int>{1, 1});
  CHECK(t.d.has_arc(0, 1));
  CHECK_FALSE(t.d.has_arc(1, 0));
}

TEST_CASE("DMT parse errors carry line context", "[io]") {
  CHECK_THROWS_AS(parse_dmt(std::string("")), ParseError);
  CHECK_THROWS_AS(parse_dmt(std::string("0\n")), ParseError);
  CHECK_THROWS_AS(parse_dmt(std::string("2 1\n")), ParseError);        // missing size
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 2\n01\n00\n")), ParseError);  // increasing sizes
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 1\n0\n00\n")), ParseError);   // short row
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 1\n0x\n00\n")), ParseError);  // bad char
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 1\n11\n00\n")), ParseError);  // diagonal entry
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 1\n01\n")), ParseError);      // too few rows
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 1\n01\n00\n00\n")), ParseError);  // extra row
  CHECK_THROWS_AS(parse_dmt(std::string("2 1 1 junk\n01\n00\n")), ParseError);
}

TEST_CASE("JSON round trip and errors", "[io]") {
  for (WitnessId id : {WitnessId::A4, WitnessId::A9, WitnessId::QR7}) {
    const auto t = load_witness(id);
    const auto back = from_json(to_json(t));
    CHECK(back.d == t.d);
    CHECK(back.parts.sizes() == t.parts.sizes());
  }
  CHECK_THROWS_AS(parse_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"sizes": [1,1], "arcs": [[0,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"sizes": [1,1], "arcs": [[0,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"sizes": [1,1], "arcs": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"sizes": "x", "arcs": []})"), ParseError);
}

TEST_CASE("format auto-detection", "[io]") {
  const auto t = load_witness(WitnessId::A6);
  CHECK(parse_auto(emit_dmt(t)).d == t.d);
  CHECK(parse_auto("  \n" + to_json(t).dump()).d == t.d);
}

TEST_CASE("DOT export lists every arc", "[io]") {
  const auto t = load_witness(WitnessId::QR7);
  const std::string dot = emit_dot(t);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == static_cast<std::size_t>(t.d.arc_count()));
  CHECK(dot.find("cluster_part0") != std::string::npos);
}

TEST_CASE("random tournaments survive a DMT round trip", "[io]") {
  std::mt19937_64 rng(g_test_seed + 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = testutil::random_tournament(rng, testutil::random_size_tuple(rng, 2, 14));
    const auto back = parse_dmt(emit_dmt(t));
    CHECK(back.d == t.d);
    CHECK(back.parts.sizes() == t.parts.sizes());
  }
}
