#include <catch2/catch.hpp>

#include "test_util.hpp"

using namespace compgraph;

TEST_CASE("every embedded construction validates and is complete", "[witnesses]") {
  for (WitnessId id : kAllWitnessIds) {
    INFO(witness_name(id));
    const auto t = load_witness(id);
    CHECK(t.parts.sizes() == witness_sizes(id));
    CHECK(validate(t).empty());
    CHECK(is_complete_competition(t));
  }
}

TEST_CASE("pairwise row inner products are positive", "[witnesses]") {
  for (WitnessId id : kAllWitnessIds) {
    INFO(witness_name(id));
    const auto t = load_witness(id);
    const int n = t.d.vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        CHECK(set_size(t.d.out_mask(i) & t.d.out_mask(j)) >= 1);
  }
}

TEST_CASE("stored matrix blocks are pinned", "[witnesses]") {
  const std::pair<WitnessId, std::uint64_t> pinned[] = {
      {WitnessId::A1, 10750493306688226020ull}, {WitnessId::A2, 4096504778737054745ull},
      {WitnessId::A3, 16515732486770031436ull}, {WitnessId::A4, 13116834883985658035ull},
      {WitnessId::A5, 18365562403007098490ull}, {WitnessId::A6, 15164344382591000299ull},
      {WitnessId::A7, 8030160910713232006ull},  {WitnessId::A8, 9152747807347787583ull},
      {WitnessId::A9, 17004039474679454993ull},
  };
  for (const auto& [id, checksum] : pinned) {
    INFO(witness_name(id));
    const auto text = witness_matrix_text(id);
    REQUIRE(text.has_value());
    CHECK(fnv1a64(*text) == checksum);
  }
  CHECK_FALSE(witness_matrix_text(WitnessId::QR7).has_value());
}

TEST_CASE("QR7 follows its circulant rule", "[witnesses]") {
  const auto t = load_witness(WitnessId::QR7);
  for (int v = 0; v < 7; ++v) {
    const VertexSet expected =
        vertex_bit((v + 1) % 7) | vertex_bit((v + 2) % 7) | vertex_bit((v + 4) % 7);
    CHECK(t.d.out_mask(v) == expected);
    CHECK(t.d.out_degree(v) == 3);
    CHECK(t.d.in_degree(v) == 3);
  }
}

TEST_CASE("witness names round trip", "[witnesses]") {
  for (WitnessId id : kAllWitnessIds) CHECK(witness_from_name(witness_name(id)) == id);
  CHECK_FALSE(witness_from_name("A10").has_value());
}

TEST_CASE("witnesses pass every applicable analysis condition", "[witnesses]") {
  for (WitnessId id : kAllWitnessIds) {
    const auto t = load_witness(id);
    for (const auto& cond : condition_report(t)) {
      INFO(witness_name(id) << " / " << condition_name(cond.id) << " " << cond.detail);
      CHECK((!cond.applicable || cond.pass));
    }
  }
}
