#include <catch2/catch.hpp>

#include "test_util.hpp"

using namespace compgraph;

TEST_CASE("enumerate_all counts 2^|A| orientations", "[search]") {
  CHECK(enumerate_all({1, 1}, [](const Digraph&) {}) == 2);
  CHECK(enumerate_all({2, 1}, [](const Digraph&) {}) == 4);
  CHECK(enumerate_all({2, 2, 1}, [](const Digraph&) {}) == 256);

  // every visited orientation is a valid multipartite tournament
  PartiteStructure parts({2, 1});
  std::uint64_t valid = 0;
  enumerate_all({2, 1}, [&](const Digraph& d) {
    if (validate(MultipartiteTournament{d, parts}).empty()) ++valid;
  });
  CHECK(valid == 4);

  CHECK_THROWS_AS(enumerate_all({4, 4, 4}, [](const Digraph&) {}), std::invalid_argument);
}

TEST_CASE("three mutually adjacent singletons never compete", "[search]") {
  // plain enumeration ground truth: all 8 orientations of K_{1,1,1} fail
  std::uint64_t complete = 0;
  const std::uint64_t total =
      enumerate_all({1, 1, 1}, [&](const Digraph& d) { complete += is_complete_competition(d); });
  CHECK(total == 8);
  CHECK(complete == 0);

  CHECK(exhaustive_search({1, 1, 1}).result == SearchResult::Exhausted);
  CHECK(exhaustive_search({1, 1, 1}, SearchConfig::no_pruning()).result ==
        SearchResult::Exhausted);
}

TEST_CASE("search finds a witness for K_{2,2,2,2,1}", "[search]") {
  const auto out = exhaustive_search({2, 2, 2, 2, 1});
  REQUIRE(out.result == SearchResult::Witness);
  REQUIRE(out.witness.has_value());
  CHECK(validate(*out.witness).empty());
  CHECK(is_complete_competition(*out.witness));
  CHECK(out.witness->parts.sizes() == std::vector<int>{2, 2, 2, 2, 1});
}

TEST_CASE("single-worker runs are deterministic", "[search]") {
  const auto a = exhaustive_search({2, 2, 2, 1, 1});
  const auto b = exhaustive_search({2, 2, 2, 1, 1});
  CHECK(a.result == SearchResult::Exhausted);
  CHECK(a.result == b.result);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.prunes_by_rule == b.prunes_by_rule);

  const auto w1 = exhaustive_search({2, 2, 2, 2, 1});
  const auto w2 = exhaustive_search({2, 2, 2, 2, 1});
  REQUIRE(w1.witness.has_value());
  REQUIRE(w2.witness.has_value());
  CHECK(w1.witness->d == w2.witness->d);
  CHECK(w1.nodes_explored == w2.nodes_explored);
}

TEST_CASE("parallel searches agree with single-worker searches", "[search]") {
  SearchConfig two;
  two.workers = 2;

  const auto seq = exhaustive_search({2, 2, 2, 1, 1});
  const auto par = exhaustive_search({2, 2, 2, 1, 1}, two);
  CHECK(par.result == SearchResult::Exhausted);
  // full exhaustion explores the same tree regardless of the worker count
  CHECK(par.nodes_explored == seq.nodes_explored);

  const auto wseq = exhaustive_search({2, 2, 2, 2, 1});
  const auto wpar = exhaustive_search({2, 2, 2, 2, 1}, two);
  REQUIRE(wpar.result == SearchResult::Witness);
  // the witness is pinned to the lowest witness-bearing subtree
  CHECK(wpar.witness->d == wseq.witness->d);
}

TEST_CASE("node budgets yield a distinct inconclusive result", "[search]") {
  SearchConfig budget;
  budget.max_nodes = 1000;
  const auto out = exhaustive_search({2, 2, 2, 1, 1}, budget);
  CHECK(out.result == SearchResult::Inconclusive);
  CHECK_FALSE(out.witness.has_value());
  CHECK(out.nodes_explored <= 1001);

  SearchConfig par_budget = budget;
  par_budget.workers = 2;
  CHECK(exhaustive_search({2, 2, 2, 1, 1}, par_budget).result == SearchResult::Inconclusive);
}

TEST_CASE("each pruning rule alone preserves the verdict", "[search]") {
  const std::vector<std::vector<int>> tuples = {{2, 2, 1, 1}, {3, 2, 1}, {1, 1, 1, 1}};
  for (const auto& sizes : tuples) {
    const auto reference = exhaustive_search(sizes, SearchConfig::no_pruning());
    REQUIRE(reference.result == SearchResult::Exhausted);
    for (PruneRule rule : kAllPruneRules) {
      SearchConfig cfg = SearchConfig::no_pruning();
      cfg.enable(rule);
      INFO(testutil::tuple_str(sizes) << " with only " << prune_rule_name(rule));
      CHECK(exhaustive_search(sizes, cfg).result == SearchResult::Exhausted);
    }
  }
}

TEST_CASE("symmetry fixing keeps the verdict and shrinks the tree", "[search]") {
  SearchConfig sym;
  sym.symmetry_fix = true;

  const auto off = exhaustive_search({2, 2, 1, 1, 1, 1});
  const auto on = exhaustive_search({2, 2, 1, 1, 1, 1}, sym);
  CHECK(off.result == SearchResult::Exhausted);
  CHECK(on.result == SearchResult::Exhausted);
  CHECK(on.symmetry_reduced);
  CHECK(on.nodes_explored < off.nodes_explored);

  const auto witness = exhaustive_search({1, 1, 1, 1, 1, 1, 1}, sym);
  REQUIRE(witness.result == SearchResult::Witness);
  CHECK(is_complete_competition(*witness.witness));
}

TEST_CASE("search caps and degenerate inputs", "[search]") {
  CHECK_THROWS_AS(exhaustive_search({4, 4, 4, 4}), std::invalid_argument);  // over the cap
  CHECK_THROWS_AS(exhaustive_search({2, 3}), std::invalid_argument);

  // one part only: no arcs exist, so only the single vertex is complete
  CHECK(exhaustive_search({1}).result == SearchResult::Witness);
  CHECK(exhaustive_search({2}).result == SearchResult::Exhausted);
}

TEST_CASE("small crosschecks agree everywhere", "[search]") {
  const auto tiny = oracle_crosscheck(4);
  CHECK(tiny.disagreements.empty());
  CHECK(tiny.yes_tuples().empty());

  // at 7 vertices exactly one size tuple becomes admissible
  const auto rep = oracle_crosscheck(7);
  CHECK(rep.disagreements.empty());
  CHECK(rep.yes_tuples() == std::vector<std::vector<int>>{std::vector<int>(7, 1)});
}

TEST_CASE("no pruning rule fires along any witness prefix", "[search]") {
  // replay certification: decide every complete orientation of K_{1^7} block
  // by block and confirm that no rule would have cut its branch at any depth
  const std::vector<int> sizes(7, 1);
  const PartiteStructure parts(sizes);
  const detail::SearchProblem pb(parts);
  const SearchConfig cfg;  // every rule enabled
  std::uint64_t complete = 0;
  bool all_clear = true;
  enumerate_all(sizes, [&](const Digraph& d) {
    if (!is_complete_competition(d)) return;
    ++complete;
    std::array<VertexSet, kWordBits> out{};
    for (int b = 0; b < pb.n && all_clear; ++b) {
      for (int v = 0; v < pb.n; ++v) {
        // decided arcs after block b are exactly those with an endpoint <= b
        out[static_cast<std::size_t>(v)] =
            v <= b ? d.out_mask(v) : (d.out_mask(v) & all_below(b + 1));
      }
      all_clear = all_clear && detail::check_block(pb, out, b, cfg) == -1;
    }
  });
  CHECK(all_clear);
  CHECK(complete > 0);
}
