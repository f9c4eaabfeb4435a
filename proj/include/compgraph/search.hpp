#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "compgraph/analysis.hpp"
#include "compgraph/core.hpp"
#include "compgraph/oracle.hpp"

namespace compgraph {

/// Pruning rules of the orientation search. The first four are the
/// per-vertex necessary conditions from the analysis module; PAIR_FEASIBLE
/// is the search-local closure rule (every vertex pair must keep at least
/// one candidate common out-neighbor among decided plus undecided arcs,
/// an undecided arc counting as available to both endpoints).
enum class PruneRule : int {
  Spread2 = 0,
  TwoPart22 = 1,
  Outdeg3 = 2,
  Cycle3 = 3,
  PairFeasible = 4,
};

inline constexpr int kPruneRuleCount = 5;
inline constexpr std::array<PruneRule, kPruneRuleCount> kAllPruneRules = {
    PruneRule::Spread2, PruneRule::TwoPart22, PruneRule::Outdeg3, PruneRule::Cycle3,
    PruneRule::PairFeasible,
};

inline const char* prune_rule_name(PruneRule r) {
  switch (r) {
    case PruneRule::Spread2: return "SPREAD2";
    case PruneRule::TwoPart22: return "TWO_PART_2_2";
    case PruneRule::Outdeg3: return "OUTDEG3";
    case PruneRule::Cycle3: return "CYCLE3";
    case PruneRule::PairFeasible: return "PAIR_FEASIBLE";
  }
  return "?";
}

inline std::optional<PruneRule> prune_rule_from_name(std::string_view name) {
  for (PruneRule r : kAllPruneRules)
    if (name == prune_rule_name(r)) return r;
  return std::nullopt;
}

struct SearchConfig {
  std::array<bool, kPruneRuleCount> prune{true, true, true, true, true};
  std::optional<std::uint64_t> max_nodes;
  int workers = 1;
  bool symmetry_fix = false;
  int max_total = 13;  // cap on the vertex count accepted by exhaustive_search

  static SearchConfig full_pruning() { return SearchConfig{}; }
  static SearchConfig no_pruning() {
    SearchConfig c;
    c.prune.fill(false);
    return c;
  }
  bool enabled(PruneRule r) const { return prune[static_cast<std::size_t>(r)]; }
  void enable(PruneRule r, bool on = true) { prune[static_cast<std::size_t>(r)] = on; }
};

enum class SearchResult { Witness, Exhausted, Inconclusive };

inline const char* search_result_name(SearchResult r) {
  switch (r) {
    case SearchResult::Witness: return "witness";
    case SearchResult::Exhausted: return "exhausted";
    case SearchResult::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SearchOutcome {
  SearchResult result = SearchResult::Exhausted;
  std::optional<MultipartiteTournament> witness;
  std::uint64_t nodes_explored = 0;
  std::array<std::uint64_t, kPruneRuleCount> prunes_by_rule{};
  double wall_seconds = 0.0;
  bool symmetry_reduced = false;

  std::uint64_t prunes(PruneRule r) const {
    return prunes_by_rule[static_cast<std::size_t>(r)];
  }
};

namespace detail {

/// Static data of one search instance. Vertex blocks are decided in index
/// order; block b owns the undecided arcs between b and all higher cross-part
/// vertices, so after block b the out-set of b is final and every arc among
/// vertices <= b is decided.
struct SearchProblem {
  int n = 0;
  int k = 0;
  int first_block = -1;  // lowest block with targets, -1 if there are no arcs
  std::array<VertexSet, kWordBits> cross{};    // per vertex: other-part vertices
  std::array<VertexSet, kWordBits> targets{};  // per block
  std::array<int, kWordBits> tcount{};
  std::array<std::array<std::int8_t, kWordBits>, kWordBits> tlist{};
  std::array<VertexSet, kWordBits + 1> high{};  // high[b] = vertices > b
  std::array<int, kWordBits> part_of{};
  std::vector<VertexSet> part_mask;  // per part
  std::vector<int> sizes;

  explicit SearchProblem(const PartiteStructure& parts) {
    n = parts.vertex_count();
    k = parts.part_count();
    sizes = parts.sizes();
    part_mask.resize(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) part_mask[static_cast<std::size_t>(p)] = parts.part_mask(p);
    for (int v = 0; v < n; ++v) {
      part_of[static_cast<std::size_t>(v)] = parts.part_of(v);
      cross[static_cast<std::size_t>(v)] = parts.cross_mask(v);
    }
    for (int b = 0; b <= n; ++b) high[static_cast<std::size_t>(b)] = range_mask(b + 1, n);
    for (int b = 0; b < n; ++b) {
      const VertexSet tm = cross[static_cast<std::size_t>(b)] & high[static_cast<std::size_t>(b)];
      targets[static_cast<std::size_t>(b)] = tm;
      int count = 0;
      for_each_vertex(tm, [&](int j) {
        tlist[static_cast<std::size_t>(b)][static_cast<std::size_t>(count++)] =
            static_cast<std::int8_t>(j);
      });
      tcount[static_cast<std::size_t>(b)] = count;
      if (count > 0 && first_block < 0) first_block = b;
    }
  }
};

struct SearchSync {
  std::atomic<std::uint64_t> next_subtree{0};
  std::atomic<std::uint64_t> best_subtree{~std::uint64_t{0}};
  std::atomic<std::uint64_t> nodes_shared{0};
  std::atomic<bool> budget_hit{false};
  std::vector<std::optional<std::vector<VertexSet>>> subtree_witness;
};

/// Runs the enabled rules on the partial orientation whose blocks 0..b are
/// assigned (out holds the decided out-sets); returns the index of the rule
/// that prunes, or -1. Exposed so tests can replay prefixes of witnesses.
inline int check_block(const SearchProblem& pb, const std::array<VertexSet, kWordBits>& out,
                       int b, const SearchConfig& cfg) {
  const VertexSet high = pb.high[static_cast<std::size_t>(b)];
  if (cfg.enabled(PruneRule::Outdeg3)) {
    if (set_size(out[static_cast<std::size_t>(b)]) < 3)
      return static_cast<int>(PruneRule::Outdeg3);
    for (int v = b + 1; v < pb.n; ++v) {
      if (set_size(out[static_cast<std::size_t>(v)]) +
              set_size(pb.cross[static_cast<std::size_t>(v)] & high) <
          3)
        return static_cast<int>(PruneRule::Outdeg3);
    }
  }
  if (cfg.enabled(PruneRule::Spread2) || cfg.enabled(PruneRule::TwoPart22)) {
    int span = 0, c1 = 0, c2 = 0;
    VertexSet rest = out[static_cast<std::size_t>(b)];
    while (rest != 0) {
      const VertexSet pm = pb.part_mask[static_cast<std::size_t>(
          pb.part_of[static_cast<std::size_t>(lowest_vertex(rest))])];
      const int c = set_size(rest & pm);
      rest &= ~pm;
      ++span;
      if (span == 1)
        c1 = c;
      else if (span == 2)
        c2 = c;
    }
    if (cfg.enabled(PruneRule::Spread2) && span < 2) return static_cast<int>(PruneRule::Spread2);
    if (cfg.enabled(PruneRule::TwoPart22) && span == 2 && (c1 < 2 || c2 < 2))
      return static_cast<int>(PruneRule::TwoPart22);
  }
  if (cfg.enabled(PruneRule::Cycle3)) {
    const VertexSet decided_low = all_below(b + 1);
    for (int u = 0; u <= b; ++u) {
      const VertexSet s = out[static_cast<std::size_t>(u)];
      if (set_size(s) != 3) continue;
      if ((s & ~std::bit_floor(s) & ~decided_low) != 0) continue;  // triple not decided yet
      const int a = std::countr_zero(s);
      const VertexSet s2 = s & (s - 1);
      const int c = std::countr_zero(s2);
      const int d = std::countr_zero(s2 & (s2 - 1));
      const VertexSet oa = out[static_cast<std::size_t>(a)];
      const VertexSet oc = out[static_cast<std::size_t>(c)];
      const VertexSet od = out[static_cast<std::size_t>(d)];
      const bool cyc = (contains(oa, c) && contains(oc, d) && contains(od, a)) ||
                       (contains(oc, a) && contains(od, c) && contains(oa, d));
      if (!cyc) return static_cast<int>(PruneRule::Cycle3);
    }
  }
  if (cfg.enabled(PruneRule::PairFeasible)) {
    std::array<VertexSet, kWordBits> poss;
    for (int v = 0; v <= b; ++v) poss[static_cast<std::size_t>(v)] = out[static_cast<std::size_t>(v)];
    for (int v = b + 1; v < pb.n; ++v)
      poss[static_cast<std::size_t>(v)] =
          out[static_cast<std::size_t>(v)] | (pb.cross[static_cast<std::size_t>(v)] & high);
    for (int u = 0; u < pb.n; ++u) {
      const VertexSet pu = poss[static_cast<std::size_t>(u)];
      for (int v = u + 1; v < pb.n; ++v) {
        if ((pu & poss[static_cast<std::size_t>(v)]) == 0)
          return static_cast<int>(PruneRule::PairFeasible);
      }
    }
  }
  return -1;
}

class SearchWorker {
 public:
  SearchWorker(const SearchProblem& pb, const SearchConfig& cfg, SearchSync& sync,
               std::uint64_t subtree_count, bool parallel)
      : pb_(pb), cfg_(cfg), sync_(sync), subtree_count_(subtree_count), parallel_(parallel) {}

  void run() {
    while (true) {
      const std::uint64_t idx = sync_.next_subtree.fetch_add(1, std::memory_order_relaxed);
      if (idx >= subtree_count_) break;
      if (sync_.budget_hit.load(std::memory_order_relaxed)) {
        inconclusive_ = true;
        break;
      }
      // a strictly lower subtree already holds the answer
      if (idx > sync_.best_subtree.load(std::memory_order_relaxed)) continue;
      subtree_ = idx;
      if (pb_.first_block < 0) {
        leaf();
      } else {
        if (cfg_.symmetry_fix && !root_canonical(static_cast<std::uint32_t>(idx))) continue;
        apply(pb_.first_block, static_cast<std::uint32_t>(idx));
        if (count_node()) {
          const int rule = checks_after_block(pb_.first_block);
          if (rule >= 0)
            ++prunes_[static_cast<std::size_t>(rule)];
          else
            dfs(pb_.first_block + 1);
        }
        undo(pb_.first_block);
      }
      if (found_) {
        std::uint64_t cur = sync_.best_subtree.load(std::memory_order_relaxed);
        while (idx < cur &&
               !sync_.best_subtree.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
        sync_.subtree_witness[static_cast<std::size_t>(idx)] = witness_masks_;
        found_ = false;
      }
      if (inconclusive_) break;
    }
    flush_nodes();
  }

  std::uint64_t nodes() const { return nodes_total_; }
  const std::array<std::uint64_t, kPruneRuleCount>& prunes() const { return prunes_; }
  bool inconclusive() const { return inconclusive_; }

 private:
  // returns false when the node budget is exhausted
  bool count_node() {
    ++nodes_total_;
    if (parallel_) {
      if (++nodes_unflushed_ >= 4096) flush_nodes();
      if (sync_.budget_hit.load(std::memory_order_relaxed)) {
        inconclusive_ = true;
        return false;
      }
    } else if (cfg_.max_nodes && nodes_total_ > *cfg_.max_nodes) {
      inconclusive_ = true;
      return false;
    }
    return true;
  }

  void flush_nodes() {
    if (!parallel_ || nodes_unflushed_ == 0) return;
    const std::uint64_t total =
        sync_.nodes_shared.fetch_add(nodes_unflushed_, std::memory_order_relaxed) +
        nodes_unflushed_;
    nodes_unflushed_ = 0;
    if (cfg_.max_nodes && total > *cfg_.max_nodes)
      sync_.budget_hit.store(true, std::memory_order_relaxed);
  }

  bool stop_requested() const {
    return parallel_ && subtree_ > sync_.best_subtree.load(std::memory_order_relaxed);
  }

  void apply(int b, std::uint32_t t) {
    const auto& tl = pb_.tlist[static_cast<std::size_t>(b)];
    const int m = pb_.tcount[static_cast<std::size_t>(b)];
    VertexSet outm = 0;
    for (int i = 0; i < m; ++i) {
      const int j = tl[static_cast<std::size_t>(i)];
      if ((t >> i) & 1u)
        out_[static_cast<std::size_t>(j)] |= vertex_bit(b);  // arc j -> b
      else
        outm |= vertex_bit(j);  // arc b -> j
    }
    out_[static_cast<std::size_t>(b)] |= outm;
  }

  void undo(int b) {
    const VertexSet tm = pb_.targets[static_cast<std::size_t>(b)];
    out_[static_cast<std::size_t>(b)] &= ~tm;
    const VertexSet clear = ~vertex_bit(b);
    for_each_vertex(tm, [&](int j) { out_[static_cast<std::size_t>(j)] &= clear; });
  }

  /// Symmetry reduction for the root block only: vertex 0's out-arcs into
  /// each other part must form a prefix of that part, and among consecutive
  /// equal-size parts the out-counts must be nonincreasing. Any orientation
  /// can be relabeled into this form by permuting vertices within parts and
  /// swapping equal-size parts, so restricting the root keeps existence.
  bool root_canonical(std::uint32_t t) const {
    const int b = pb_.first_block;
    const auto& tl = pb_.tlist[static_cast<std::size_t>(b)];
    const int m = pb_.tcount[static_cast<std::size_t>(b)];
    VertexSet o = 0;
    for (int i = 0; i < m; ++i)
      if (((t >> i) & 1u) == 0) o |= vertex_bit(tl[static_cast<std::size_t>(i)]);
    int prev_size = -1, prev_count = -1;
    for (int p = 0; p < pb_.k; ++p) {
      const VertexSet pm = pb_.part_mask[static_cast<std::size_t>(p)];
      if ((pm & pb_.targets[static_cast<std::size_t>(b)]) == 0) continue;  // the root's own part
      const VertexSet hits = o & pm;
      const int c = set_size(hits);
      const int lo = lowest_vertex(pm);
      if (hits != range_mask(lo, lo + c)) return false;  // not a prefix
      const int size = pb_.sizes[static_cast<std::size_t>(p)];
      if (size == prev_size && c > prev_count) return false;  // sort within equal sizes
      prev_size = size;
      prev_count = c;
    }
    return true;
  }

  int checks_after_block(int b) { return check_block(pb_, out_, b, cfg_); }

  void leaf() {
    for (int u = 0; u < pb_.n; ++u) {
      const VertexSet su = out_[static_cast<std::size_t>(u)];
      for (int v = u + 1; v < pb_.n; ++v)
        if ((su & out_[static_cast<std::size_t>(v)]) == 0) return;
    }
    witness_masks_.assign(out_.begin(), out_.begin() + pb_.n);
    found_ = true;
  }

  // returns false to unwind (witness found, abort, or budget)
  bool dfs(int b) {
    if (b == pb_.n) {
      leaf();
      return !found_;
    }
    const int m = pb_.tcount[static_cast<std::size_t>(b)];
    if (m == 0) {
      const int rule = checks_after_block(b);
      if (rule >= 0) {
        ++prunes_[static_cast<std::size_t>(rule)];
        return true;
      }
      return dfs(b + 1);
    }
    const std::uint32_t limit = std::uint32_t{1} << m;
    for (std::uint32_t t = 0; t < limit; ++t) {
      if (stop_requested()) return false;
      apply(b, t);
      if (!count_node()) {
        undo(b);
        return false;
      }
      const int rule = checks_after_block(b);
      if (rule >= 0) {
        ++prunes_[static_cast<std::size_t>(rule)];
      } else if (!dfs(b + 1)) {
        undo(b);
        return false;
      }
      undo(b);
    }
    return true;
  }

  const SearchProblem& pb_;
  const SearchConfig& cfg_;
  SearchSync& sync_;
  std::uint64_t subtree_count_;
  bool parallel_;

  std::array<VertexSet, kWordBits> out_{};
  std::uint64_t subtree_ = 0;
  std::uint64_t nodes_total_ = 0;
  std::uint64_t nodes_unflushed_ = 0;
  std::array<std::uint64_t, kPruneRuleCount> prunes_{};
  bool found_ = false;
  bool inconclusive_ = false;
  std::vector<VertexSet> witness_masks_;
};

}  // namespace detail

/// Depth-first search over all orientations of the complete multipartite
/// graph, vertex block by vertex block, out-arcs tried before in-arcs.
/// Returns the first witness in that deterministic order, or an exhaustion
/// certificate with node and prune counts. Budget exhaustion is reported as
/// a distinct inconclusive result, never as exhaustion.
inline SearchOutcome exhaustive_search(const std::vector<int>& sizes, const SearchConfig& config = {}) {
  const auto start = std::chrono::steady_clock::now();
  PartiteStructure parts(sizes);
  long long total = parts.vertex_count();
  if (total > config.max_total)
    throw std::invalid_argument("vertex total " + std::to_string(total) +
                                " exceeds the search cap " + std::to_string(config.max_total));
  detail::SearchProblem pb(parts);
  if (pb.first_block >= 0 && pb.tcount[static_cast<std::size_t>(pb.first_block)] > 26)
    throw std::invalid_argument("first vertex block is too wide to enumerate");

  const std::uint64_t subtree_count =
      pb.first_block < 0 ? 1
                         : (std::uint64_t{1} << pb.tcount[static_cast<std::size_t>(pb.first_block)]);
  detail::SearchSync sync;
  sync.subtree_witness.resize(subtree_count);

  const int workers = std::max(1, config.workers);
  const bool parallel = workers > 1;
  std::vector<detail::SearchWorker> states;
  states.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i)
    states.emplace_back(pb, config, sync, subtree_count, parallel);

  if (!parallel) {
    states[0].run();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(states.size());
    for (auto& st : states) threads.emplace_back([&st] { st.run(); });
    for (auto& th : threads) th.join();
  }

  SearchOutcome outcome;
  outcome.symmetry_reduced = config.symmetry_fix && pb.first_block >= 0;
  for (const auto& st : states) {
    outcome.nodes_explored += st.nodes();
    for (int r = 0; r < kPruneRuleCount; ++r)
      outcome.prunes_by_rule[static_cast<std::size_t>(r)] += st.prunes()[static_cast<std::size_t>(r)];
  }

  const std::uint64_t best = sync.best_subtree.load();
  if (best != ~std::uint64_t{0}) {
    outcome.result = SearchResult::Witness;
    MultipartiteTournament t{Digraph::from_out_masks(*sync.subtree_witness[static_cast<std::size_t>(best)]),
                             parts};
    detail::internal_check(validate(t).empty(), "search witness validity");
    detail::internal_check(is_complete_competition(t), "search witness completeness");
    outcome.witness = std::move(t);
  } else {
    bool inconclusive = sync.budget_hit.load();
    for (const auto& st : states) inconclusive = inconclusive || st.inconclusive();
    outcome.result = inconclusive ? SearchResult::Inconclusive : SearchResult::Exhausted;
  }
  outcome.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

/// Visits every orientation exactly once (no pruning) and returns the count,
/// which is always 2^(number of cross-part pairs). The visitor receives a
/// scratch digraph that is only valid during the call.
template <typename Visitor>
std::uint64_t enumerate_all(const std::vector<int>& sizes, Visitor&& visit) {
  PartiteStructure parts(sizes);
  const auto cb = count_bound(parts.sizes());
  if (cb.arc_count > 28)
    throw std::invalid_argument("enumerate_all is capped at 28 cross-part pairs");
  detail::SearchProblem pb(parts);

  std::array<VertexSet, kWordBits> out{};
  std::vector<VertexSet> masks(static_cast<std::size_t>(pb.n));
  std::uint64_t count = 0;

  auto rec = [&](auto&& self, int b) -> void {
    if (b == pb.n) {
      std::copy(out.begin(), out.begin() + pb.n, masks.begin());
      visit(static_cast<const Digraph&>(Digraph::from_out_masks(masks)));
      ++count;
      return;
    }
    const int m = pb.tcount[static_cast<std::size_t>(b)];
    const auto& tl = pb.tlist[static_cast<std::size_t>(b)];
    const std::uint32_t limit = std::uint32_t{1} << m;
    for (std::uint32_t t = 0; t < limit; ++t) {
      VertexSet outm = 0;
      for (int i = 0; i < m; ++i) {
        const int j = tl[static_cast<std::size_t>(i)];
        if ((t >> i) & 1u)
          out[static_cast<std::size_t>(j)] |= vertex_bit(b);
        else
          outm |= vertex_bit(j);
      }
      out[static_cast<std::size_t>(b)] |= outm;
      self(self, b + 1);
      out[static_cast<std::size_t>(b)] &= ~pb.targets[static_cast<std::size_t>(b)];
      for_each_vertex(pb.targets[static_cast<std::size_t>(b)],
                      [&](int j) { out[static_cast<std::size_t>(j)] &= ~vertex_bit(b); });
    }
  };
  rec(rec, 0);
  detail::internal_check(count == (std::uint64_t{1} << cb.arc_count),
                         "enumerate_all visits 2^|A| orientations");
  return count;
}

struct Refute444Result {
  int balanced_matrices = 0;  // 4x4 0/1 matrices with all row and column sums 2
  SearchOutcome outcome;
};

/// Settles K_{4,4,4} by exhausting the balanced candidate space: in any
/// orientation with a complete competition graph every vertex has exactly 2
/// out- and 2 in-neighbors in each other part, so each of the three
/// cross-part matrices has all line sums 2 and checking all B^3 combinations
/// of balanced matrices is a full refutation.
inline Refute444Result refute_444() {
  const auto start = std::chrono::steady_clock::now();
  Refute444Result res;

  // the 4-bit rows of weight 2
  std::array<int, 6> rows{};
  int nrows = 0;
  for (int r = 0; r < 16; ++r)
    if (std::popcount(static_cast<unsigned>(r)) == 2) rows[static_cast<std::size_t>(nrows++)] = r;

  struct Balanced {
    std::array<VertexSet, 4> fwd;  // out-arcs of row vertex i, as target-side bits 0..3
    std::array<VertexSet, 4> rev;  // out-arcs of column vertex j, as row-side bits 0..3
  };
  std::vector<Balanced> balanced;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d) {
          const std::array<int, 4> mat{rows[static_cast<std::size_t>(a)], rows[static_cast<std::size_t>(b)],
                                       rows[static_cast<std::size_t>(c)], rows[static_cast<std::size_t>(d)]};
          bool ok = true;
          for (int j = 0; j < 4 && ok; ++j) {
            int col = 0;
            for (int i = 0; i < 4; ++i) col += (mat[static_cast<std::size_t>(i)] >> j) & 1;
            ok = col == 2;
          }
          if (!ok) continue;
          Balanced bm{};
          for (int i = 0; i < 4; ++i)
            bm.fwd[static_cast<std::size_t>(i)] = static_cast<VertexSet>(mat[static_cast<std::size_t>(i)]);
          for (int j = 0; j < 4; ++j) {
            VertexSet s = 0;
            for (int i = 0; i < 4; ++i)
              if (((mat[static_cast<std::size_t>(i)] >> j) & 1) == 0) s |= vertex_bit(i);
            bm.rev[static_cast<std::size_t>(j)] = s;
          }
          balanced.push_back(bm);
        }
  res.balanced_matrices = static_cast<int>(balanced.size());

  PartiteStructure parts({4, 4, 4});
  std::array<VertexSet, 12> out{};
  std::uint64_t tried = 0;
  std::optional<std::vector<VertexSet>> witness;

  for (const auto& ab : balanced) {      // V1 -> V2
    for (const auto& ac : balanced) {    // V1 -> V3
      for (int i = 0; i < 4; ++i)
        out[static_cast<std::size_t>(i)] =
            (ab.fwd[static_cast<std::size_t>(i)] << 4) | (ac.fwd[static_cast<std::size_t>(i)] << 8);
      for (const auto& bc : balanced) {  // V2 -> V3
        ++tried;
        for (int i = 0; i < 4; ++i) {
          out[static_cast<std::size_t>(4 + i)] =
              ab.rev[static_cast<std::size_t>(i)] | (bc.fwd[static_cast<std::size_t>(i)] << 8);
          out[static_cast<std::size_t>(8 + i)] =
              ac.rev[static_cast<std::size_t>(i)] | (bc.rev[static_cast<std::size_t>(i)] << 4);
        }
        bool complete = true;
        for (int u = 0; u < 12 && complete; ++u) {
          const VertexSet su = out[static_cast<std::size_t>(u)];
          for (int v = u + 1; v < 12; ++v) {
            if ((su & out[static_cast<std::size_t>(v)]) == 0) {
              complete = false;
              break;
            }
          }
        }
        if (complete && !witness) witness.emplace(out.begin(), out.begin() + 12);
      }
    }
  }

  res.outcome.nodes_explored = tried;
  if (witness) {
    res.outcome.result = SearchResult::Witness;
    res.outcome.witness = MultipartiteTournament{Digraph::from_out_masks(*witness), parts};
  } else {
    res.outcome.result = SearchResult::Exhausted;
  }
  res.outcome.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

struct CrosscheckRow {
  std::vector<int> sizes;
  bool oracle_yes = false;
  SearchResult search = SearchResult::Exhausted;
  std::uint64_t nodes = 0;
};

struct CrosscheckReport {
  int max_sum = 0;
  std::vector<CrosscheckRow> rows;
  std::vector<std::size_t> disagreements;  // indices into rows

  std::vector<std::vector<int>> yes_tuples() const {
    std::vector<std::vector<int>> out;
    for (const auto& r : rows)
      if (r.search == SearchResult::Witness) out.push_back(r.sizes);
    return out;
  }
};

/// Compares the closed-form decision procedure against ground-truth search
/// for every size tuple with k >= 2 parts and total at most max_sum.
inline CrosscheckReport oracle_crosscheck(int max_sum, SearchConfig config = {}) {
  CrosscheckReport report;
  report.max_sum = max_sum;
  config.max_total = std::max(config.max_total, max_sum);
  for (const auto& sizes : size_tuples_up_to(max_sum, 2)) {
    if (sizes.size() < 2) continue;
    CrosscheckRow row;
    row.sizes = sizes;
    row.oracle_yes = exists_complete_orientation(sizes).exists;
    SearchOutcome out = exhaustive_search(sizes, config);
    row.search = out.result;
    row.nodes = out.nodes_explored;
    const bool agree = out.result != SearchResult::Inconclusive &&
                       row.oracle_yes == (out.result == SearchResult::Witness);
    report.rows.push_back(std::move(row));
    if (!agree) report.disagreements.push_back(report.rows.size() - 1);
  }
  return report;
}

}  // namespace compgraph
