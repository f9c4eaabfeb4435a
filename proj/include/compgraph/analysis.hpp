#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compgraph/core.hpp"

namespace compgraph {

/// Necessary conditions for a multipartite tournament to have a complete
/// competition graph. Fixed ids so search pruning and reports can name the
/// rule that fired.
enum class Condition {
  SPREAD2,         // out-neighbors of every vertex meet >= 2 parts
  TWO_PART_2_2,    // out-set meeting exactly 2 parts has >= 2 in each
  OUTDEG3,         // every vertex has outdegree >= 3
  COUNT_BOUND,     // >= max{4n-|A|, 0} vertices of outdegree exactly 3
  CYCLE3,          // outdegree-3 out-sets form a directed 3-cycle
  SIZE1_PARTS,     // k in {4,5}: at most k-3 singleton parts
  THREE_PART_SUM,  // k in {4,5}: the 3 parts covering an outdegree-3 out-set sum to <= n-4
  N_LOWER_BOUND,   // k in {4,5,6} with an outdegree-3 vertex: n >= 9 (k=4: n >= 10)
  BALANCE_444,     // sizes (4,4,4): exactly 2 out and 2 in per other part
  DTILDE,          // k in {4,5,6}: 7-vertex configuration around each outdegree-3 vertex
};

inline constexpr std::array<Condition, 10> kAllConditions = {
    Condition::SPREAD2,      Condition::TWO_PART_2_2,   Condition::OUTDEG3,
    Condition::COUNT_BOUND,  Condition::CYCLE3,         Condition::SIZE1_PARTS,
    Condition::THREE_PART_SUM, Condition::N_LOWER_BOUND, Condition::BALANCE_444,
    Condition::DTILDE,
};

inline const char* condition_name(Condition c) {
  switch (c) {
    case Condition::SPREAD2: return "SPREAD2";
    case Condition::TWO_PART_2_2: return "TWO_PART_2_2";
    case Condition::OUTDEG3: return "OUTDEG3";
    case Condition::COUNT_BOUND: return "COUNT_BOUND";
    case Condition::CYCLE3: return "CYCLE3";
    case Condition::SIZE1_PARTS: return "SIZE1_PARTS";
    case Condition::THREE_PART_SUM: return "THREE_PART_SUM";
    case Condition::N_LOWER_BOUND: return "N_LOWER_BOUND";
    case Condition::BALANCE_444: return "BALANCE_444";
    case Condition::DTILDE: return "DTILDE";
  }
  return "?";
}

inline std::optional<Condition> condition_from_name(std::string_view name) {
  for (Condition c : kAllConditions)
    if (name == condition_name(c)) return c;
  return std::nullopt;
}

namespace detail {

inline void check_sizes(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("part sizes must be nonempty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("part sizes must be positive");
    if (i > 0 && sizes[i] > sizes[i - 1])
      throw std::invalid_argument("part sizes must be nonincreasing");
  }
}

/// Number of parts met by `s` and the sizes of the first two intersections.
struct PartSpan {
  int parts = 0;
  int first = 0;
  int second = 0;
};

inline PartSpan part_span(const PartiteStructure& parts, VertexSet s) {
  PartSpan r;
  while (s != 0) {
    const int p = parts.part_of(lowest_vertex(s));
    const int c = set_size(s & parts.part_mask(p));
    s &= ~parts.part_mask(p);
    ++r.parts;
    if (r.parts == 1)
      r.first = c;
    else if (r.parts == 2)
      r.second = c;
  }
  return r;
}

}  // namespace detail

/// Vertices whose out-neighbors are confined to fewer than two parts.
inline std::vector<int> check_spread2(const MultipartiteTournament& t) {
  std::vector<int> failing;
  for (int v = 0; v < t.d.vertex_count(); ++v)
    if (detail::part_span(t.parts, t.d.out_mask(v)).parts < 2) failing.push_back(v);
  return failing;
}

/// Vertices whose out-neighbors meet exactly two parts with fewer than two
/// out-neighbors in one of them. Vacuous for out-sets meeting >= 3 parts.
inline std::vector<int> check_two_part_2_2(const MultipartiteTournament& t) {
  std::vector<int> failing;
  for (int v = 0; v < t.d.vertex_count(); ++v) {
    const auto span = detail::part_span(t.parts, t.d.out_mask(v));
    if (span.parts == 2 && (span.first < 2 || span.second < 2)) failing.push_back(v);
  }
  return failing;
}

inline std::vector<int> check_outdeg3(const MultipartiteTournament& t) {
  std::vector<int> failing;
  for (int v = 0; v < t.d.vertex_count(); ++v)
    if (t.d.out_degree(v) < 3) failing.push_back(v);
  return failing;
}

namespace detail {

inline bool is_directed_3cycle(const Digraph& d, int a, int b, int c) {
  return (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a)) ||
         (d.has_arc(b, a) && d.has_arc(c, b) && d.has_arc(a, c));
}

}  // namespace detail

/// Outdegree-3 vertices whose three out-neighbors do not form a directed
/// 3-cycle. A directed 3-cycle forces the three into three distinct parts.
inline std::vector<int> check_cycle3(const MultipartiteTournament& t) {
  std::vector<int> failing;
  for (int v = 0; v < t.d.vertex_count(); ++v) {
    if (t.d.out_degree(v) != 3) continue;
    const auto trio = to_vector(t.d.out_mask(v));
    if (!detail::is_directed_3cycle(t.d, trio[0], trio[1], trio[2])) failing.push_back(v);
  }
  return failing;
}

struct CountBound {
  long long arc_count = 0;
  long long outdeg3_lower_bound = 0;  // max{4n - |A|, 0}
};

inline CountBound count_bound(const std::vector<int>& sizes) {
  detail::check_sizes(sizes);
  long long n = 0, sq = 0;
  for (int s : sizes) {
    n += s;
    sq += static_cast<long long>(s) * s;
  }
  CountBound r;
  r.arc_count = (n * n - sq) / 2;
  r.outdeg3_lower_bound = std::max(4 * n - r.arc_count, 0LL);
  return r;
}

struct Refutation {
  bool refuted = false;
  std::vector<std::pair<Condition, std::string>> reasons;
};

/// Pure counting refutation from the size tuple alone. Sound but incomplete;
/// "inconclusive" only means that these counting arguments do not settle it.
inline Refutation refute_by_counting(const std::vector<int>& sizes) {
  detail::check_sizes(sizes);
  Refutation r;
  const int k = static_cast<int>(sizes.size());
  long long n = 0;
  int singletons = 0;
  for (int s : sizes) {
    n += s;
    if (s == 1) ++singletons;
  }

  if (k == 2) {
    r.refuted = true;
    r.reasons.emplace_back(Condition::SPREAD2,
                           "with two parts every out-set lies inside one part");
    return r;
  }

  if ((k == 4 || k == 5) && singletons > k - 3) {
    r.refuted = true;
    r.reasons.emplace_back(Condition::SIZE1_PARTS,
                           std::to_string(singletons) + " singleton parts exceed the bound " +
                               std::to_string(k - 3) + " for k=" + std::to_string(k));
  }

  if (k >= 4 && k <= 6) {
    const auto cb = count_bound(sizes);
    if (4 * n > cb.arc_count) {
      const std::string forced = "4n=" + std::to_string(4 * n) + " > |A|=" +
                                 std::to_string(cb.arc_count) +
                                 " forces a vertex of outdegree 3";
      const long long need = (k == 4) ? 10 : 9;
      if (n < need) {
        r.refuted = true;
        r.reasons.emplace_back(Condition::COUNT_BOUND, forced);
        r.reasons.emplace_back(Condition::N_LOWER_BOUND,
                               "an outdegree-3 vertex requires n >= " + std::to_string(need) +
                                   " when k=" + std::to_string(k) + ", but n=" +
                                   std::to_string(n));
      } else if (k == 4 || k == 5) {
        // min over part triples = the three smallest sizes
        const long long triple = sizes[static_cast<std::size_t>(k - 1)] +
                                 sizes[static_cast<std::size_t>(k - 2)] +
                                 sizes[static_cast<std::size_t>(k - 3)];
        if (triple > n - 4) {
          r.refuted = true;
          r.reasons.emplace_back(Condition::COUNT_BOUND, forced);
          r.reasons.emplace_back(
              Condition::THREE_PART_SUM,
              "the three parts covering its out-set sum to >= " + std::to_string(triple) +
                  " > n-4 = " + std::to_string(n - 4));
        }
      }
    }
  }
  return r;
}

/// Degree balance on K_{4,4,4}: every vertex must have exactly 2 out- and 2
/// in-neighbors in each of the other two parts.
inline std::vector<int> check_balance_444(const MultipartiteTournament& t) {
  if (t.parts.sizes() != std::vector<int>{4, 4, 4})
    throw std::invalid_argument("balance check applies to orientations of K_{4,4,4} only");
  std::vector<int> failing;
  for (int v = 0; v < t.d.vertex_count(); ++v) {
    bool ok = true;
    for (int p = 0; p < 3; ++p) {
      if (p == t.parts.part_of(v)) continue;
      const VertexSet pm = t.parts.part_mask(p);
      if (set_size(t.d.out_mask(v) & pm) != 2 || set_size(t.d.in_mask(v) & pm) != 2) ok = false;
    }
    if (!ok) failing.push_back(v);
  }
  return failing;
}

/// Informational companion on K_{4,4,4}: a pair x, y in one part with the
/// same out-neighborhood inside another part, if there is one.
struct EqualOutPair {
  int x = -1, y = -1;
  int part = -1;        // the part x and y share
  int target_part = -1; // where the out-neighborhoods coincide
};

inline std::optional<EqualOutPair> equal_out_neighborhood_pair(const MultipartiteTournament& t) {
  if (t.parts.sizes() != std::vector<int>{4, 4, 4})
    throw std::invalid_argument("equal-out-pair applies to orientations of K_{4,4,4} only");
  for (int i = 0; i < 3; ++i) {
    for (int x = t.parts.part_begin(i); x < t.parts.part_end(i); ++x) {
      for (int y = x + 1; y < t.parts.part_end(i); ++y) {
        for (int j = 0; j < 3; ++j) {
          if (j == i) continue;
          const VertexSet pm = t.parts.part_mask(j);
          if ((t.d.out_mask(x) & pm) == (t.d.out_mask(y) & pm))
            return EqualOutPair{x, y, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

/// The 7-vertex configuration forced around an outdegree-3 vertex u when the
/// competition graph is complete and k is 4, 5 or 6:
///   u -> v1, v2, v3;  v1 -> v2 -> v3 -> v1;
///   v_i -> w_i and v_{i+1} -> w_i and w_i -> v_{i+2}   (indices mod 3),
/// with w1, w2, w3 pairwise distinct.
struct DtildeEmbedding {
  int u = -1;
  std::array<int, 3> v{};
  std::array<int, 3> w{};
};

inline std::optional<DtildeEmbedding> dtilde_embedding(const MultipartiteTournament& t, int u) {
  if (u < 0 || u >= t.d.vertex_count()) throw std::out_of_range("vertex index out of range");
  if (t.d.out_degree(u) != 3)
    throw std::invalid_argument("dtilde_embedding requires a vertex of outdegree 3");
  const VertexSet triple = t.d.out_mask(u);
  const auto trio = to_vector(triple);

  std::array<int, 3> v{};
  if (t.d.has_arc(trio[0], trio[1]) && t.d.has_arc(trio[1], trio[2]) &&
      t.d.has_arc(trio[2], trio[0])) {
    v = {trio[0], trio[1], trio[2]};
  } else if (t.d.has_arc(trio[0], trio[2]) && t.d.has_arc(trio[2], trio[1]) &&
             t.d.has_arc(trio[1], trio[0])) {
    v = {trio[0], trio[2], trio[1]};
  } else {
    return std::nullopt;  // out-set is not a directed 3-cycle
  }

  // w_i: common out-neighbor of v_i, v_{i+1} that also beats v_{i+2}.
  std::array<VertexSet, 3> cand{};
  const VertexSet forbidden = triple | vertex_bit(u);
  for (int i = 0; i < 3; ++i) {
    cand[static_cast<std::size_t>(i)] = t.d.out_mask(v[static_cast<std::size_t>(i)]) &
                                        t.d.out_mask(v[static_cast<std::size_t>((i + 1) % 3)]) &
                                        t.d.in_mask(v[static_cast<std::size_t>((i + 2) % 3)]) &
                                        ~forbidden;
  }
  // lexicographically least (w1, w2, w3) with all three distinct
  for (int w1 = 0; w1 < t.d.vertex_count(); ++w1) {
    if (!contains(cand[0], w1)) continue;
    for (int w2 = 0; w2 < t.d.vertex_count(); ++w2) {
      if (w2 == w1 || !contains(cand[1], w2)) continue;
      for (int w3 = 0; w3 < t.d.vertex_count(); ++w3) {
        if (w3 == w1 || w3 == w2 || !contains(cand[2], w3)) continue;
        return DtildeEmbedding{u, v, {w1, w2, w3}};
      }
    }
  }
  return std::nullopt;
}

struct ConditionResult {
  Condition id = Condition::SPREAD2;
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

/// Evaluates every condition on a concrete tournament; inapplicable ones are
/// reported as such rather than silently passed.
inline std::vector<ConditionResult> condition_report(const MultipartiteTournament& t) {
  std::vector<ConditionResult> report;
  const int n = t.d.vertex_count();
  const int k = t.parts.part_count();

  auto vertex_list = [](const std::vector<int>& vs) {
    std::string s = "vertices";
    for (int v : vs) s += " " + std::to_string(v);
    return s;
  };
  auto per_vertex = [&](Condition id, const std::vector<int>& failing) {
    report.push_back({id, true, failing.empty(),
                      failing.empty() ? "" : vertex_list(failing)});
  };

  per_vertex(Condition::SPREAD2, check_spread2(t));
  per_vertex(Condition::TWO_PART_2_2, check_two_part_2_2(t));
  per_vertex(Condition::OUTDEG3, check_outdeg3(t));

  const auto cb = count_bound(t.parts.sizes());
  int outdeg3 = 0;
  for (int v = 0; v < n; ++v)
    if (t.d.out_degree(v) == 3) ++outdeg3;
  report.push_back({Condition::COUNT_BOUND, true, outdeg3 >= cb.outdeg3_lower_bound,
                    std::to_string(outdeg3) + " outdegree-3 vertices, bound " +
                        std::to_string(cb.outdeg3_lower_bound)});

  per_vertex(Condition::CYCLE3, check_cycle3(t));

  {
    ConditionResult r;
    r.id = Condition::SIZE1_PARTS;
    if (k == 4 || k == 5) {
      int singletons = 0;
      for (int s : t.parts.sizes())
        if (s == 1) ++singletons;
      r.pass = singletons <= k - 3;
      r.detail = std::to_string(singletons) + " singleton parts, bound " + std::to_string(k - 3);
    } else {
      r.applicable = false;
    }
    report.push_back(std::move(r));
  }

  {
    ConditionResult r;
    r.id = Condition::THREE_PART_SUM;
    r.applicable = (k == 4 || k == 5) && outdeg3 > 0;
    if (r.applicable) {
      for (int v = 0; v < n && r.pass; ++v) {
        if (t.d.out_degree(v) != 3) continue;
        const auto span = detail::part_span(t.parts, t.d.out_mask(v));
        if (span.parts != 3) continue;  // CYCLE3 already failed for v
        long long sum = 0;
        for_each_vertex(t.d.out_mask(v), [&](int w) {
          // each out-neighbor is in a distinct part here
          sum += t.parts.size_of(t.parts.part_of(w));
        });
        if (sum > n - 4) {
          r.pass = false;
          r.detail = "vertex " + std::to_string(v) + ": covering parts sum to " +
                     std::to_string(sum) + " > n-4 = " + std::to_string(n - 4);
        }
      }
    }
    report.push_back(std::move(r));
  }

  {
    ConditionResult r;
    r.id = Condition::N_LOWER_BOUND;
    r.applicable = k >= 4 && k <= 6 && outdeg3 > 0;
    if (r.applicable) {
      const int need = (k == 4) ? 10 : 9;
      r.pass = n >= need;
      r.detail = "n=" + std::to_string(n) + ", required >= " + std::to_string(need);
    }
    report.push_back(std::move(r));
  }

  {
    ConditionResult r;
    r.id = Condition::BALANCE_444;
    r.applicable = t.parts.sizes() == std::vector<int>{4, 4, 4};
    if (r.applicable) {
      const auto failing = check_balance_444(t);
      r.pass = failing.empty();
      if (!r.pass) r.detail = vertex_list(failing);
    }
    report.push_back(std::move(r));
  }

  {
    ConditionResult r;
    r.id = Condition::DTILDE;
    r.applicable = k >= 4 && k <= 6 && outdeg3 > 0;
    if (r.applicable) {
      for (int v = 0; v < n && r.pass; ++v) {
        if (t.d.out_degree(v) != 3) continue;
        if (!dtilde_embedding(t, v)) {
          r.pass = false;
          r.detail = "no embedding around vertex " + std::to_string(v);
        }
      }
    }
    report.push_back(std::move(r));
  }

  return report;
}

}  // namespace compgraph
