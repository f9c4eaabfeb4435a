#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compgraph/core.hpp"

namespace compgraph {

namespace detail {

/// Reorders an arbitrary (digraph, part-assignment) pair into the canonical
/// form used everywhere: parts in nonincreasing size order (stable), each
/// part a consecutive vertex range, vertices keeping their relative order
/// within a part. Empty part ids are dropped.
struct Canonicalized {
  MultipartiteTournament tournament;
  std::vector<int> old_to_new;
};

inline Canonicalized canonicalize(const Digraph& d, const std::vector<int>& part_of) {
  const int n = d.vertex_count();
  internal_check(static_cast<int>(part_of.size()) == n, "part assignment length");
  int max_part = -1;
  for (int p : part_of) max_part = std::max(max_part, p);

  std::vector<int> count(static_cast<std::size_t>(max_part + 1), 0);
  for (int p : part_of) ++count[static_cast<std::size_t>(p)];

  std::vector<int> order;  // old part ids, nonempty only
  for (int p = 0; p <= max_part; ++p)
    if (count[static_cast<std::size_t>(p)] > 0) order.push_back(p);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return count[static_cast<std::size_t>(a)] > count[static_cast<std::size_t>(b)];
  });

  std::vector<int> sizes;
  sizes.reserve(order.size());
  std::vector<int> new_start(static_cast<std::size_t>(max_part + 1), 0);
  int cursor = 0;
  for (int p : order) {
    sizes.push_back(count[static_cast<std::size_t>(p)]);
    new_start[static_cast<std::size_t>(p)] = cursor;
    cursor += count[static_cast<std::size_t>(p)];
  }

  std::vector<int> old_to_new(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    old_to_new[static_cast<std::size_t>(v)] = new_start[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])]++;

  Digraph nd(n);
  for (int u = 0; u < n; ++u) {
    for_each_vertex(d.out_mask(u), [&](int v) {
      nd.add_arc(old_to_new[static_cast<std::size_t>(u)], old_to_new[static_cast<std::size_t>(v)]);
    });
  }
  return Canonicalized{MultipartiteTournament{std::move(nd), PartiteStructure(std::move(sizes))},
                       std::move(old_to_new)};
}

inline void require_complete(const MultipartiteTournament& t, const char* op) {
  if (auto bad = first_noncompeting_pair(t)) {
    throw std::invalid_argument(std::string(op) +
                                " requires a complete competition graph; pair {" +
                                std::to_string(bad->first) + "," + std::to_string(bad->second) +
                                "} has no common out-neighbor");
  }
}

inline void assert_preserved(const MultipartiteTournament& t, const char* op) {
  internal_check(validate(t).empty(), op);
  internal_check(is_complete_competition(t), op);
}

}  // namespace detail

struct CloneResult {
  MultipartiteTournament tournament;
  std::vector<int> old_to_new;  // indexed by the input's vertex ids
  int new_vertex = -1;
};

/// Adds one vertex v modeled on `model`: v inherits the model's out-set, so
/// the new competition graph is again complete. target_part selects the part
/// v joins; nullopt appends a new singleton part. All arcs not fixed by the
/// model are oriented away from v, which keeps the construction deterministic
/// and can only add competition edges.
inline CloneResult add_clone_vertex(const MultipartiteTournament& t, int model,
                                    std::optional<int> target_part) {
  const int n = t.d.vertex_count();
  const int k = t.parts.part_count();
  if (n < 2) throw std::invalid_argument("add_clone_vertex requires at least two vertices");
  detail::require_complete(t, "add_clone_vertex");
  if (model < 0 || model >= n) throw std::out_of_range("model vertex out of range");
  if (target_part && (*target_part < 0 || *target_part >= k))
    throw std::invalid_argument("invalid part index");

  const int p = target_part ? *target_part : k;
  const int q = t.parts.part_of(model);
  const VertexSet pmask = p < k ? t.parts.part_mask(p) : 0;
  if (p != q && (t.d.out_mask(model) & pmask) != 0)
    throw std::invalid_argument(
        "model has out-neighbors inside the target part; the clone cannot inherit them");

  Digraph raw(n + 1);
  for (int u = 0; u < n; ++u)
    for_each_vertex(t.d.out_mask(u), [&](int v) { raw.add_arc(u, v); });

  const VertexSet qmask = t.parts.part_mask(q);
  for (int w = 0; w < n; ++w) {
    if (contains(pmask, w)) continue;  // same part as the clone: no arc
    if (p != q && contains(qmask, w)) {
      raw.add_arc(n, w);  // unconstrained, oriented away from the clone
    } else if (t.d.has_arc(model, w)) {
      raw.add_arc(n, w);
    } else {
      raw.add_arc(w, n);
    }
  }

  std::vector<int> part_of(static_cast<std::size_t>(n + 1));
  for (int v = 0; v < n; ++v) part_of[static_cast<std::size_t>(v)] = t.parts.part_of(v);
  part_of[static_cast<std::size_t>(n)] = p;

  auto canon = detail::canonicalize(raw, part_of);
  const int new_vertex = canon.old_to_new[static_cast<std::size_t>(n)];

  // The guarantee behind this operation: keeping all arcs and giving the new
  // vertex a superset of the model's out-set preserves completeness.
  const VertexSet model_out_mapped = [&] {
    VertexSet s = 0;
    for_each_vertex(t.d.out_mask(model), [&](int w) {
      s |= vertex_bit(canon.old_to_new[static_cast<std::size_t>(w)]);
    });
    return s;
  }();
  detail::internal_check(
      (model_out_mapped & ~canon.tournament.d.out_mask(new_vertex)) == 0,
      "clone must inherit the model's out-neighborhood");
  detail::assert_preserved(canon.tournament, "add_clone_vertex postcondition");

  canon.old_to_new.pop_back();
  return CloneResult{std::move(canon.tournament), std::move(canon.old_to_new), new_vertex};
}

/// Grows a complete-competition orientation to any componentwise-larger size
/// tuple (possibly with extra parts) by repeated cloning: existing parts are
/// grown largest-first, then new parts are appended as singletons and grown.
inline MultipartiteTournament lift(const MultipartiteTournament& t,
                                   const std::vector<int>& target) {
  const auto& src = t.parts.sizes();
  if (target.size() < src.size())
    throw std::invalid_argument("lift target has fewer parts than the source");
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < 1) throw std::invalid_argument("lift target sizes must be positive");
    if (i > 0 && target[i] > target[i - 1])
      throw std::invalid_argument("lift target sizes must be nonincreasing");
    if (i < src.size() && target[i] < src[i])
      throw std::invalid_argument("lift target is below the source in coordinate " +
                                  std::to_string(i));
  }
  if (target == src) return t;  // arc-for-arc identity
  detail::require_complete(t, "lift");

  MultipartiteTournament cur = t;
  const int l = static_cast<int>(target.size());
  for (int p = 0; p < l; ++p) {
    if (p >= cur.parts.part_count())
      cur = add_clone_vertex(cur, 0, std::nullopt).tournament;  // new singleton part
    while (cur.parts.size_of(p) < target[static_cast<std::size_t>(p)])
      cur = add_clone_vertex(cur, cur.parts.part_begin(p), p).tournament;
  }
  detail::internal_check(cur.parts.sizes() == target, "lift reaches the target sizes");
  return cur;
}

struct SplitResult {
  MultipartiteTournament tournament;
  std::vector<int> old_to_new;
};

/// Splits one part into two (first `first_size` vertices, then the rest);
/// the newly required arcs between the fragments run from the lower vertex
/// index to the higher. Keeping every old arc keeps the competition graph
/// complete.
inline SplitResult split_part(const MultipartiteTournament& t, int part, int first_size,
                              int second_size) {
  const int k = t.parts.part_count();
  if (part < 0 || part >= k) throw std::invalid_argument("invalid part index");
  if (first_size < 1 || second_size < 1)
    throw std::invalid_argument("fragment sizes must be positive");
  if (first_size + second_size != t.parts.size_of(part))
    throw std::invalid_argument("fragment sizes must add up to the part size");
  detail::require_complete(t, "split_part");

  const int n = t.d.vertex_count();
  Digraph raw(n);
  for (int u = 0; u < n; ++u)
    for_each_vertex(t.d.out_mask(u), [&](int v) { raw.add_arc(u, v); });
  const int begin = t.parts.part_begin(part);
  const int mid = begin + first_size;
  const int end = t.parts.part_end(part);
  for (int x = begin; x < mid; ++x)
    for (int y = mid; y < end; ++y) raw.add_arc(x, y);

  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    part_of[static_cast<std::size_t>(v)] = (v >= mid && v < end) ? k : t.parts.part_of(v);

  auto canon = detail::canonicalize(raw, part_of);
  detail::assert_preserved(canon.tournament, "split_part postcondition");
  return SplitResult{std::move(canon.tournament), std::move(canon.old_to_new)};
}

namespace detail {

inline bool masked_complete(const std::vector<VertexSet>& out, VertexSet active) {
  VertexSet rest = active;
  while (rest != 0) {
    const int u = lowest_vertex(rest);
    rest &= rest - 1;
    VertexSet others = rest;
    while (others != 0) {
      const int v = lowest_vertex(others);
      others &= others - 1;
      if ((out[static_cast<std::size_t>(u)] & out[static_cast<std::size_t>(v)] & active) == 0)
        return false;
    }
  }
  return true;
}

}  // namespace detail

struct PeelResult {
  MultipartiteTournament tournament;
  std::vector<int> removed;     // input vertex ids in removal order
  std::vector<int> old_to_new;  // -1 for removed vertices
};

/// Repeatedly deletes the lowest-indexed vertex of indegree <= 1. Deleting
/// such a vertex keeps the competition graph complete, which is re-checked
/// after every removal. The fixed point has minimum indegree >= 2.
inline PeelResult peel_low_indegree(const MultipartiteTournament& t) {
  const int n = t.d.vertex_count();
  if (n < 2) throw std::invalid_argument("peel_low_indegree requires at least two vertices");
  detail::require_complete(t, "peel_low_indegree");

  std::vector<VertexSet> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = t.d.out_mask(v);
    in[static_cast<std::size_t>(v)] = t.d.in_mask(v);
  }
  VertexSet active = all_below(n);
  std::vector<int> removed;
  while (set_size(active) >= 2) {
    int victim = -1;
    VertexSet rest = active;
    while (rest != 0) {
      const int v = lowest_vertex(rest);
      rest &= rest - 1;
      if (set_size(in[static_cast<std::size_t>(v)] & active) <= 1) {
        victim = v;
        break;
      }
    }
    if (victim < 0) break;
    active &= ~vertex_bit(victim);
    removed.push_back(victim);
    detail::internal_check(detail::masked_complete(out, active),
                           "deleting a vertex of indegree <= 1 keeps completeness");
  }

  // compact the survivors, dropping emptied parts
  std::vector<int> old_part;
  Digraph survivor(set_size(active));
  std::vector<int> compact(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!contains(active, v)) continue;
    compact[static_cast<std::size_t>(v)] = next++;
    old_part.push_back(t.parts.part_of(v));
  }
  for (int v = 0; v < n; ++v) {
    if (!contains(active, v)) continue;
    for_each_vertex(out[static_cast<std::size_t>(v)] & active, [&](int w) {
      survivor.add_arc(compact[static_cast<std::size_t>(v)], compact[static_cast<std::size_t>(w)]);
    });
  }
  auto canon = detail::canonicalize(survivor, old_part);
  detail::assert_preserved(canon.tournament, "peel_low_indegree postcondition");

  std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (compact[static_cast<std::size_t>(v)] >= 0)
      old_to_new[static_cast<std::size_t>(v)] =
          canon.old_to_new[static_cast<std::size_t>(compact[static_cast<std::size_t>(v)])];
  }
  return PeelResult{std::move(canon.tournament), std::move(removed), std::move(old_to_new)};
}

/// Same partite sizes, complete competition graph, and minimum indegree >= 2.
/// Realized as a full peel followed by re-adding the peeled vertices in
/// reverse order; each re-added vertex copies a surviving vertex of its part
/// (or, if its part emptied, any surviving vertex, with the leftover arcs
/// oriented away from it).
inline MultipartiteTournament normalize_min_indegree(const MultipartiteTournament& t) {
  if (t.parts.part_count() < 3)
    throw std::invalid_argument("normalize_min_indegree requires at least three parts");
  detail::require_complete(t, "normalize_min_indegree");

  const int n = t.d.vertex_count();
  std::vector<VertexSet> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = t.d.out_mask(v);
    in[static_cast<std::size_t>(v)] = t.d.in_mask(v);
  }
  VertexSet active = all_below(n);
  std::vector<int> removed;
  while (set_size(active) >= 2) {
    int victim = -1;
    VertexSet rest = active;
    while (rest != 0) {
      const int v = lowest_vertex(rest);
      rest &= rest - 1;
      if (set_size(in[static_cast<std::size_t>(v)] & active) <= 1) {
        victim = v;
        break;
      }
    }
    if (victim < 0) break;
    active &= ~vertex_bit(victim);
    removed.push_back(victim);
    detail::internal_check(detail::masked_complete(out, active),
                           "deleting a vertex of indegree <= 1 keeps completeness");
  }
  if (removed.empty()) return t;

  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const int v = *it;
    const VertexSet own = t.parts.part_mask(t.parts.part_of(v));
    VertexSet add_out, add_in;
    if ((own & active) != 0) {
      // part still inhabited: copy a surviving part-mate exactly
      const int model = lowest_vertex(own & active);
      add_out = out[static_cast<std::size_t>(model)] & active;
      add_in = in[static_cast<std::size_t>(model)] & active;
    } else {
      // part emptied: copy any surviving vertex; arcs toward its part
      // (including the model itself) are unconstrained, oriented away from v
      const int model = lowest_vertex(active);
      const VertexSet model_part = t.parts.part_mask(t.parts.part_of(model));
      add_out = (out[static_cast<std::size_t>(model)] & active) | (model_part & active);
      add_in = in[static_cast<std::size_t>(model)] & active;
    }
    out[static_cast<std::size_t>(v)] = add_out;
    in[static_cast<std::size_t>(v)] = add_in;
    for_each_vertex(add_out, [&](int w) { in[static_cast<std::size_t>(w)] |= vertex_bit(v); });
    for_each_vertex(add_in, [&](int w) { out[static_cast<std::size_t>(w)] |= vertex_bit(v); });
    active |= vertex_bit(v);
    detail::internal_check(detail::masked_complete(out, active),
                           "re-adding a copied vertex keeps completeness");
  }

  MultipartiteTournament result{Digraph::from_out_masks(out), t.parts};
  detail::assert_preserved(result, "normalize_min_indegree postcondition");
  for (int v = 0; v < n; ++v)
    detail::internal_check(result.d.in_degree(v) >= 2,
                           "normalize_min_indegree yields minimum indegree >= 2");
  return result;
}

}  // namespace compgraph
