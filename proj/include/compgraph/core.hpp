#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compgraph {

/// Vertex sets are single machine words: vertex v corresponds to bit v.
/// Everything in this library is sized for small dense digraphs (n <= 64),
/// so membership, intersection and intersection-emptiness are one word op.
using VertexSet = std::uint64_t;

inline constexpr int kWordBits = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }

inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

/// Mask of all vertices < v.
constexpr VertexSet all_below(int v) {
  return v >= kWordBits ? ~VertexSet{0} : (VertexSet{1} << v) - 1;
}

/// Mask of vertices in [lo, hi).
constexpr VertexSet range_mask(int lo, int hi) {
  return all_below(hi) & ~all_below(lo);
}

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

/// Vertex-count cap. Defaults to the word width; the environment variable
/// COMPGRAPH_MAX_N may lower it (raising it past 64 is not possible with
/// word-packed neighbor sets).
inline int max_vertices() {
  static const int cap = [] {
    const char* env = std::getenv("COMPGRAPH_MAX_N");
    if (env == nullptr || *env == '\0') return kWordBits;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1 || value > kWordBits) {
      throw std::runtime_error(
          "COMPGRAPH_MAX_N must be an integer between 1 and 64");
    }
    return static_cast<int>(value);
  }();
  return cap;
}

namespace detail {
/// Postcondition that is guaranteed by construction or by a proven fact;
/// a failure is a defect, not a user error.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant failed: ") + what);
}
}  // namespace detail

/// Partition of {0,...,n-1} into parts of nonincreasing sizes, each part a
/// consecutive index range. All I/O and all constructions keep this ordering.
class PartiteStructure {
 public:
  explicit PartiteStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("part sizes must be nonempty");
    int total = 0;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (sizes_[i] < 1) throw std::invalid_argument("part sizes must be positive");
      if (i > 0 && sizes_[i] > sizes_[i - 1])
        throw std::invalid_argument("part sizes must be nonincreasing");
      total += sizes_[i];
    }
    if (total > max_vertices())
      throw std::invalid_argument("vertex count exceeds cap of " +
                                  std::to_string(max_vertices()));
    begin_.reserve(sizes_.size() + 1);
    begin_.push_back(0);
    for (int s : sizes_) begin_.push_back(begin_.back() + s);
    part_of_.resize(static_cast<std::size_t>(total));
    masks_.resize(sizes_.size());
    for (int p = 0; p < part_count(); ++p) {
      masks_[static_cast<std::size_t>(p)] = range_mask(begin_[p], begin_[p + 1]);
      for (int v = begin_[p]; v < begin_[p + 1]; ++v) part_of_[static_cast<std::size_t>(v)] = p;
    }
  }

  int part_count() const { return static_cast<int>(sizes_.size()); }
  int vertex_count() const { return begin_.back(); }
  const std::vector<int>& sizes() const { return sizes_; }
  int size_of(int part) const { return sizes_.at(static_cast<std::size_t>(part)); }

  int part_of(int v) const {
    check_vertex(v);
    return part_of_[static_cast<std::size_t>(v)];
  }

  int part_begin(int part) const { return begin_.at(static_cast<std::size_t>(part)); }
  int part_end(int part) const { return begin_.at(static_cast<std::size_t>(part) + 1); }

  VertexSet part_mask(int part) const { return masks_.at(static_cast<std::size_t>(part)); }

  /// All vertices outside v's part.
  VertexSet cross_mask(int v) const {
    return all_below(vertex_count()) & ~part_mask(part_of(v));
  }

  bool same_part(int u, int v) const { return part_of(u) == part_of(v); }

  friend bool operator==(const PartiteStructure&, const PartiteStructure&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex index out of range");
  }

  std::vector<int> sizes_;
  std::vector<int> part_of_;
  std::vector<int> begin_;  // prefix sums; size part_count()+1
  std::vector<VertexSet> masks_;
};

/// Digraph on {0,...,n-1} with word-packed out/in neighbor sets.
/// Self-loops are rejected outright; 2-cycles are representable so that
/// validation can report them on untrusted input.
class Digraph {
 public:
  explicit Digraph(int n) : n_(n) {
    if (n < 0 || n > max_vertices())
      throw std::invalid_argument("vertex count must be between 0 and " +
                                  std::to_string(max_vertices()));
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
  }

  static Digraph from_out_masks(const std::vector<VertexSet>& out) {
    Digraph d(static_cast<int>(out.size()));
    for (int u = 0; u < d.n_; ++u) {
      d.out_[static_cast<std::size_t>(u)] = out[static_cast<std::size_t>(u)];
      for_each_vertex(out[static_cast<std::size_t>(u)], [&](int v) {
        if (v >= d.n_) throw std::out_of_range("arc head out of range");
        if (v == u) throw std::invalid_argument("self-loops are not allowed");
        d.in_[static_cast<std::size_t>(v)] |= vertex_bit(u);
      });
    }
    return d;
  }

  int vertex_count() const { return n_; }

  void add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    out_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    in_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return contains(out_[static_cast<std::size_t>(u)], v);
  }

  VertexSet out_mask(int v) const {
    check_vertex(v);
    return out_[static_cast<std::size_t>(v)];
  }

  VertexSet in_mask(int v) const {
    check_vertex(v);
    return in_[static_cast<std::size_t>(v)];
  }

  int out_degree(int v) const { return set_size(out_mask(v)); }
  int in_degree(int v) const { return set_size(in_mask(v)); }

  long long arc_count() const {
    long long total = 0;
    for (VertexSet s : out_) total += set_size(s);
    return total;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

inline VertexSet out_neighbors(const Digraph& d, int v) { return d.out_mask(v); }
inline VertexSet in_neighbors(const Digraph& d, int v) { return d.in_mask(v); }

/// Loopless symmetric graph on the digraph's vertex set.
class CompetitionGraph {
 public:
  explicit CompetitionGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > max_vertices()) throw std::invalid_argument("bad vertex count");
  }

  int vertex_count() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return contains(adj_[static_cast<std::size_t>(u)], v);
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  long long edge_count() const {
    long long twice = 0;
    for (VertexSet s : adj_) twice += set_size(s);
    return twice / 2;
  }

  bool is_complete() const {
    return edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2;
  }

  friend bool operator==(const CompetitionGraph&, const CompetitionGraph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// uv is an edge iff u != v and u, v have a common out-neighbor.
inline CompetitionGraph competition_graph(const Digraph& d) {
  const int n = d.vertex_count();
  CompetitionGraph g(n);
  for (int u = 0; u < n; ++u) {
    const VertexSet su = d.out_mask(u);
    for (int v = u + 1; v < n; ++v) {
      if ((su & d.out_mask(v)) != 0) g.add_edge(u, v);
    }
  }
  return g;
}

/// First pair (u, v), u < v, in lexicographic order with no common
/// out-neighbor, or nullopt when the competition graph is complete.
inline std::optional<std::pair<int, int>> first_noncompeting_pair(const Digraph& d) {
  const int n = d.vertex_count();
  for (int u = 0; u < n; ++u) {
    const VertexSet su = d.out_mask(u);
    for (int v = u + 1; v < n; ++v) {
      if ((su & d.out_mask(v)) == 0) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

inline bool is_complete_competition(const Digraph& d) {
  return !first_noncompeting_pair(d).has_value();
}

/// Orientation of a complete multipartite graph: exactly one arc between
/// every cross-part pair, none inside a part.
struct MultipartiteTournament {
  Digraph d;
  PartiteStructure parts;

  friend bool operator==(const MultipartiteTournament&, const MultipartiteTournament&) = default;
};

inline CompetitionGraph competition_graph(const MultipartiteTournament& t) {
  return competition_graph(t.d);
}
inline bool is_complete_competition(const MultipartiteTournament& t) {
  return is_complete_competition(t.d);
}
inline std::optional<std::pair<int, int>> first_noncompeting_pair(const MultipartiteTournament& t) {
  return first_noncompeting_pair(t.d);
}

struct Violation {
  enum class Kind { SizeMismatch, SelfLoop, TwoCycle, IntraPartArc, MissingCrossArc };

  Kind kind;
  int u = -1;
  int v = -1;

  std::string message() const {
    switch (kind) {
      case Kind::SizeMismatch:
        return "size mismatch: digraph has " + std::to_string(u) +
               " vertices, partite structure has " + std::to_string(v);
      case Kind::SelfLoop:
        return "self-loop at " + std::to_string(u);
      case Kind::TwoCycle:
        return "2-cycle {" + std::to_string(u) + "," + std::to_string(v) + "}";
      case Kind::IntraPartArc:
        return "intra-part arc (" + std::to_string(u) + "," + std::to_string(v) + ")";
      case Kind::MissingCrossArc:
        return "missing cross-part arc between " + std::to_string(u) + " and " +
               std::to_string(v);
    }
    return "unknown violation";
  }
};

/// Reports every violated multipartite-tournament invariant; empty result
/// means the value is a valid orientation of the complete multipartite graph.
inline std::vector<Violation> validate(const MultipartiteTournament& t) {
  std::vector<Violation> out;
  const int n = t.d.vertex_count();
  if (n != t.parts.vertex_count()) {
    out.push_back({Violation::Kind::SizeMismatch, n, t.parts.vertex_count()});
    return out;  // vertex indexing disagrees; pairwise checks would be meaningless
  }
  for (int v = 0; v < n; ++v) {
    if (contains(t.d.out_mask(v), v)) out.push_back({Violation::Kind::SelfLoop, v, v});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool uv = contains(t.d.out_mask(u), v);
      const bool vu = contains(t.d.out_mask(v), u);
      if (t.parts.same_part(u, v)) {
        if (uv) out.push_back({Violation::Kind::IntraPartArc, u, v});
        if (vu) out.push_back({Violation::Kind::IntraPartArc, v, u});
      } else {
        if (uv && vu) out.push_back({Violation::Kind::TwoCycle, u, v});
        if (!uv && !vu) out.push_back({Violation::Kind::MissingCrossArc, u, v});
      }
    }
  }
  return out;
}

inline bool is_valid(const MultipartiteTournament& t) { return validate(t).empty(); }

/// Convenience constructor from an explicit arc list.
inline MultipartiteTournament make_tournament(std::vector<int> sizes,
                                              const std::vector<std::pair<int, int>>& arcs) {
  PartiteStructure parts(std::move(sizes));
  Digraph d(parts.vertex_count());
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return MultipartiteTournament{std::move(d), std::move(parts)};
}

}  // namespace compgraph
