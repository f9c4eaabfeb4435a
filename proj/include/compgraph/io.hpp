#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "compgraph/core.hpp"

namespace compgraph {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void strip_trailing_ws(std::string& s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n'))
    s.pop_back();
}

inline bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;  // blank
}

/// Next content line with trailing whitespace removed, or false at EOF.
inline bool next_content_line(std::istream& is, std::string& line, int& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    strip_trailing_ws(line);
    if (!is_comment_or_blank(line)) return true;
  }
  return false;
}

}  // namespace detail

/// DMT text format, version 1.
///   line 1: k n_1 ... n_k        (sizes nonincreasing)
///   then n rows of n characters; char j of row i is '1' iff arc i->j.
/// Lines whose first non-blank character is '#' are comments.
inline MultipartiteTournament parse_dmt(std::istream& is) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(is, line, lineno))
    throw ParseError("DMT: missing header line");

  std::istringstream header(line);
  int k = 0;
  if (!(header >> k) || k < 1)
    throw ParseError("DMT line " + std::to_string(lineno) + ": bad part count");
  std::vector<int> sizes(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (!(header >> sizes[static_cast<std::size_t>(i)]))
      throw ParseError("DMT line " + std::to_string(lineno) + ": expected " +
                       std::to_string(k) + " part sizes");
  }
  std::string rest;
  if (header >> rest)
    throw ParseError("DMT line " + std::to_string(lineno) + ": trailing tokens in header");

  PartiteStructure parts = [&] {
    try {
      return PartiteStructure(sizes);
    } catch (const std::invalid_argument& e) {
      throw ParseError("DMT line " + std::to_string(lineno) + ": " + e.what());
    }
  }();

  const int n = parts.vertex_count();
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    if (!detail::next_content_line(is, line, lineno))
      throw ParseError("DMT: expected " + std::to_string(n) + " matrix rows, got " +
                       std::to_string(i));
    if (static_cast<int>(line.size()) != n)
      throw ParseError("DMT line " + std::to_string(lineno) + ": row has " +
                       std::to_string(line.size()) + " entries, expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const char c = line[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1')
        throw ParseError("DMT line " + std::to_string(lineno) +
                         ": matrix entries must be 0 or 1");
      if (c == '1') {
        if (i == j)
          throw ParseError("DMT line " + std::to_string(lineno) +
                           ": nonzero diagonal entry (self-loop)");
        d.add_arc(i, j);
      }
    }
  }
  if (detail::next_content_line(is, line, lineno))
    throw ParseError("DMT line " + std::to_string(lineno) + ": extra content after matrix");
  return MultipartiteTournament{std::move(d), std::move(parts)};
}

inline MultipartiteTournament parse_dmt(const std::string& text) {
  std::istringstream is(text);
  return parse_dmt(is);
}

inline std::string emit_dmt(const MultipartiteTournament& t) {
  std::ostringstream os;
  os << t.parts.part_count();
  for (int s : t.parts.sizes()) os << ' ' << s;
  os << '\n';
  const int n = t.d.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (t.d.has_arc(i, j) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json to_json(const MultipartiteTournament& t) {
  nlohmann::json arcs = nlohmann::json::array();
  const int n = t.d.vertex_count();
  for (int u = 0; u < n; ++u) {
    for_each_vertex(t.d.out_mask(u), [&](int v) { arcs.push_back({u, v}); });
  }
  return nlohmann::json{{"sizes", t.parts.sizes()}, {"arcs", std::move(arcs)}};
}

inline MultipartiteTournament from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sizes") || !j.contains("arcs"))
    throw ParseError("JSON: expected object with \"sizes\" and \"arcs\"");
  std::vector<int> sizes;
  try {
    sizes = j.at("sizes").get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("JSON: \"sizes\" must be an array of integers");
  }
  PartiteStructure parts = [&] {
    try {
      return PartiteStructure(std::move(sizes));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("JSON: ") + e.what());
    }
  }();
  Digraph d(parts.vertex_count());
  if (!j.at("arcs").is_array()) throw ParseError("JSON: \"arcs\" must be an array");
  for (const auto& arc : j.at("arcs")) {
    if (!arc.is_array() || arc.size() != 2 || !arc[0].is_number_integer() ||
        !arc[1].is_number_integer())
      throw ParseError("JSON: each arc must be a pair of vertex indices");
    const int u = arc[0].get<int>();
    const int v = arc[1].get<int>();
    try {
      d.add_arc(u, v);
    } catch (const std::exception& e) {
      throw ParseError(std::string("JSON: bad arc [") + std::to_string(u) + "," +
                       std::to_string(v) + "]: " + e.what());
    }
  }
  return MultipartiteTournament{std::move(d), std::move(parts)};
}

inline MultipartiteTournament parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("JSON: malformed document");
  return from_json(j);
}

/// Auto-detects JSON (first non-blank byte '{') vs DMT.
inline MultipartiteTournament parse_auto(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    if (c == '{') return parse_json(text);
    break;
  }
  return parse_dmt(text);
}

/// Plain DOT emitter; parts become clusters, no layout logic.
inline std::string emit_dot(const MultipartiteTournament& t, const std::string& name = "D") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int p = 0; p < t.parts.part_count(); ++p) {
    os << "  subgraph cluster_part" << p << " {\n";
    os << "    label=\"part " << p << " (size " << t.parts.size_of(p) << ")\";\n    ";
    for (int v = t.parts.part_begin(p); v < t.parts.part_end(p); ++v) os << v << "; ";
    os << "\n  }\n";
  }
  const int n = t.d.vertex_count();
  for (int u = 0; u < n; ++u)
    for_each_vertex(t.d.out_mask(u), [&](int v) { os << "  " << u << " -> " << v << ";\n"; });
  os << "}\n";
  return os.str();
}

}  // namespace compgraph
