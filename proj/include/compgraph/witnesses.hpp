#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compgraph/core.hpp"

namespace compgraph {

/// The ten reference orientations with complete competition graphs, one per
/// admissible boundary case. QR7 is generated from its circulant rule; the
/// rest are stored as literal 0/1 blocks and validated on every load.
enum class WitnessId { QR7, A1, A2, A3, A4, A5, A6, A7, A8, A9 };

inline constexpr std::array<WitnessId, 10> kAllWitnessIds = {
    WitnessId::QR7, WitnessId::A1, WitnessId::A2, WitnessId::A3, WitnessId::A4,
    WitnessId::A5,  WitnessId::A6, WitnessId::A7, WitnessId::A8, WitnessId::A9,
};

inline const char* witness_name(WitnessId id) {
  switch (id) {
    case WitnessId::QR7: return "QR7";
    case WitnessId::A1: return "A1";
    case WitnessId::A2: return "A2";
    case WitnessId::A3: return "A3";
    case WitnessId::A4: return "A4";
    case WitnessId::A5: return "A5";
    case WitnessId::A6: return "A6";
    case WitnessId::A7: return "A7";
    case WitnessId::A8: return "A8";
    case WitnessId::A9: return "A9";
  }
  return "?";
}

inline std::optional<WitnessId> witness_from_name(std::string_view name) {
  for (WitnessId id : kAllWitnessIds)
    if (name == witness_name(id)) return id;
  return std::nullopt;
}

inline std::vector<int> witness_sizes(WitnessId id) {
  switch (id) {
    case WitnessId::QR7: return {1, 1, 1, 1, 1, 1, 1};
    case WitnessId::A1: return {5, 1, 1, 1, 1, 1};
    case WitnessId::A2: return {3, 2, 1, 1, 1, 1};
    case WitnessId::A3: return {2, 2, 2, 1, 1, 1};
    case WitnessId::A4: return {5, 4, 4};
    case WitnessId::A5: return {4, 3, 3, 1};
    case WitnessId::A6: return {4, 2, 2, 2};
    case WitnessId::A7: return {3, 3, 3, 2};
    case WitnessId::A8: return {3, 3, 2, 1, 1};
    case WitnessId::A9: return {2, 2, 2, 2, 1};
  }
  throw std::invalid_argument("unknown witness id");
}

namespace detail {

// Adjacency matrices, one row per line, entry (i,j) = 1 iff arc i->j.
// Parts occupy consecutive index ranges in nonincreasing size order.

inline constexpr std::string_view kMatrixA1 =  // K_{5,1,1,1,1,1}
    "0000001011\n"
    "0000001101\n"
    "0000010110\n"
    "0000010101\n"
    "0000011010\n"
    "1100001100\n"
    "0011000110\n"
    "1000100011\n"
    "0101010001\n"
    "0010111000\n";

inline constexpr std::string_view kMatrixA2 =  // K_{3,2,1,1,1,1}
    "000101010\n"
    "000011101\n"
    "000011011\n"
    "011000011\n"
    "100001001\n"
    "000100101\n"
    "101110000\n"
    "010011100\n"
    "100000110\n";

inline constexpr std::string_view kMatrixA3 =  // K_{2,2,2,1,1,1}
    "000000111\n"
    "001011010\n"
    "100010111\n"
    "110010001\n"
    "100000111\n"
    "101100100\n"
    "010100010\n"
    "000101001\n"
    "010001100\n";

inline constexpr std::string_view kMatrixA4 =  // K_{5,4,4}
    "0000001010110\n"
    "0000001101001\n"
    "0000010011001\n"
    "0000010100101\n"
    "0000010101010\n"
    "1100000001100\n"
    "0011100001100\n"
    "1010000000011\n"
    "0101100000011\n"
    "1001000110000\n"
    "0110100110000\n"
    "0111011000000\n"
    "1000111000000\n";

inline constexpr std::string_view kMatrixA5 =  // K_{4,3,3,1}
    "00001001001\n"
    "00000100101\n"
    "00001010110\n"
    "00000111010\n"
    "01010001100\n"
    "10100001100\n"
    "11000000011\n"
    "01100010001\n"
    "10010010001\n"
    "11001100000\n"
    "00111100010\n";

inline constexpr std::string_view kMatrixA6 =  // K_{4,2,2,2}
    "0000101010\n"
    "0000010110\n"
    "0000100101\n"
    "0000011001\n"
    "0101001100\n"
    "1010001100\n"
    "0110000011\n"
    "1001000011\n"
    "0011110000\n"
    "1100110000\n";

inline constexpr std::string_view kMatrixA7 =  // K_{3,3,3,2}
    "00010000111\n"
    "00001001011\n"
    "00010110101\n"
    "01000001110\n"
    "10100001001\n"
    "11000010010\n"
    "11011000000\n"
    "10100100010\n"
    "01001100001\n"
    "00101010100\n"
    "00010111000\n";

inline constexpr std::string_view kMatrixA8 =  // K_{3,3,2,1,1}
    "0001000111\n"
    "0000110101\n"
    "0001011010\n"
    "0100000011\n"
    "1010000110\n"
    "1000001001\n"
    "1101100000\n"
    "0011010001\n"
    "0100011100\n"
    "0010101010\n";

inline constexpr std::string_view kMatrixA9 =  // K_{2,2,2,2,1}
    "001010001\n"
    "000101001\n"
    "010000101\n"
    "100000011\n"
    "011100010\n"
    "101100100\n"
    "110110000\n"
    "111001000\n"
    "000011110\n";

}  // namespace detail

/// Stored matrix block for A1..A9; QR7 has no stored block (it is generated
/// from its circulant rule).
inline std::optional<std::string_view> witness_matrix_text(WitnessId id) {
  switch (id) {
    case WitnessId::QR7: return std::nullopt;
    case WitnessId::A1: return detail::kMatrixA1;
    case WitnessId::A2: return detail::kMatrixA2;
    case WitnessId::A3: return detail::kMatrixA3;
    case WitnessId::A4: return detail::kMatrixA4;
    case WitnessId::A5: return detail::kMatrixA5;
    case WitnessId::A6: return detail::kMatrixA6;
    case WitnessId::A7: return detail::kMatrixA7;
    case WitnessId::A8: return detail::kMatrixA8;
    case WitnessId::A9: return detail::kMatrixA9;
  }
  throw std::invalid_argument("unknown witness id");
}

/// FNV-1a, used by the test suite to pin the stored blocks byte for byte.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {

inline Digraph parse_witness_matrix(std::string_view text, int n) {
  Digraph d(n);
  int row = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (line.empty()) continue;
    internal_check(row < n, "witness matrix has too many rows");
    internal_check(static_cast<int>(line.size()) == n, "witness matrix row length");
    for (int j = 0; j < n; ++j) {
      const char c = line[static_cast<std::size_t>(j)];
      internal_check(c == '0' || c == '1', "witness matrix entries must be 0/1");
      if (c == '1') d.add_arc(row, j);
    }
    ++row;
  }
  internal_check(row == n, "witness matrix has too few rows");
  return d;
}

inline Digraph make_qr7() {
  // Circulant on 7 vertices: arcs v -> v+1, v+2, v+4 (mod 7).
  Digraph d(7);
  for (int v = 0; v < 7; ++v)
    for (int step : {1, 2, 4}) d.add_arc(v, (v + step) % 7);
  return d;
}

}  // namespace detail

/// Loads and fully re-validates one of the embedded constructions. A failure
/// here is a transcription defect in the embedded data, never a user error.
inline MultipartiteTournament load_witness(WitnessId id) {
  PartiteStructure parts(witness_sizes(id));
  Digraph d = id == WitnessId::QR7
                  ? detail::make_qr7()
                  : detail::parse_witness_matrix(*witness_matrix_text(id), parts.vertex_count());
  MultipartiteTournament t{std::move(d), std::move(parts)};
  const auto violations = validate(t);
  if (!violations.empty()) {
    throw std::logic_error(std::string("embedded witness ") + witness_name(id) +
                           " is not a valid multipartite tournament: " +
                           violations.front().message());
  }
  if (auto bad = first_noncompeting_pair(t)) {
    throw std::logic_error(std::string("embedded witness ") + witness_name(id) +
                           " does not have a complete competition graph: pair {" +
                           std::to_string(bad->first) + "," + std::to_string(bad->second) +
                           "} has no common out-neighbor");
  }
  return t;
}

}  // namespace compgraph
