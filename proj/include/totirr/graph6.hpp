#pragma once

#include <string>
#include <string_view>

#include "totirr/graph.hpp"

namespace totirr {

/// Largest order handled by the graph6 codec (4-byte header form).
inline constexpr int graph6_max_order = 4096;

/**
 * Parses one graph6 string (no trailing newline).
 *
 * Header: one byte n+63 for n <= 62, otherwise '~' followed by n in three
 * 6-bit groups. Payload: upper-triangle bits x(0,1), x(0,2), x(1,2),
 * x(0,3), ... packed six per byte, most significant first, byte = bits+63,
 * zero-padded to a multiple of six.
 */
inline Graph parse_graph6(std::string_view s) {
  using U = ParseError::Unit;
  auto sextet = [&](std::size_t pos) -> int {
    if (pos >= s.size()) throw ParseError("truncated graph6 input", pos, U::byte);
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte " + std::to_string(c) + " outside [63, 126]", pos, U::byte);
    return c - 63;
  };

  if (s.empty()) throw ParseError("empty graph6 string", 0, U::byte);
  std::size_t pos = 0;
  long n = 0;
  if (s[0] == '~') {
    if (s.size() > 1 && s[1] == '~') throw ParseError("8-byte graph6 header is not supported", 0, U::byte);
    n = (long{sextet(1)} << 12) | (long{sextet(2)} << 6) | sextet(3);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n < 1) throw ParseError("graph6 order must be at least 1", 0, U::byte);
  if (n > graph6_max_order)
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(graph6_max_order), 0, U::byte);

  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() < pos + bytes) throw ParseError("truncated graph6 payload", s.size(), U::byte);
  if (s.size() > pos + bytes) throw ParseError("trailing data after graph6 payload", pos + bytes, U::byte);

  GraphBuilder b(order);
  std::size_t k = 0;
  for (Vertex v = 1; v < order; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  if (bits % 6 != 0) {
    const int last = sextet(pos + bytes - 1);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("nonzero graph6 padding bits", pos + bytes - 1, U::byte);
  }
  return std::move(b).build();
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order)
    throw InputError("graph6 output supports at most " + std::to_string(graph6_max_order) + " vertices, got " +
                     std::to_string(n));
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace totirr
