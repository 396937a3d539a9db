#pragma once

#include <charconv>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "totirr/graph.hpp"

namespace totirr {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Splits on whitespace and parses every token as a non-negative int.
inline bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long v = 0;
    auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc{} || p != line.data() + j) return false;
    out.push_back(v);
    i = j;
  }
  return true;
}

}  // namespace detail

/**
 * Plain-text edge list:
 *
 *     # comment
 *     n 4
 *     0 1
 *     1 2
 *
 * The first meaningful line declares the order; every later one is a 0-based
 * pair. Blank lines and anything after '#' are ignored.
 */
inline Graph parse_edge_list(std::string_view text) {
  using U = ParseError::Unit;
  std::optional<GraphBuilder> builder;
  std::vector<long> nums;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (!builder) {
      if (line.size() < 2 || line[0] != 'n' || (line[1] != ' ' && line[1] != '\t') ||
          !detail::parse_ints(line.substr(1), nums) || nums.size() != 1)
        throw ParseError("expected header 'n <count>'", line_no, U::line);
      if (nums[0] < 1 || nums[0] > std::numeric_limits<int>::max())
        throw ParseError("vertex count must be at least 1", line_no, U::line);
      builder.emplace(static_cast<int>(nums[0]));
      continue;
    }
    if (!detail::parse_ints(line, nums) || nums.size() != 2)
      throw ParseError("expected 'u v' with two integers", line_no, U::line);
    const long n = builder->order();
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n)
      throw ParseError("edge (" + std::to_string(nums[0]) + "," + std::to_string(nums[1]) +
                           ") has an endpoint outside [0, " + std::to_string(n - 1) + "]",
                       line_no, U::line);
    if (nums[0] == nums[1]) throw ParseError("self-loop (" + std::to_string(nums[0]) + "," + std::to_string(nums[1]) + ")", line_no, U::line);
    builder->add_edge(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!builder) throw ParseError("missing header 'n <count>'", line_no, U::line);
  return std::move(*builder).build();
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  g.for_each_edge([&](Vertex u, Vertex v) { out += std::to_string(u) + " " + std::to_string(v) + "\n"; });
  return out;
}

}  // namespace totirr
