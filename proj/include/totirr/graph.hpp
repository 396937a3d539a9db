#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "totirr/checked.hpp"
#include "totirr/errors.hpp"

namespace totirr {

using Vertex = int;

class Graph;

/**
 * Mutable adjacency bit-matrix used to assemble a Graph.
 *
 * Each vertex owns a row of 64-bit words; rows are kept symmetric on every
 * insertion so that `build()` only has to count degrees.
 */
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {
    if (n < 1) throw InputError("graph must have at least one vertex, got n = " + std::to_string(n));
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(n), 0);
  }

  int order() const { return n_; }

  /// Adds {u, v}. Repeated insertions are no-ops.
  void add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n_ - 1) + "]");
    if (u == v) throw InputError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    set(u, v);
    set(v, u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[row(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  Graph build() &&;

 private:
  friend class Graph;

  std::size_t row(Vertex u) const { return static_cast<std::size_t>(u) * words_; }
  void set(Vertex u, Vertex v) { bits_[row(u) + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/**
 * Immutable simple undirected graph on vertices {0, ..., n-1}.
 *
 * Adjacency is a dense symmetric bit-matrix with an empty diagonal; degrees
 * and the edge count are computed once at construction. Safe to share
 * between threads.
 */
class Graph {
 public:
  int order() const { return n_; }
  Int size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[row(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  int degree(Vertex u) const { return degrees_[static_cast<std::size_t>(u)]; }
  std::span<const int> degrees() const { return degrees_; }

  /// Raw adjacency row of u, `(n + 63) / 64` words, bit v of word v/64.
  std::span<const std::uint64_t> row_bits(Vertex u) const {
    return {bits_.data() + row(u), words_};
  }

  /// Calls f(v) for every neighbour v of u in increasing order.
  template <class F>
  void for_each_neighbor(Vertex u, F&& f) const {
    const auto r = row_bits(u);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t word = r[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
  }

  /// Calls f(u, v) once per edge with u < v, ordered by u then v.
  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](Vertex v) {
        if (u < v) f(u, v);
      });
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  bool is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for_each_neighbor(u, [&](Vertex v) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++reached;
          stack.push_back(v);
        }
      });
    }
    return reached == n_;
  }

  bool is_regular() const {
    return std::all_of(degrees_.begin(), degrees_.end(), [&](int d) { return d == degrees_.front(); });
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  friend class GraphBuilder;

  explicit Graph(GraphBuilder&& b) : n_(b.n_), words_(b.words_), bits_(std::move(b.bits_)) {
    degrees_.resize(static_cast<std::size_t>(n_));
    Int twice_m = 0;
    for (Vertex u = 0; u < n_; ++u) {
      int d = 0;
      for (auto w : row_bits(u)) d += std::popcount(w);
      degrees_[static_cast<std::size_t>(u)] = d;
      twice_m += d;
    }
    m_ = twice_m / 2;
  }

  std::size_t row(Vertex u) const { return static_cast<std::size_t>(u) * words_; }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
  Int m_ = 0;
};

inline Graph GraphBuilder::build() && { return Graph(std::move(*this)); }

/// Graph on n vertices with the given edges; duplicate pairs collapse.
inline Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Vertices of h are shifted by g.order(); no edges between the two sides.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  GraphBuilder b(n1 + h.order());
  g.for_each_edge([&](Vertex u, Vertex v) { b.add_edge(u, v); });
  h.for_each_edge([&](Vertex u, Vertex v) { b.add_edge(n1 + u, n1 + v); });
  return std::move(b).build();
}

/**
 * Multiset of vertex degrees, kept both in vertex order and sorted
 * non-increasingly. This is all the total irregularity, the first Zagreb
 * index and the degree variance depend on.
 */
class DegreeSequence {
 public:
  explicit DegreeSequence(const Graph& g) : DegreeSequence(g.degrees(), /*validated=*/true) {}

  /// Validates: non-empty, every entry in [0, n-1], even sum.
  explicit DegreeSequence(std::span<const int> degrees) : DegreeSequence(degrees, false) {}

  std::size_t length() const { return degrees_.size(); }
  std::span<const int> degrees() const { return degrees_; }
  std::span<const int> sorted_desc() const { return sorted_; }
  Int sum() const { return sum_; }

 private:
  DegreeSequence(std::span<const int> degrees, bool validated) : degrees_(degrees.begin(), degrees.end()) {
    const auto n = static_cast<int>(degrees_.size());
    if (!validated) {
      if (n == 0) throw InputError("degree sequence must be non-empty");
      for (int d : degrees_)
        if (d < 0 || d > n - 1)
          throw InputError("degree " + std::to_string(d) + " outside [0, " + std::to_string(n - 1) + "]");
    }
    sum_ = std::accumulate(degrees_.begin(), degrees_.end(), Int{0});
    if (sum_ % 2 != 0) throw InputError("degree sum " + std::to_string(sum_) + " is odd");
    sorted_ = degrees_;
    std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
  }

  std::vector<int> degrees_;
  std::vector<int> sorted_;
  Int sum_ = 0;
};

}  // namespace totirr
