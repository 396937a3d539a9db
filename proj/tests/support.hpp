#pragma once

// Test-only helpers: random graph sources and oracles written directly from
// the definitions, independent of the library's fast paths.

#include <cstdint>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "totirr/totirr.hpp"

namespace totirr::test {

/// Random graph with n uniform in [lo, hi] and edge density drawn per graph,
/// so sparse, dense and near-regular cases all show up.
inline Graph random_graph(SplitMix64& rng, int lo, int hi) {
  const int n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  const std::uint64_t density = rng.below(101);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(100) < density) b.add_edge(u, v);
  return std::move(b).build();
}

/// Pairwise |d(u) - d(v)| straight from adjacency, without cached degrees.
inline Int irr_t_from_adjacency(const Graph& g) {
  const int n = g.order();
  std::vector<Int> d(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) ++d[static_cast<std::size_t>(u)];
  Int acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) acc += std::llabs(d[i] - d[j]);
  return acc / 2;
}

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

inline EdgeSet edge_set(const Graph& g) {
  EdgeSet s;
  g.for_each_edge([&](Vertex u, Vertex v) { s.emplace(u, v); });
  return s;
}

/// Cross-product edge sets from the set-builder definitions, labelled u*n2 + v.
enum class Rule { lexicographic, cartesian, strong, direct, disjunction, symdiff };

inline EdgeSet oracle_cross_edges(Rule rule, const Graph& g, const Graph& h) {
  const int n1 = g.order(), n2 = h.order();
  EdgeSet s;
  for (Vertex ui = 0; ui < n1; ++ui)
    for (Vertex vk = 0; vk < n2; ++vk)
      for (Vertex uj = 0; uj < n1; ++uj)
        for (Vertex vl = 0; vl < n2; ++vl) {
          const Vertex a = ui * n2 + vk, c = uj * n2 + vl;
          if (a >= c) continue;
          const bool eg = g.adjacent(ui, uj), eh = h.adjacent(vk, vl);
          bool e = false;
          switch (rule) {
            case Rule::lexicographic: e = eg || (eh && ui == uj); break;
            case Rule::cartesian: e = (eg && vk == vl) || (eh && ui == uj); break;
            case Rule::strong: e = (eg && vk == vl) || (eh && ui == uj) || (eg && eh); break;
            case Rule::direct: e = eg && eh; break;
            case Rule::disjunction: e = eg || eh; break;
            case Rule::symdiff: e = eg != eh; break;
          }
          if (e) s.emplace(a, c);
        }
  return s;
}

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.degrees().begin(), g.degrees().end());
  std::sort(d.begin(), d.end());
  return d;
}

inline std::vector<int> degrees_of(const Graph& g) { return {g.degrees().begin(), g.degrees().end()}; }

/// Small exhaustive universe (all labelled graphs up to `max_n` vertices).
inline std::vector<Graph> all_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& g : enumerate_labeled_graphs(n)) out.push_back(g);
  return out;
}

}  // namespace totirr::test
