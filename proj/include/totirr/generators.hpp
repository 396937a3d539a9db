#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "totirr/graph.hpp"
#include "totirr/random.hpp"

namespace totirr {

/// P_l. gen_path(1) is K_1.
inline Graph gen_path(int l) {
  if (l < 1) throw InputError("path needs l >= 1, got " + std::to_string(l));
  GraphBuilder b(l);
  for (Vertex v = 0; v + 1 < l; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph gen_cycle(int k) {
  if (k < 3) throw InputError("cycle needs k >= 3, got " + std::to_string(k));
  GraphBuilder b(k);
  for (Vertex v = 0; v < k; ++v) b.add_edge(v, (v + 1) % k);
  return std::move(b).build();
}

inline Graph gen_complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

/// K_{1,n-1} with centre 0.
inline Graph gen_star(int n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

inline Graph gen_empty(int n) { return GraphBuilder(n).build(); }

/// K_{n_1,...,n_k}; parts occupy consecutive vertex ranges in the given order.
inline Graph gen_complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw InputError("complete multipartite graph needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw InputError("part sizes must be positive, got " + std::to_string(p));
    n += p;
  }
  std::vector<int> part_of;
  part_of.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph gen_complete_multipartite(std::initializer_list<int> parts) {
  return gen_complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

/**
 * Graph of maximum total irregularity on n vertices.
 *
 * With p = floor(n/2): top vertices t_1..t_p form a clique, t_i is joined to
 * b_j whenever i < j. For even n the matching t_i b_i is added; for odd n an
 * apex r joined to every t_i is added instead. Labels: t_i -> i-1,
 * b_i -> p+i-1, r -> 2p.
 */
inline Graph gen_extremal_total_irr(int n) {
  if (n < 2) throw InputError("extremal graph needs n >= 2, got " + std::to_string(n));
  const int p = n / 2;
  auto t = [](int i) { return i - 1; };
  auto bot = [p](int i) { return p + i - 1; };
  GraphBuilder b(n);
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) {
      b.add_edge(t(i), t(j));
      b.add_edge(t(i), bot(j));
    }
    if (n % 2 == 0)
      b.add_edge(t(i), bot(i));
    else
      b.add_edge(t(i), 2 * p);
  }
  return std::move(b).build();
}

/// Uniform labelled tree on n vertices, decoded from a random Prüfer sequence.
inline Graph gen_random_tree(int n, std::uint64_t seed) {
  GraphBuilder b(n);
  if (n == 2) b.add_edge(0, 1);
  if (n <= 2) return std::move(b).build();

  SplitMix64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (int c : code) ++remaining[static_cast<std::size_t>(c)];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining[static_cast<std::size_t>(v)] == 1) leaves.push(v);

  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    b.add_edge(leaf, c);
    if (--remaining[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const int u = leaves.top();
  leaves.pop();
  b.add_edge(u, leaves.top());
  return std::move(b).build();
}

/// G(n, 1/2): every pair present independently with probability 1/2.
inline Graph gen_random_graph(int n, SplitMix64& rng) {
  GraphBuilder b(n);
  std::uint64_t pool = 0;
  int left = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (left == 0) {
        pool = rng();
        left = 64;
      }
      if (pool & 1U) b.add_edge(u, v);
      pool >>= 1;
      --left;
    }
  return std::move(b).build();
}

}  // namespace totirr
