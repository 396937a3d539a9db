#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "totirr/checked.hpp"
#include "totirr/graph.hpp"

namespace totirr {

/**
 * Total irregularity: the sum of |d(u) - d(v)| over unordered vertex pairs.
 *
 * With degrees sorted d_1 >= ... >= d_n, the i-th largest degree is
 * subtracted by the n - i smaller ones and subtracted from the i - 1 larger
 * ones, so irr_t = sum_i (n - 2i + 1) d_i. O(n) after the sort.
 */
inline Int total_irregularity(const DegreeSequence& ds) {
  const auto sorted = ds.sorted_desc();
  const Int n = static_cast<Int>(sorted.size());
  Int acc = 0;
  for (Int i = 1; i <= n; ++i)
    acc = checked::add(acc, checked::mul(n - 2 * i + 1, Int{sorted[static_cast<std::size_t>(i - 1)]}));
  return acc;
}

inline Int total_irregularity(const Graph& g) { return total_irregularity(DegreeSequence(g)); }

/// Direct O(n^2) pairwise sum. Kept as an independent check on the sorted form.
inline Int total_irregularity_naive(const Graph& g) {
  const auto d = g.degrees();
  Int acc = 0;
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = u + 1; v < d.size(); ++v) acc = checked::add(acc, std::abs(d[u] - d[v]));
  return acc;
}

/// Albertson irregularity (the third Zagreb index M3): sum of edge imbalances.
inline Int irregularity(const Graph& g) {
  Int acc = 0;
  g.for_each_edge([&](Vertex u, Vertex v) { acc = checked::add(acc, std::abs(g.degree(u) - g.degree(v))); });
  return acc;
}

/// First Zagreb index as a sum of squared degrees.
inline Int zagreb_m1(const Graph& g) {
  Int acc = 0;
  for (int d : g.degrees()) acc = checked::add(acc, checked::mul(d, d));
  return acc;
}

/// First Zagreb index as a sum of d(u) + d(v) over edges.
inline Int zagreb_m1_edge_form(const Graph& g) {
  Int acc = 0;
  g.for_each_edge([&](Vertex u, Vertex v) { acc = checked::add(acc, Int{g.degree(u)} + g.degree(v)); });
  return acc;
}

inline Int zagreb_m2(const Graph& g) {
  Int acc = 0;
  g.for_each_edge([&](Vertex u, Vertex v) { acc = checked::add(acc, checked::mul(g.degree(u), g.degree(v))); });
  return acc;
}

/**
 * Variance of the degree distribution, evaluated from degree frequencies:
 * (1/n) sum_i n_i (i - 2m/n)^2, where n_i counts vertices of degree i.
 * Isolated vertices (i = 0) are included.
 */
inline double degree_variance(const Graph& g) {
  const int n = g.order();
  std::vector<Int> freq(static_cast<std::size_t>(n), 0);
  for (int d : g.degrees()) ++freq[static_cast<std::size_t>(d)];
  const double mean = 2.0 * static_cast<double>(g.size()) / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dev = i - mean;
    acc += static_cast<double>(freq[static_cast<std::size_t>(i)]) * dev * dev;
  }
  return acc / n;
}

struct PowerIterationOptions {
  double tolerance = 1e-10;
  long max_iterations = 1'000'000;
};

/**
 * Largest adjacency eigenvalue by power iteration.
 *
 * Iterates on A + I from the all-ones vector and tracks the Rayleigh quotient
 * of A. The shift makes lambda_1 + 1 strictly dominant in magnitude, so
 * bipartite graphs (spectrum symmetric about 0) converge instead of
 * oscillating. Stops when the quotient moves by less than `tolerance`.
 */
inline double spectral_radius(const Graph& g, const PowerIterationOptions& opt = {}) {
  if (opt.tolerance <= 0) throw InputError("power iteration tolerance must be positive");
  const auto n = static_cast<std::size_t>(g.order());
  if (g.size() == 0) return 0.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  auto multiply = [&] {
    for (std::size_t u = 0; u < n; ++u) {
      double s = 0.0;
      g.for_each_neighbor(static_cast<Vertex>(u), [&](Vertex v) { s += x[static_cast<std::size_t>(v)]; });
      ax[u] = s;
    }
  };
  auto rayleigh = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * ax[i];
    return s;
  };

  multiply();
  double rho = rayleigh();
  double residual = 0.0;
  for (long it = 0; it < opt.max_iterations; ++it) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += ax[i];
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (auto& xi : x) xi /= norm;
    multiply();
    const double next = rayleigh();
    if (std::abs(next - rho) < opt.tolerance) return next;
    rho = next;
  }
  for (std::size_t i = 0; i < n; ++i) residual += (ax[i] - rho * x[i]) * (ax[i] - rho * x[i]);
  throw NumericError("power iteration did not converge after " + std::to_string(opt.max_iterations) + " iterations",
                     std::sqrt(residual));
}

/// Collatz-Sinogowitz index lambda_1 - 2m/n, clamped at 0. Edgeless graphs give exactly 0.
inline double collatz_sinogowitz(const Graph& g, const PowerIterationOptions& opt = {}) {
  if (g.size() == 0) return 0.0;
  const double avg = 2.0 * static_cast<double>(g.size()) / g.order();
  return std::max(spectral_radius(g, opt) - avg, 0.0);
}

}  // namespace totirr
