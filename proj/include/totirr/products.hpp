#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totirr/graph.hpp"

namespace totirr {

enum class ProductKind { join, lexicographic, cartesian, strong, direct, corona, disjunction, symdiff };

inline constexpr std::array<ProductKind, 8> all_product_kinds{
    ProductKind::join,   ProductKind::lexicographic, ProductKind::cartesian,   ProductKind::strong,
    ProductKind::direct, ProductKind::corona,        ProductKind::disjunction, ProductKind::symdiff};

inline constexpr std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::join: return "join";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::direct: return "direct";
    case ProductKind::corona: return "corona";
    case ProductKind::disjunction: return "disjunction";
    case ProductKind::symdiff: return "symdiff";
  }
  return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view s) {
  for (auto k : all_product_kinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// True for the five operations on V(G) x V(H) with (u, v) labelled u*n2 + v.
inline constexpr bool is_cross_product(ProductKind k) {
  return k != ProductKind::join && k != ProductKind::corona;
}

inline int composite_order(ProductKind k, const Graph& g, const Graph& h) {
  const Int n1 = g.order(), n2 = h.order();
  Int n = 0;
  switch (k) {
    case ProductKind::join: n = n1 + n2; break;
    case ProductKind::corona: n = checked::add(n1, checked::mul(n1, n2)); break;
    default: n = checked::mul(n1, n2); break;
  }
  if (n > std::numeric_limits<int>::max()) throw InputError("composite graph too large");
  return static_cast<int>(n);
}

/**
 * Degrees of the composite as predicted from operand degrees alone:
 *
 *   join           d(u) = dG(u) + n2,  d(v) = dH(v) + n1
 *   lexicographic  n2 dG + dH
 *   cartesian      dG + dH
 *   strong         dG + dH + dG dH
 *   direct         dG dH
 *   corona         d(u) = dG(u) + n2 on G, dH(v) + 1 in every copy
 *   disjunction    n2 dG + n1 dH - dG dH
 *   symdiff        n2 dG + n1 dH - 2 dG dH
 */
inline std::vector<Int> predicted_degrees(ProductKind k, const Graph& g, const Graph& h) {
  const int n1 = g.order(), n2 = h.order();
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(composite_order(k, g, h)));
  if (k == ProductKind::join) {
    for (int d : g.degrees()) out.push_back(Int{d} + n2);
    for (int d : h.degrees()) out.push_back(Int{d} + n1);
    return out;
  }
  if (k == ProductKind::corona) {
    for (int d : g.degrees()) out.push_back(Int{d} + n2);
    for (int i = 0; i < n1; ++i)
      for (int d : h.degrees()) out.push_back(Int{d} + 1);
    return out;
  }
  for (int dg_i : g.degrees())
    for (int dh_i : h.degrees()) {
      const Int dg = dg_i, dh = dh_i;
      switch (k) {
        case ProductKind::lexicographic: out.push_back(n2 * dg + dh); break;
        case ProductKind::cartesian: out.push_back(dg + dh); break;
        case ProductKind::strong: out.push_back(dg + dh + dg * dh); break;
        case ProductKind::direct: out.push_back(dg * dh); break;
        case ProductKind::disjunction: out.push_back(n2 * dg + n1 * dh - dg * dh); break;
        case ProductKind::symdiff: out.push_back(n2 * dg + n1 * dh - 2 * dg * dh); break;
        default: break;
      }
    }
  return out;
}

namespace detail {

inline void check_degree_identity(ProductKind k, const Graph& g, const Graph& h, const Graph& result) {
  const auto expected = predicted_degrees(k, g, h);
  const auto actual = result.degrees();
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (expected[i] != actual[i])
      throw InvariantViolation(std::string(to_string(k)) + ": degree identity fails at vertex " + std::to_string(i) +
                               " (expected " + std::to_string(expected[i]) + ", got " +
                               std::to_string(actual[i]) + ")");
}

/// Builds a product on V(G) x V(H) from a per-pair adjacency rule
/// rule(g_adj, h_adj, same_u, same_v).
template <class Rule>
Graph cross_product(ProductKind k, const Graph& g, const Graph& h, Rule rule) {
  const int n1 = g.order(), n2 = h.order();
  GraphBuilder b(composite_order(k, g, h));
  for (Vertex a = 0; a < n1 * n2; ++a) {
    const Vertex u = a / n2, v = a % n2;
    for (Vertex c = a + 1; c < n1 * n2; ++c) {
      const Vertex x = c / n2, y = c % n2;
      if (rule(g.adjacent(u, x), h.adjacent(v, y), u == x, v == y)) b.add_edge(a, c);
    }
  }
  Graph out = std::move(b).build();
  check_degree_identity(k, g, h, out);
  return out;
}

}  // namespace detail

/// G + H: both graphs plus every edge between them. H's vertices follow G's.
inline Graph join(const Graph& g, const Graph& h) {
  const int n1 = g.order(), n2 = h.order();
  GraphBuilder b(composite_order(ProductKind::join, g, h));
  g.for_each_edge([&](Vertex u, Vertex v) { b.add_edge(u, v); });
  h.for_each_edge([&](Vertex u, Vertex v) { b.add_edge(n1 + u, n1 + v); });
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  Graph out = std::move(b).build();
  detail::check_degree_identity(ProductKind::join, g, h, out);
  return out;
}

inline Graph lexicographic(const Graph& g, const Graph& h) {
  return detail::cross_product(ProductKind::lexicographic, g, h,
                               [](bool eg, bool eh, bool su, bool) { return eg || (eh && su); });
}

inline Graph cartesian(const Graph& g, const Graph& h) {
  return detail::cross_product(ProductKind::cartesian, g, h,
                               [](bool eg, bool eh, bool su, bool sv) { return (eg && sv) || (eh && su); });
}

inline Graph strong(const Graph& g, const Graph& h) {
  return detail::cross_product(ProductKind::strong, g, h, [](bool eg, bool eh, bool su, bool sv) {
    return (eg && sv) || (eh && su) || (eg && eh);
  });
}

inline Graph direct(const Graph& g, const Graph& h) {
  return detail::cross_product(ProductKind::direct, g, h, [](bool eg, bool eh, bool, bool) { return eg && eh; });
}

/// G ⊙ H: G on vertices 0..n1-1, then copy i of H on n1 + i*n2 + (0..n2-1),
/// with vertex i of G joined to all of copy i.
inline Graph corona(const Graph& g, const Graph& h) {
  const int n1 = g.order(), n2 = h.order();
  GraphBuilder b(composite_order(ProductKind::corona, g, h));
  g.for_each_edge([&](Vertex u, Vertex v) { b.add_edge(u, v); });
  for (Vertex i = 0; i < n1; ++i) {
    const Vertex base = n1 + i * n2;
    h.for_each_edge([&](Vertex u, Vertex v) { b.add_edge(base + u, base + v); });
    for (Vertex v = 0; v < n2; ++v) b.add_edge(i, base + v);
  }
  Graph out = std::move(b).build();
  detail::check_degree_identity(ProductKind::corona, g, h, out);
  return out;
}

/// Adjacent when adjacent in at least one coordinate.
inline Graph disjunction(const Graph& g, const Graph& h) {
  return detail::cross_product(ProductKind::disjunction, g, h, [](bool eg, bool eh, bool, bool) { return eg || eh; });
}

/// Adjacent when adjacent in exactly one coordinate.
inline Graph symmetric_difference(const Graph& g, const Graph& h) {
  return detail::cross_product(ProductKind::symdiff, g, h, [](bool eg, bool eh, bool, bool) { return eg != eh; });
}

inline Graph apply(ProductKind k, const Graph& g, const Graph& h) {
  switch (k) {
    case ProductKind::join: return join(g, h);
    case ProductKind::lexicographic: return lexicographic(g, h);
    case ProductKind::cartesian: return cartesian(g, h);
    case ProductKind::strong: return strong(g, h);
    case ProductKind::direct: return direct(g, h);
    case ProductKind::corona: return corona(g, h);
    case ProductKind::disjunction: return disjunction(g, h);
    case ProductKind::symdiff: return symmetric_difference(g, h);
  }
  throw InputError("unknown product kind");
}

}  // namespace totirr
