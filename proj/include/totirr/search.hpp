#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "totirr/bounds.hpp"
#include "totirr/generators.hpp"
#include "totirr/graph6.hpp"
#include "totirr/rational.hpp"

namespace totirr {

/**
 * All labelled simple graphs on n vertices, indexed 0 .. 2^(n(n-1)/2) - 1.
 *
 * The index read as an L-bit binary string (most significant bit first) is
 * the upper-triangle string x(0,1), x(0,2), x(1,2), x(0,3), ... used by
 * graph6, so iteration order is lexicographic in that string.
 */
class LabeledGraphs {
 public:
  static constexpr int max_order = 8;
  static constexpr int default_max_order = 7;

  /// n = 8 (2^28 graphs) must be requested explicitly.
  explicit LabeledGraphs(int n, bool allow_order_8 = false) : n_(n) {
    const int cap = allow_order_8 ? max_order : default_max_order;
    if (n < 1 || n > cap)
      throw InputError("labelled enumeration supports 1 <= n <= " + std::to_string(cap) + ", got " +
                       std::to_string(n) + (n == max_order ? " (n = 8 requires explicit opt-in)" : ""));
    slots_ = n * (n - 1) / 2;
  }

  int order() const { return n_; }
  int edge_slots() const { return slots_; }
  std::uint64_t count() const { return std::uint64_t{1} << slots_; }

  /// Endpoints of the k-th upper-triangle entry in graph6 order.
  static std::pair<Vertex, Vertex> slot_pair(int k) {
    Vertex v = 1;
    while (k >= v) {
      k -= v;
      ++v;
    }
    return {k, v};
  }

  Graph at(std::uint64_t index) const {
    GraphBuilder b(n_);
    for (int k = 0; k < slots_; ++k)
      if ((index >> (slots_ - 1 - k)) & 1U) {
        auto [u, v] = slot_pair(k);
        b.add_edge(u, v);
      }
    return std::move(b).build();
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LabeledGraphs* src, std::uint64_t i) : src_(src), i_(i) {}

    Graph operator*() const { return src_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }
    std::uint64_t index() const { return i_; }

   private:
    const LabeledGraphs* src_ = nullptr;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }

 private:
  int n_;
  int slots_;
};

inline LabeledGraphs enumerate_labeled_graphs(int n, bool allow_order_8 = false) {
  return LabeledGraphs(n, allow_order_8);
}

/**
 * Splits [0, count) into `workers` contiguous blocks, runs work(begin, end)
 * on each in its own thread, and folds the partials in block order with
 * merge(acc, next). When each partial keeps its lowest-index witness and
 * merge only replaces on strict improvement, the result does not depend on
 * the worker count.
 */
template <class Partial, class Work, class Merge>
Partial reduce_blocks(std::uint64_t count, int workers, Work work, Merge merge) {
  if (workers < 1) throw InputError("worker count must be at least 1");
  const std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), std::max<std::uint64_t>(count, 1));
  std::vector<Partial> partials(w);
  auto bounds_of = [&](std::uint64_t b) { return std::pair{count * b / w, count * (b + 1) / w}; };
  if (w == 1) {
    partials[0] = work(std::uint64_t{0}, count);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(w);
    std::vector<std::exception_ptr> errors(w);
    for (std::uint64_t b = 0; b < w; ++b)
      pool.emplace_back([&, b] {
        try {
          auto [lo, hi] = bounds_of(b);
          partials[b] = work(lo, hi);
        } catch (...) {
          errors[b] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Partial acc = std::move(partials[0]);
  for (std::uint64_t b = 1; b < w; ++b) merge(acc, partials[b]);
  return acc;
}

enum class SearchTask { theorem1, sweep, probe };

inline constexpr std::string_view to_string(SearchTask t) {
  switch (t) {
    case SearchTask::theorem1: return "theorem1";
    case SearchTask::sweep: return "sweep";
    case SearchTask::probe: return "probe";
  }
  return "?";
}

struct SearchOutcome {
  SearchTask task{};
  std::optional<ProductKind> kind;
  int n = 0;
  int n1 = 0, n2 = 0;
  std::uint64_t cases_examined = 0;
  /// Pairs on which the bound is claimed (sweep, probe).
  std::uint64_t hypothesis_cases = 0;

  std::optional<Int> max_value;  ///< theorem1
  std::optional<Int> bound;      ///< theorem1
  std::optional<Int> min_slack;  ///< sweep, probe
  std::optional<Ratio> max_ratio;

  /// graph6 witnesses: the extremal graph (theorem1), the minimum-slack pair
  /// (sweep) or the maximum-ratio pair (probe).
  std::vector<std::string> witness;

  /// Hypothesis-satisfying pairs with actual > bound. Nonzero means a bound is false.
  std::uint64_t violations = 0;
  /// Pairs outside the hypothesis with actual > bound (informational).
  std::uint64_t unflagged_violations = 0;

  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;

  /// The search contradicted a claimed maximum or bound.
  bool falsified() const {
    if (task == SearchTask::theorem1) return max_value != bound;
    return violations > 0;
  }
};

namespace detail {

/// Byte-lane degree vectors for an index range of at most 8 vertices:
/// table[mask] holds, in byte u, how many of the mask's slots touch u.
inline std::vector<std::uint64_t> lane_table(int slots, int first_bit, int bit_count) {
  std::vector<std::uint64_t> table(std::size_t{1} << bit_count, 0);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const int b = std::countr_zero(mask);
    const auto [u, v] = LabeledGraphs::slot_pair(slots - 1 - (first_bit + b));
    table[mask] = table[mask & (mask - 1)] + (std::uint64_t{1} << (8 * u)) + (std::uint64_t{1} << (8 * v));
  }
  return table;
}

inline Int lane_total_irregularity(std::uint64_t lanes, int n) {
  std::array<int, 8> d{};
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = static_cast<int>((lanes >> (8 * i)) & 0xFF);
  Int acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc += std::abs(d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)]);
  return acc;
}

struct MaxPartial {
  Int best = -1;
  std::uint64_t index = 0;
};

}  // namespace detail

/**
 * Exhaustive maximum of irr_t over all labelled graphs on n vertices,
 * compared against bound_theorem1(n). Degrees are assembled from two lookup
 * tables (low and high halves of the index) as packed byte lanes.
 */
inline SearchOutcome verify_theorem1(int n, int workers = 1, bool allow_order_8 = false) {
  if (n < 2) throw InputError("theorem1 search needs n >= 2, got " + std::to_string(n));
  const LabeledGraphs all(n, allow_order_8);
  const int slots = all.edge_slots();
  const int low_bits = slots / 2;
  const int high_bits = slots - low_bits;
  const auto low = detail::lane_table(slots, 0, low_bits);
  const auto high = detail::lane_table(slots, low_bits, high_bits);
  const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    detail::MaxPartial p;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t lanes = high[i >> low_bits] + low[i & low_mask];
      const Int v = detail::lane_total_irregularity(lanes, n);
      if (v > p.best) {
        p.best = v;
        p.index = i;
      }
    }
    return p;
  };
  auto merge = [](detail::MaxPartial& acc, const detail::MaxPartial& next) {
    if (next.best > acc.best) acc = next;
  };
  const auto best = reduce_blocks<detail::MaxPartial>(all.count(), workers, work, merge);

  SearchOutcome out;
  out.task = SearchTask::theorem1;
  out.n = n;
  out.cases_examined = all.count();
  out.max_value = best.best;
  out.bound = bound_theorem1(n);
  out.witness = {emit_graph6(all.at(best.index))};
  return out;
}

namespace detail {

struct PairPartial {
  std::uint64_t cases = 0;
  std::uint64_t hypothesis_cases = 0;
  std::optional<Int> min_slack;
  std::uint64_t slack_index = 0;
  std::optional<Ratio> max_ratio;
  std::uint64_t ratio_index = 0;
  std::uint64_t violations = 0;
  std::uint64_t unflagged_violations = 0;

  void observe(const BoundReport& r, std::uint64_t index) {
    ++cases;
    if (!r.hypothesis_ok) {
      if (r.slack < 0) ++unflagged_violations;
      return;
    }
    ++hypothesis_cases;
    if (r.slack < 0) ++violations;
    if (!min_slack || r.slack < *min_slack) {
      min_slack = r.slack;
      slack_index = index;
    }
    if (r.bound > 0) {
      const Ratio q(std::max<Int>(r.actual, 0), r.bound);
      if (!max_ratio || q > *max_ratio) {
        max_ratio = q;
        ratio_index = index;
      }
    }
  }

  void merge(const PairPartial& o) {
    cases += o.cases;
    hypothesis_cases += o.hypothesis_cases;
    violations += o.violations;
    unflagged_violations += o.unflagged_violations;
    if (o.min_slack && (!min_slack || *o.min_slack < *min_slack)) {
      min_slack = o.min_slack;
      slack_index = o.slack_index;
    }
    if (o.max_ratio && (!max_ratio || *o.max_ratio > *max_ratio)) {
      max_ratio = o.max_ratio;
      ratio_index = o.ratio_index;
    }
  }
};

struct Operand {
  Graph graph;
  OperandStats stats;

  explicit Operand(Graph g) : graph(std::move(g)), stats(OperandStats::of(graph)) {}
};

inline BoundReport evaluate_pair(ProductKind k, const Operand& g, const Operand& h) {
  return make_bound_report(k, g.stats, h.stats, total_irregularity(apply(k, g.graph, h.graph)));
}

}  // namespace detail

inline constexpr int sweep_max_order = 4;

/**
 * Evaluates the bound for `kind` on every pair of labelled graphs with
 * exactly n1 and n2 vertices. Pair index i * 2^(n2(n2-1)/2) + j pairs the
 * i-th graph on n1 vertices with the j-th on n2.
 */
inline SearchOutcome sweep_operation_bounds(ProductKind kind, int n1, int n2, int workers = 1) {
  if (n1 < 1 || n2 < 1 || n1 > sweep_max_order || n2 > sweep_max_order)
    throw InputError("sweep supports operand orders in [1, " + std::to_string(sweep_max_order) + "]");
  const LabeledGraphs left_all(n1), right_all(n2);
  std::vector<detail::Operand> left, right;
  for (const auto& g : left_all) left.emplace_back(g);
  for (const auto& h : right_all) right.emplace_back(h);
  const std::uint64_t c2 = right.size();

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    detail::PairPartial p;
    for (std::uint64_t i = begin; i < end; ++i) p.observe(detail::evaluate_pair(kind, left[i / c2], right[i % c2]), i);
    return p;
  };
  const auto r = reduce_blocks<detail::PairPartial>(
      left.size() * c2, workers, work, [](detail::PairPartial& a, const detail::PairPartial& b) { a.merge(b); });

  SearchOutcome out;
  out.task = SearchTask::sweep;
  out.kind = kind;
  out.n1 = n1;
  out.n2 = n2;
  out.cases_examined = r.cases;
  out.hypothesis_cases = r.hypothesis_cases;
  out.min_slack = r.min_slack;
  out.max_ratio = r.max_ratio;
  out.violations = r.violations;
  out.unflagged_violations = r.unflagged_violations;
  if (r.min_slack)
    out.witness = {emit_graph6(left[r.slack_index / c2].graph), emit_graph6(right[r.slack_index % c2].graph)};
  return out;
}

/**
 * Fixed operand families tried by the probe before random sampling: K_1 and,
 * at order n, the path, star, complete graph, empty graph, cycle (n >= 3),
 * maximum-irr_t graph (n >= 2) and a random tree. Duplicates are dropped.
 */
inline std::vector<Graph> probe_battery(int n, std::uint64_t seed) {
  std::vector<Graph> out;
  auto add = [&](Graph g) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  };
  add(gen_empty(1));
  add(gen_path(n));
  add(gen_star(n));
  add(gen_complete(n));
  add(gen_empty(n));
  if (n >= 3) add(gen_cycle(n));
  if (n >= 2) add(gen_extremal_total_irr(n));
  add(gen_random_tree(n, seed));
  return out;
}

inline constexpr int probe_max_composite = 4096;

/**
 * Empirical look at how close the disjunction and symmetric-difference
 * bounds come to being attained. Runs the fixed battery (all pairs), then
 * `samples` pairs of G(n1, 1/2) and G(n2, 1/2) graphs; sample s draws from
 * SplitMix64(seed).split(s).
 */
inline SearchOutcome probe_open_problem(ProductKind kind, int n1, int n2, std::uint64_t samples, std::uint64_t seed,
                                        int workers = 1) {
  if (kind != ProductKind::disjunction && kind != ProductKind::symdiff)
    throw InputError("probe supports disjunction and symdiff only");
  if (n1 < 1 || n2 < 1 || Int{n1} * n2 > probe_max_composite)
    throw InputError("probe needs n1, n2 >= 1 and n1 * n2 <= " + std::to_string(probe_max_composite));

  std::vector<detail::Operand> left, right;
  for (auto& g : probe_battery(n1, seed)) left.emplace_back(std::move(g));
  for (auto& h : probe_battery(n2, seed ^ 0x5DEECE66DULL)) right.emplace_back(std::move(h));
  const std::uint64_t battery = left.size() * right.size();
  const SplitMix64 root(seed);

  auto operands = [&](std::uint64_t i) -> std::pair<detail::Operand, detail::Operand> {
    if (i < battery) return {left[i / right.size()], right[i % right.size()]};
    SplitMix64 rng = root.split(i - battery);
    Graph g = gen_random_graph(n1, rng);
    Graph h = gen_random_graph(n2, rng);
    return {detail::Operand(std::move(g)), detail::Operand(std::move(h))};
  };

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    detail::PairPartial p;
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto [g, h] = operands(i);
      p.observe(detail::evaluate_pair(kind, g, h), i);
    }
    return p;
  };
  const auto r = reduce_blocks<detail::PairPartial>(
      battery + samples, workers, work, [](detail::PairPartial& a, const detail::PairPartial& b) { a.merge(b); });

  SearchOutcome out;
  out.task = SearchTask::probe;
  out.kind = kind;
  out.n1 = n1;
  out.n2 = n2;
  out.cases_examined = r.cases;
  out.hypothesis_cases = r.hypothesis_cases;
  out.min_slack = r.min_slack;
  out.max_ratio = r.max_ratio;
  out.violations = r.violations;
  out.unflagged_violations = r.unflagged_violations;
  out.seed = seed;
  out.samples = samples;
  if (r.max_ratio) {
    const auto [g, h] = operands(r.ratio_index);
    out.witness = {emit_graph6(g.graph), emit_graph6(h.graph)};
  }
  return out;
}

}  // namespace totirr
