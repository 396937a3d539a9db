#include <gtest/gtest.h>

#include "support.hpp"

using namespace totirr;

namespace {

void expect_report(const BoundReport& r, Int bound, Int actual) {
  EXPECT_EQ(r.bound, bound);
  EXPECT_EQ(r.actual, actual);
  EXPECT_EQ(r.slack, bound - actual);
  EXPECT_EQ(r.tight, bound == actual);
}

}  // namespace

TEST(MaximumIrrT, Values) {
  EXPECT_EQ(bound_theorem1(4), 6);
  EXPECT_EQ(bound_theorem1(1), 0);
  EXPECT_EQ(bound_theorem1(5), 14);
  EXPECT_EQ(bound_theorem1(6), 26);
  EXPECT_EQ(bound_theorem1(7), 44);
  for (Int n = 1; n <= 2000; ++n) EXPECT_NO_THROW(bound_theorem1(n));
  EXPECT_THROW(bound_theorem1(0), InputError);
}

TEST(MaximumIrrT, AttainedByConstruction) {
  for (int n = 2; n <= 60; ++n) EXPECT_EQ(total_irregularity(gen_extremal_total_irr(n)), bound_theorem1(n)) << n;
}

TEST(BoundJoin, Examples) {
  const auto r = bound_join(gen_random_tree(3, 1), gen_complete(2));
  expect_report(r, 6, 6);
  EXPECT_TRUE(r.hypothesis_ok);
  expect_report(bound_join(gen_empty(1), gen_empty(1)), 0, 0);
  expect_report(bound_join(gen_complete(3), gen_complete(2)), 4, 0);
}

TEST(BoundJoin, HypothesisFlags) {
  EXPECT_FALSE(bound_join(gen_path(2), gen_path(3)).hypothesis_ok);
  // Disconnected operands fall outside the claim; this pair really exceeds the formula.
  const auto r = bound_join(gen_complete(2), gen_empty(2));
  EXPECT_FALSE(r.hypothesis_ok);
  EXPECT_EQ(r.actual, 4);
  EXPECT_EQ(r.bound, 0);
  EXPECT_FALSE(r.violated());
  EXPECT_NO_THROW(require_sound(r));
}

TEST(BoundLexicographic, Examples) {
  expect_report(bound_lexicographic(gen_path(4), gen_cycle(3)), 108, 108);
  expect_report(bound_lexicographic(gen_cycle(4), gen_complete(3)), 0, 0);
  expect_report(bound_lexicographic(gen_complete(2), gen_path(3)), 8, 8);
}

TEST(BoundCartesian, Examples) {
  expect_report(bound_cartesian(gen_path(4), gen_cycle(3)), 36, 36);
  expect_report(bound_cartesian(gen_cycle(5), gen_complete(3)), 0, 0);
  expect_report(bound_cartesian(gen_path(3), gen_path(3)), 36, 28);
}

TEST(BoundStrong, Examples) {
  expect_report(bound_strong(gen_path(4), gen_cycle(3)), 108, 108);
  expect_report(bound_strong(gen_cycle(4), gen_cycle(3)), 0, 0);
  expect_report(bound_strong(gen_complete(2), gen_path(3)), 16, 16);
}

TEST(BoundDirect, Examples) {
  expect_report(bound_direct(gen_path(4), gen_cycle(3)), 72, 72);
  expect_report(bound_direct(gen_path(4), gen_empty(3)), 0, 0);
  expect_report(bound_direct(gen_path(3), gen_complete(2)), 8, 8);
}

TEST(BoundCorona, Examples) {
  expect_report(bound_corona(gen_complete(2), gen_empty(1)), 4, 4);
  expect_report(bound_corona(gen_empty(1), gen_empty(1)), 0, 0);
  expect_report(bound_corona(gen_complete(3), gen_complete(2)), 36, 36);
  EXPECT_FALSE(bound_corona(gen_complete(2), gen_complete(3)).hypothesis_ok);
  EXPECT_FALSE(bound_corona(gen_complete(3), gen_empty(2)).hypothesis_ok);
}

TEST(BoundDisjunction, Examples) {
  for (const auto& h : {gen_path(5), gen_star(4), gen_extremal_total_irr(6)}) {
    const auto r = bound_disjunction(gen_empty(1), h);
    expect_report(r, total_irregularity(h), total_irregularity(h));
  }
  expect_report(bound_disjunction(gen_cycle(3), gen_cycle(4)), 0, 0);
  expect_report(bound_disjunction(gen_path(3), gen_complete(2)), 24, 8);
}

TEST(BoundSymdiff, Examples) {
  for (const auto& h : {gen_path(5), gen_star(4)}) {
    const auto r = bound_symdiff(gen_empty(1), h);
    expect_report(r, total_irregularity(h), total_irregularity(h));
  }
  expect_report(bound_symdiff(gen_cycle(3), gen_cycle(3)), 0, 0);
  expect_report(bound_symdiff(gen_path(3), gen_complete(2)), 32, 0);
}

TEST(Bounds, SharpnessFamilies) {
  for (int n1 = 1; n1 <= 7; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2) {
      std::vector<Graph> trees1{gen_path(n1), gen_star(n1)}, trees2{gen_path(n2), gen_star(n2)};
      for (std::uint64_t s = 0; s < 5; ++s) {
        trees1.push_back(gen_random_tree(n1, s));
        trees2.push_back(gen_random_tree(n2, s));
      }
      for (const auto& t : trees1) {
        const auto r = bound_join(t, gen_complete(n2));
        EXPECT_TRUE(r.hypothesis_ok);
        EXPECT_TRUE(r.tight) << n1 << "," << n2;
      }
      for (const auto& t : trees2) {
        const auto r = bound_corona(gen_complete(n1), t);
        EXPECT_TRUE(r.hypothesis_ok);
        EXPECT_TRUE(r.tight) << n1 << "," << n2;
      }
    }
  for (int l = 3; l <= 7; ++l)
    for (int k = 3; k <= 7; ++k)
      for (auto kind : {ProductKind::lexicographic, ProductKind::cartesian, ProductKind::strong, ProductKind::direct})
        EXPECT_TRUE(evaluate_bound(kind, gen_path(l), gen_cycle(k)).tight) << to_string(kind);
}

TEST(Bounds, SoundOnRandomConnectedOperands) {
  SplitMix64 rng(77);
  int checked_pairs = 0;
  while (checked_pairs < 300) {
    const Graph g = test::random_graph(rng, 1, 8), h = test::random_graph(rng, 1, 8);
    for (auto k : all_product_kinds) {
      const auto r = evaluate_bound(k, g, h);
      EXPECT_GE(r.bound, 0);
      if (r.hypothesis_ok) {
        EXPECT_GE(r.slack, 0) << to_string(k) << " " << emit_graph6(g) << " " << emit_graph6(h);
      }
      EXPECT_NO_THROW(require_sound(r));
    }
    ++checked_pairs;
  }
}

TEST(Bounds, RequireSoundThrowsOnNegativeSlack) {
  BoundReport r = bound_cartesian(gen_path(3), gen_path(3));
  r.actual = r.bound + 1;
  r.slack = -1;
  r.tight = false;
  EXPECT_THROW(require_sound(r), BoundViolation);
}

TEST(Bounds, ClosedFormsForPathAndCycle) {
  for (Int l = 3; l <= 8; ++l)
    for (Int k = 3; k <= 8; ++k) {
      const Graph p = gen_path(static_cast<int>(l)), c = gen_cycle(static_cast<int>(k));
      EXPECT_EQ(bound_lexicographic(p, c).actual, 2 * k * k * k * (l - 2));
      EXPECT_EQ(bound_cartesian(p, c).actual, 2 * k * k * (l - 2));
      EXPECT_EQ(bound_strong(p, c).actual, 6 * k * k * (l - 2));
      EXPECT_EQ(bound_direct(p, c).actual, 4 * k * k * (l - 2));
    }
}
