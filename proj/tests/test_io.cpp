#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"

using namespace totirr;

// Reference strings below were cross-checked against networkx's graph6 writer.
TEST(Graph6, ParseExamples) {
  EXPECT_EQ(parse_graph6("Bw"), gen_complete(3));
  EXPECT_EQ(parse_graph6("Bg"), from_edge_list(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(parse_graph6("@"), gen_empty(1));
  EXPECT_EQ(parse_graph6("Ch"), gen_path(4));
  const Graph petersen = from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                             {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen);
}

TEST(Graph6, EmitExamples) {
  EXPECT_EQ(emit_graph6(gen_complete(3)), "Bw");
  EXPECT_EQ(emit_graph6(gen_path(3)), "Bg");
  EXPECT_EQ(emit_graph6(gen_empty(1)), "@");
}

TEST(Graph6, ExtendedHeader) {
  const std::string k63 = emit_graph6(gen_complete(63));
  EXPECT_EQ(k63.substr(0, 4), "~??~");
  EXPECT_EQ(k63.size(), 330U);
  EXPECT_EQ(k63.back(), 'w');
  const std::string p70 = emit_graph6(gen_path(70));
  EXPECT_EQ(p70.size(), 407U);
  EXPECT_EQ(p70.substr(0, 12), "~?@EhCGGC@?G");
  EXPECT_EQ(parse_graph6(p70), gen_path(70));
  EXPECT_EQ(parse_graph6(emit_graph6(gen_cycle(4096))), gen_cycle(4096));
  EXPECT_THROW(emit_graph6(gen_empty(4097)), InputError);
}

TEST(Graph6, RoundTripExhaustiveAndRandom) {
  for (const auto& g : test::all_graphs_up_to(5)) {
    const std::string s = emit_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(emit_graph6(parse_graph6(s)), s);
  }
  SplitMix64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const Graph g = test::random_graph(rng, 1, 100);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
}

TEST(Graph6, Errors) {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.unit(), ParseError::Unit::byte);
      return e.offset();
    }
    ADD_FAILURE() << "no error for '" << s << "'";
    return 0;
  };
  EXPECT_EQ(offset_of(""), 0U);
  EXPECT_EQ(offset_of("?"), 0U);          // n = 0
  EXPECT_EQ(offset_of(" "), 0U);          // header byte below 63
  EXPECT_EQ(offset_of("B"), 1U);          // truncated payload
  EXPECT_EQ(offset_of("Bx"), 1U);         // padding bits set
  EXPECT_EQ(offset_of("Bww"), 2U);        // trailing byte
  EXPECT_EQ(offset_of("C\x7f"), 1U);      // payload byte above 126
  EXPECT_EQ(offset_of("~?"), 2U);         // truncated extended header
  EXPECT_EQ(offset_of("~~??????"), 0U);   // 8-byte header unsupported
  EXPECT_EQ(offset_of("~@?@"), 0U);       // n = 4097 > 4096
}

TEST(EdgeList, Examples) {
  EXPECT_EQ(parse_edge_list("n 3\n0 1\n1 2"), gen_path(3));
  EXPECT_EQ(parse_edge_list("n 2\n\n# no edges"), gen_empty(2));
  EXPECT_EQ(parse_edge_list("# header follows\n  n 4 \n0 1 # first\n\r\n2 3\n0 1\n").size(), 2);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& s) -> std::size_t {
    try {
      parse_edge_list(s);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.unit(), ParseError::Unit::line);
      return e.offset();
    }
    ADD_FAILURE() << "no error";
    return 0;
  };
  EXPECT_EQ(line_of("n 3\n0 0"), 2U);
  EXPECT_EQ(line_of("n 3\n0 1\n\n1 5"), 4U);
  EXPECT_EQ(line_of("n 3\n0 x"), 2U);
  EXPECT_EQ(line_of("n 3\n0 1 2"), 2U);
  EXPECT_EQ(line_of("3\n0 1"), 1U);
  EXPECT_EQ(line_of("n 0"), 1U);
  EXPECT_EQ(line_of("# only a comment\n"), 2U);
}

TEST(EdgeList, RoundTrip) {
  SplitMix64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_graph(rng, 1, 30);
    EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
  }
}

TEST(Records, ParseAsJsonWithFixedKeyOrder) {
  const auto r = bound_cartesian(gen_path(4), gen_cycle(3));
  const std::string line = to_record(r, "Ch", "Bw").line();
  EXPECT_EQ(line,
            R"({"task":"bound","kind":"cartesian","inputs":["Ch","Bw"],"n1":4,"m1":3,"n2":3,"m2":3,)"
            R"("irr_t_g":4,"irr_t_h":0,"actual":36,"bound":36,"slack":0,"tight":true,"hypothesis_ok":true})");
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["slack"], 0);
  EXPECT_EQ(j["tight"], true);
}

TEST(Records, EscapingAndRealFormatting) {
  Record rec;
  rec.field("g6", "a\\b\"c").field("x", 2.0 / 9.0).field("r", Ratio(6, 4)).field("none", std::optional<Int>{});
  EXPECT_EQ(rec.line(), R"({"g6":"a\\b\"c","x":0.222222222222,"r":"3/2","none":null})");
  const auto j = nlohmann::json::parse(rec.line());
  EXPECT_EQ(j["g6"], "a\\b\"c");
  EXPECT_TRUE(j["none"].is_null());
}

TEST(Records, SearchOutcomeRoundTripsThroughJson) {
  const auto o = sweep_operation_bounds(ProductKind::strong, 2, 3);
  const auto j = nlohmann::json::parse(to_record(o).line());
  EXPECT_EQ(j["search"], "sweep");
  EXPECT_EQ(j["cases_examined"], o.cases_examined);
  EXPECT_EQ(j["min_slack"], *o.min_slack);
  EXPECT_EQ(j["max_ratio"], o.max_ratio->str());
  EXPECT_EQ(j["witness"].size(), 2U);
}
