#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "coct/clique_expr.hpp"
#include "coct/error.hpp"
#include "coct/random_expr.hpp"

using namespace coct;

TEST(Parse, SingleIntroduce) {
  auto e = parse_expression("(v 1 1)");
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.node(0).kind, NodeKind::introduce);
  EXPECT_EQ(e.width(), 1);
}

TEST(Parse, JoinOverUnion) {
  auto e = parse_expression("(e 1 2 (u (v 1 1) (v 2 2)))");
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e.node(0).kind, NodeKind::join);
  EXPECT_EQ(e.node(1).kind, NodeKind::union_);
  auto g = evaluate(e);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_expression("(e 1 1 (v 1 1))"), ParseError);
  EXPECT_THROW(parse_expression("(v 1 1"), ParseError);
  EXPECT_THROW(parse_expression("(x 1 1)"), ParseError);
  EXPECT_THROW(parse_expression("(v 1 0)"), ParseError);
  EXPECT_THROW(parse_expression("(u (v 1 1) (v 1 2))"), InputError);
  EXPECT_THROW(parse_expression("(v 1 1) (v 2 1)"), ParseError);
  EXPECT_THROW(parse_expression("(v 1 5)", 4), ParseError);
}

TEST(Parse, ErrorPosition) {
  try {
    parse_expression("(u (v 1 1)\n   (q 2 2))");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 2);
    EXPECT_EQ(err.column(), 5);
  }
}

TEST(Parse, Comments) {
  auto e = parse_expression("; a single edge\n(e 1 2 ; join\n (u (v 1 1) (v 2 2)))\n");
  EXPECT_EQ(evaluate(e).num_edges(), 1u);
}

TEST(Evaluate, Star) {
  auto g = evaluate(parse_expression("(e 1 2 (u (u (v 1 1) (v 2 1)) (v 3 2)))"));
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 3}));
  EXPECT_EQ(g.edges()[1], (Edge{2, 3}));
}

TEST(Evaluate, Relabel) {
  auto g = evaluate(parse_expression("(r 1 2 (v 1 1))"));
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.label(1), 2);
}

TEST(Evaluate, RequiresDenseIds) { EXPECT_THROW(evaluate(parse_expression("(u (v 1 1) (v 3 1))")), InputError); }

TEST(Width, Linearity) {
  auto a = parse_expression("(v 1 3)");
  EXPECT_EQ(a.width(), 3);
  EXPECT_TRUE(a.is_linear());
  auto b = parse_expression("(u (u (v 1 1)(v 2 1)) (u (v 3 1)(v 4 1)))");
  EXPECT_FALSE(b.is_linear());
  auto c = parse_expression("(e 1 2 (u (r 1 2 (u (v 1 1) (v 2 1))) (v 3 1)))");
  EXPECT_TRUE(c.is_linear());
}

TEST(NodeSets, Counts) {
  auto a = node_sets(parse_expression("(v 1 1)"));
  EXPECT_EQ(a.cnodes, std::vector<int>{0});
  EXPECT_EQ(a.wnodes, std::vector<int>{0});
  auto b = node_sets(parse_expression("(e 1 2 (u (v 1 1)(v 2 2)))"));
  EXPECT_EQ(b.cnodes.size(), 2u);
  EXPECT_EQ(b.wnodes.size(), 3u);
  auto c = node_sets(parse_expression("(r 1 2 (v 1 1))"));
  EXPECT_EQ(c.wnodes.size(), 1u);
}

TEST(Serialize, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    RandomExprOptions opt;
    opt.n = 1 + round % 9;
    opt.k = 1 + round % 4;
    opt.linear = round % 3 == 0;
    auto e = random_expression(opt, rng);
    auto text = serialize(e);
    auto back = parse_expression(text);
    EXPECT_EQ(back, e);
    EXPECT_EQ(serialize(back), text);
    EXPECT_LE(e.width(), opt.k);
    if (opt.linear) EXPECT_TRUE(e.is_linear());
    EXPECT_EQ(evaluate(e).num_vertices(), opt.n);
  }
}

TEST(Postorder, ChildrenFirst) {
  auto e = parse_expression("(e 1 2 (u (u (v 1 1) (v 2 1)) (v 3 2)))");
  auto order = e.postorder();
  ASSERT_EQ(order.size(), e.size());
  std::vector<int> pos(e.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (std::size_t x = 0; x < e.size(); ++x) {
    const auto& n = e.node(static_cast<int>(x));
    if (n.left >= 0) EXPECT_LT(pos[n.left], pos[x]);
    if (n.right >= 0) EXPECT_LT(pos[n.right], pos[x]);
  }
}

TEST(Parse, DeepExpression) {
  std::string text;
  const int n = 200000;
  for (int v = 1; v < n; ++v) text += "(u ";
  text += "(v 1 1)";
  for (int v = 2; v <= n; ++v) text += " (v " + std::to_string(v) + " 1))";
  auto e = parse_expression(text);
  EXPECT_EQ(e.num_vertices(), n);
  EXPECT_EQ(evaluate(e).num_edges(), 0u);
  EXPECT_EQ(serialize(e).size(), text.size() + 1);
}
