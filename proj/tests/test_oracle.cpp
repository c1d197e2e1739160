#include <gtest/gtest.h>

#include <random>

#include "coct/error.hpp"
#include "coct/oracle.hpp"
#include "coct/random_expr.hpp"
#include "support.hpp"

using namespace coct;
namespace ts = testing_support;

namespace {

LabeledGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
  return LabeledGraph(std::vector<int>(n, 1), edges);
}

VertexSet from_mask(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 1; v <= n; ++v) {
    if (mask >> (v - 1) & 1U) s.insert(v);
  }
  return s;
}

}  // namespace

TEST(BruteForce, Examples) {
  auto one = brute_force_solve(cycle(5), 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->size(), 1);
  EXPECT_FALSE(brute_force_solve(cycle(5), 0).has_value());
  auto none = brute_force_solve(cycle(6), 0);
  ASSERT_TRUE(none.has_value());
  EXPECT_TRUE(none->empty());
  EXPECT_THROW(brute_force_solve(cycle(25), 1), InputError);
}

TEST(BruteForce, AgreesWithDefinition) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 60; ++round) {
    RandomExprOptions opt;
    opt.n = 2 + round % 9;
    opt.k = 1 + round % 3;
    auto g = evaluate(random_expression(opt, rng));
    auto found = brute_force_solve(g, g.num_vertices());
    const int want = ts::min_coct_size(g);
    EXPECT_EQ(found ? found->size() : -1, want);
    if (found) EXPECT_TRUE(verify_coct(g, *found));
  }
}

TEST(Generate, IntroduceCases) {
  auto e = ts::parse("(v 1 2)");
  auto fixed = generate_pair(e, 1, {2});
  ASSERT_TRUE(fixed);
  EXPECT_EQ(fixed->pattern, Pattern({1U | 4U, 4U}));
  EXPECT_EQ(fixed->coloring, Coloring());
  EXPECT_TRUE(fixed->valid);
  EXPECT_EQ(fixed->cost, 1);
  auto black = generate_pair(e, 1, {3});
  ASSERT_TRUE(black);
  EXPECT_EQ(black->pattern, Pattern());
  EXPECT_EQ(black->coloring, Coloring::single(2, Color::black));
  EXPECT_EQ(black->cost, 0);
}

TEST(Generate, JoinTrace) {
  auto e = ts::parse("(e 1 2 (u (v 1 1) (v 2 2)))");
  // Both vertices in S, v0 = 1 fixed, joined and both labels forgotten.
  auto both = generate_pair(e, 1, {4, 0, 2, 1});
  ASSERT_TRUE(both);
  EXPECT_EQ(both->pattern, Pattern());
  EXPECT_EQ(both->cost, 2);
  EXPECT_TRUE(both->valid);
  // Vertex 2 black: label 2 is absent from the pattern, patadd is the identity.
  auto one = generate_pair(e, 1, {1, 0, 2, 3});
  ASSERT_TRUE(one);
  EXPECT_EQ(one->pattern, Pattern({1U | 2U, 2U}));
  EXPECT_EQ(one->coloring, Coloring::single(2, Color::black));
  EXPECT_EQ(one->cost, 1);
  // Two black endpoints of an edge: invalid.
  auto clash = generate_pair(e, 1, {1, 0, 3, 3});
  ASSERT_TRUE(clash);
  EXPECT_FALSE(clash->valid);
}

TEST(Enumerate, SingleIntroduce) {
  auto e = ts::parse("(v 1 1)");
  WeightAssignment wf{4, {{1, 2, 3, 4}}};
  auto counts = enumerate_and_count(e, 2, wf);
  EXPECT_EQ(counts.size(), 4u);
}

TEST(Enumerate, Cap) {
  std::string text = "(v 1 1)";
  for (int v = 2; v <= 11; ++v) text = "(u " + text + " (v " + std::to_string(v) + " 1))";
  auto e = ts::parse(text);
  EXPECT_THROW(enumerate_and_count(e, 1, sample_weights(e, 0)), InputError);
}

TEST(Solution, PatternMatchesSequence) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 40; ++round) {
    RandomExprOptions opt;
    opt.n = 2 + round % 5;
    opt.k = 1 + round % 3;
    auto e = random_expression(opt, rng);
    auto g = evaluate(e);
    const int n = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      auto s = from_mask(n, mask);
      auto witness = two_coloring(g, s);
      if (!witness) continue;
      const int v0 = 1 + static_cast<int>(mask % n);
      auto pair = generate_solution_pair(e, v0, s, *witness);
      EXPECT_EQ(pair.pattern, solution_pattern(g, v0, s));
      EXPECT_EQ(pair.coloring, solution_coloring(g, *witness));
      EXPECT_TRUE(pair.valid);
      EXPECT_EQ(pair.cost, s.size());
    }
  }
}

TEST(Solution, ConnectivityCriterion) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    RandomExprOptions opt;
    opt.n = 1 + round % 6;
    opt.k = 1 + round % 3;
    auto g = evaluate(random_expression(opt, rng));
    const int n = g.num_vertices();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      auto s = from_mask(n, mask);
      for (int v0 = 1; v0 <= n; ++v0) {
        const bool want = ts::connected_subset(g, mask) && s.contains(v0);
        EXPECT_EQ(ts::consistent(solution_pattern(g, v0, s), Pattern()), want);
      }
    }
  }
}

// A size-b connected OCT containing v0 exists iff some valid
// action-sequence of cost b generates ([0], c).
TEST(Solution, SequencesCharacterizeSolutions) {
  std::mt19937_64 rng(47);
  int checked = 0;
  for (int round = 0; round < 200 && checked < 25; ++round) {
    RandomExprOptions opt;
    opt.n = 2 + round % 5;
    opt.k = 1 + round % 3;
    auto e = random_expression(opt, rng);
    const auto wnodes = node_sets(e).wnodes;
    if (wnodes.size() > 7) continue;
    ++checked;
    auto g = evaluate(e);
    const int n = g.num_vertices();
    for (int v0 = 1; v0 <= n; ++v0) {
      std::vector<bool> by_sequences(n + 1, false), by_subsets(n + 1, false);
      ActionSequence tau(e.size(), 0);
      for (std::uint32_t code = 0; code < (1U << (2 * wnodes.size())); ++code) {
        for (std::size_t p = 0; p < wnodes.size(); ++p) tau[wnodes[p]] = static_cast<int>(code >> (2 * p) & 3U) + 1;
        auto pair = generate_pair(e, v0, tau);
        if (pair && pair->valid && pair->pattern == Pattern()) by_sequences[pair->cost] = true;
      }
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        if (!(mask >> (v0 - 1) & 1U)) continue;
        if (ts::connected_subset(g, mask) && ts::bipartite_without(g, mask)) by_subsets[__builtin_popcount(mask)] = true;
      }
      for (int b = 1; b <= n; ++b) EXPECT_EQ(by_sequences[b], by_subsets[b]) << "v0=" << v0 << " b=" << b;
    }
  }
  EXPECT_EQ(checked, 25);
}
