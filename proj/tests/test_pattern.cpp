#include <gtest/gtest.h>

#include "coct/error.hpp"
#include "coct/pattern.hpp"
#include "support.hpp"

using namespace coct;

namespace {

constexpr std::uint32_t Z = 1U;
constexpr std::uint32_t L1 = 2U;
constexpr std::uint32_t L2 = 4U;

Pattern P(std::vector<std::uint32_t> sets) { return Pattern(std::move(sets)); }

}  // namespace

TEST(Pattern, Validation) {
  EXPECT_THROW(P({L1}), InputError);
  EXPECT_THROW(P({Z, Z | L1}), InputError);
  EXPECT_THROW(P({Z, 0}), InputError);
  EXPECT_EQ(Pattern(), P({Z}));
}

TEST(Pattern, Join) {
  EXPECT_EQ(pattern_join(P({Z, L1 | L2}), P({Z | L1, L2})), P({Z | L1 | L2}));
  EXPECT_EQ(pattern_join(P({Z, L1, L2}), P({Z, L1, L2})), P({Z, L1, L2}));
  EXPECT_EQ(pattern_join(P({Z | L1, L1 | L2}), Pattern()), P({Z | L1, L1 | L2}));
}

TEST(Pattern, Relabel) {
  EXPECT_EQ(pattern_relabel(P({Z, L1}), 1, 2), P({Z, L2}));
  EXPECT_EQ(pattern_relabel(P({Z | L1, L1 | L2}), 1, 2), P({Z | L2, L2}));
  EXPECT_EQ(pattern_relabel(P({Z, L1, L2}), 1, 2), P({Z, L2}));
}

TEST(Pattern, Union) {
  EXPECT_EQ(pattern_union(P({Z | L1}), P({Z, L2})), P({Z | L1, L2}));
  EXPECT_EQ(pattern_union(P({Z, L1}), P({Z, L1})), P({Z, L1}));
}

TEST(Pattern, Patadd) {
  EXPECT_EQ(patadd(P({Z, L1}), 1, 2), P({Z, L1}));
  EXPECT_EQ(patadd(P({Z, L1, L2}), 1, 2), P({Z, L1 | L2}));
  EXPECT_EQ(patadd(P({Z | L1, L2}), 1, 2), P({Z | L1 | L2}));
}

TEST(Pattern, FixForget) {
  EXPECT_EQ(fix(P({Z, L1 | L2}), 1), P({Z, L1 | L2, L1}));
  EXPECT_EQ(forget(P({Z, L1 | L2}), 1), P({Z, L2}));
  EXPECT_EQ(fix(P({Z, L1}), 1), P({Z, L1}));
}

TEST(Pattern, Actions) {
  const auto complete = P({Z, L1, L2});
  for (int l = 1; l <= 4; ++l) EXPECT_EQ(action(complete, l), complete);
  EXPECT_FALSE(action(P({Z, L1 | L2}), 4).has_value());
  EXPECT_EQ(action(P({Z | L1 | L2}), 4), P({Z}));
  EXPECT_EQ(action(P({Z, L1 | L2}), 2), P({Z, L1}));
  EXPECT_EQ(action(P({Z, L1 | L2}), 3), P({Z, L2}));
  EXPECT_FALSE(action(P({Z | L1}), 3).has_value());
  EXPECT_FALSE(action(P({Z | L1}), 4).has_value());
  EXPECT_EQ(action(P({Z | L1}), 1), P({Z | L1, L1}));
  EXPECT_EQ(action(P({Z | L1}), 2), P({Z}));
}

TEST(Pattern, Consistency) {
  EXPECT_TRUE(consistent(Pattern(), Pattern()));
  EXPECT_TRUE(consistent(P({Z, L1 | L2}), P({Z | L1, L2})));
  EXPECT_FALSE(consistent(P({Z, L1}), P({Z, L1})));
}

TEST(Pattern, Parrep) {
  const auto cs = P({Z | L1, L1, L2});
  EXPECT_EQ(parrep(cs), std::vector<Pattern>{cs});
  auto got = parrep(P({Z, L1, L2, L1 | L2}));
  std::vector<Pattern> want{P({Z, L1, L2}), P({Z | L1, L1, L2}), P({Z | L2, L1, L2})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_THROW(parrep(P({Z, L1 | L2})), InputError);
}

TEST(Pattern, ParrepShape) {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& p : all_patterns(k)) {
      if (!p.is_complete()) continue;
      const auto reps = parrep(p);
      std::uint32_t nonsingleton = 0;
      for (auto s : p.sets()) {
        if (!(s & Z) && __builtin_popcount(s) > 1) nonsingleton |= s;
      }
      EXPECT_LE(reps.size(), std::size_t{1} << __builtin_popcount(nonsingleton));
      for (const auto& r : reps) {
        EXPECT_TRUE(r.is_cs());
        EXPECT_EQ(r.lbs(), p.lbs());
        EXPECT_EQ(r.zero_set() & p.zero_set(), p.zero_set());
      }
    }
  }
}

TEST(Pattern, ParrepPairBound) {
  // A complete pattern whose only non-singleton non-zero set is a pair.
  EXPECT_LE(parrep(P({Z, L1, L2, L1 | L2})).size(), 4u);
  EXPECT_LE(parrep(P({Z | L1, L1, L2, L1 | L2})).size(), 4u);
}

TEST(Pattern, ConsistencyAgreesWithDefinition) {
  for (int k = 1; k <= 2; ++k) {
    const auto all = all_patterns(k);
    for (const auto& p : all) {
      for (const auto& q : all) {
        EXPECT_EQ(consistent(p, q), testing_support::consistent(p, q)) << to_string(p) << " " << to_string(q);
      }
    }
  }
}

TEST(Pattern, ZeroOnlyCompleteConsistent) {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& p : all_patterns(k)) {
      if (p.is_complete()) EXPECT_EQ(testing_support::consistent(p, Pattern()), p == Pattern());
    }
  }
}

TEST(Pattern, Enumeration) {
  EXPECT_EQ(all_patterns(0).size(), 1u);
  EXPECT_EQ(all_cs_patterns(1).size(), 3u);
  EXPECT_EQ(all_cs_patterns(3).size(), 27u);
  for (const auto& cs : all_cs_patterns(3)) {
    EXPECT_TRUE(cs.to_pattern().is_cs());
    EXPECT_EQ(CsPattern(cs.to_pattern()), cs);
  }
}

TEST(Pattern, Printing) { EXPECT_EQ(to_string(P({Z | L1, L1, L2})), "[0 1 | 1 | 2]"); }
