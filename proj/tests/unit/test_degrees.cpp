#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "wadge/degrees.hpp"
#include "wadge/gallery.hpp"

namespace wadge {
namespace {

TEST(Degrees, SinglePoint) {
  const auto p = gallery::chain(1);
  const auto d = degree_structure(p, all_subsets(p));
  ASSERT_EQ(d.class_count(), 2u);
  EXPECT_FALSE(d.comparable(0, 1));
  EXPECT_EQ(d.diagnostics.max_antichain, 2u);
}

TEST(Degrees, TwoChain) {
  const auto l2 = gallery::chain(2);
  const auto d = degree_structure(l2, all_subsets(l2));
  ASSERT_EQ(d.class_count(), 4u);
  const auto empty = d.class_of[0b00], whole = d.class_of[0b11];
  const auto bottom = d.class_of[0b01], top = d.class_of[0b10];
  EXPECT_FALSE(d.comparable(empty, whole));
  EXPECT_FALSE(d.comparable(top, bottom));
  for (auto lo : {empty, whole}) {
    for (auto hi : {top, bottom}) EXPECT_TRUE(d.less[lo][hi]);
  }
  EXPECT_EQ(d.hasse.size(), 4u);
  const auto label = structure_label(d);
  EXPECT_TRUE(label.finitely_very_good);
  EXPECT_EQ(label.max_antichain, 2u);
  EXPECT_EQ(label.slo_violation_count, 0u);
}

TEST(Degrees, OrderMatchesExhaustiveReducibility) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_poset(rng, 1 + trial % 4);
    const auto d = degree_structure(p, all_subsets(p));
    for (std::size_t i = 0; i < d.items.size(); ++i) {
      for (std::size_t j = 0; j < d.items.size(); ++j) {
        const bool leq = testing::brute_reduces(p, d.items[i].bits(), d.items[j].bits());
        const auto ci = d.class_of[i], cj = d.class_of[j];
        EXPECT_EQ(leq, ci == cj || d.less[ci][cj]);
      }
    }
    // SLO violations are exactly the pairs failing A <= B or co-B <= A.
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t a = 0; a < d.class_count(); ++a) {
      for (std::size_t b = 0; b < d.class_count(); ++b) {
        const auto ra = d.representative(a), rb = d.representative(b);
        if (!testing::brute_reduces(p, ra.bits(), rb.bits()) &&
            !testing::brute_reduces(p, rb.complement().bits(), ra.bits())) {
          expected.emplace(a, b);
        }
      }
    }
    const std::set<std::pair<std::size_t, std::size_t>> got(d.diagnostics.slo_violations.begin(),
                                                            d.diagnostics.slo_violations.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(Degrees, ArbitraryMapsGiveThreeDegrees) {
  std::mt19937_64 rng(61);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto p = testing::random_poset(rng, n);
    const auto d = degree_structure(p, all_subsets(p), ReducibilityKind::AllFunctions);
    ASSERT_EQ(d.class_count(), 3u);
    const auto empty = d.class_of.front(), whole = d.class_of.back();
    EXPECT_FALSE(d.comparable(empty, whole));
    for (std::size_t c = 0; c < 3; ++c) {
      if (c != empty && c != whole) EXPECT_TRUE(d.less[empty][c] && d.less[whole][c]);
    }
  }
}

TEST(Degrees, MaximumAntichainMatchesBruteForce) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_poset(rng, 1 + trial % 12, 0.2);
    std::vector<std::vector<bool>> less(p.size(), std::vector<bool>(p.size()));
    for (Element i = 0; i < p.size(); ++i) {
      for (Element j = 0; j < p.size(); ++j) less[i][j] = p.less(i, j);
    }
    const auto chain = maximum_antichain(less);
    EXPECT_EQ(chain.size(), testing::brute_max_antichain(less));
    for (auto i : chain) {
      for (auto j : chain) EXPECT_FALSE(less[i][j]);
    }
  }
}

TEST(Degrees, ConstantPartitions) {
  for (std::size_t k = 3; k <= 4; ++k) {
    const auto p = gallery::chain(3);
    std::vector<KPartition> items;
    for (std::size_t c = 0; c < k; ++c) items.push_back(KPartition::constant(p, k, c));
    const auto d = degree_structure(p, items);
    EXPECT_EQ(d.class_count(), k);
    EXPECT_EQ(d.diagnostics.max_antichain, k);
    EXPECT_FALSE(d.diagnostics.slo_applicable);
    EXPECT_FALSE(structure_label(d).finitely_very_good);
  }
}

TEST(Degrees, CapsAndQuotient) {
  EXPECT_THROW(all_subsets(gallery::antichain(7)), CapExceeded);
  const auto l2 = gallery::chain(2);
  const auto q = quotient_poset(degree_structure(l2, all_subsets(l2)));
  EXPECT_TRUE(poset_isomorphic(q, gallery::lex_product(gallery::antichain(2), gallery::chain(2))).has_value());
}

}  // namespace
}  // namespace wadge
