#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "wadge/gallery.hpp"
#include "wadge/reduction.hpp"

namespace wadge {
namespace {

TEST(Monotone, Examples) {
  const auto l2 = gallery::chain(2);
  EXPECT_TRUE(is_monotone(l2, SelfMap::identity(l2)));
  EXPECT_TRUE(is_monotone(l2, SelfMap::constant(l2, 1)));
  EXPECT_FALSE(is_monotone(l2, SelfMap(l2, {1, 0})));
  EXPECT_THROW(MonotoneMap::checked(l2, SelfMap(l2, {1, 0})), Error);
  EXPECT_THROW(is_monotone(gallery::chain(2), SelfMap::identity(l2)), SpaceMismatch);
}

TEST(Monotone, MatchesPairwiseDefinition) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_poset(rng, 5);
    std::vector<Element> image(p.size());
    std::uniform_int_distribution<Element> pick(0, p.size() - 1);
    for (auto& y : image) y = pick(rng);
    EXPECT_EQ(is_monotone(p, SelfMap(p, image)), testing::brute_monotone(p, image));
  }
}

TEST(WadgeReduces, Examples) {
  const auto l2 = gallery::chain(2);
  const auto top = SubsetMask::of(l2, {"1"});
  const auto bottom = SubsetMask::of(l2, {"0"});
  EXPECT_FALSE(wadge_reduces(l2, top, bottom).has_value());
  EXPECT_TRUE(wadge_leq(l2, bottom, top) == false);
  EXPECT_TRUE(wadge_leq(l2, top, top));
  EXPECT_TRUE(wadge_leq(l2, SubsetMask::none(l2), top));
  EXPECT_TRUE(wadge_leq(l2, SubsetMask::none(l2), bottom));
  EXPECT_FALSE(wadge_leq(l2, SubsetMask::none(l2), SubsetMask::whole(l2)));
  EXPECT_TRUE(wadge_leq(l2, top, bottom, ReducibilityKind::AllFunctions));
}

TEST(WadgeReduces, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = testing::random_poset(rng, 1 + trial % 6);
    const auto a = testing::random_subset(rng, p);
    const auto b = testing::random_subset(rng, p);
    const auto f = wadge_reduces(p, a, b);
    ASSERT_EQ(f.has_value(), testing::brute_reduces(p, a.bits(), b.bits())) << trial;
    if (f) {
      EXPECT_TRUE(is_monotone(p, *f));
      EXPECT_EQ(preimage(p, *f, b), a);
    }
  }
}

TEST(PartitionReduces, CharacteristicAgreesWithSets) {
  const auto l3 = gallery::chain(3);
  for (Bits a = 0; a < 8; ++a) {
    for (Bits b = 0; b < 8; ++b) {
      const SubsetMask sa(l3, a), sb(l3, b);
      EXPECT_EQ(partition_leq(l3, KPartition::characteristic(l3, sa), KPartition::characteristic(l3, sb)),
                wadge_leq(l3, sa, sb));
    }
  }
}

TEST(PartitionReduces, ConstantsAreIrreducible) {
  const auto l3 = gallery::chain(3);
  const auto mu = KPartition::constant(l3, 3, 0);
  EXPECT_TRUE(partition_leq(l3, mu, mu));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(partition_leq(l3, KPartition::constant(l3, 3, i), KPartition::constant(l3, 3, j)), i == j);
    }
  }
  EXPECT_THROW(partition_reduces(l3, KPartition::constant(l3, 3, 0), KPartition::constant(l3, 4, 0)),
               ColorCountMismatch);
}

TEST(PartitionReduces, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testing::random_poset(rng, 2 + trial % 4);
    const std::size_t k = 2 + trial % 3;
    std::uniform_int_distribution<std::size_t> color(0, k - 1);
    std::vector<std::size_t> mu(p.size()), nu(p.size());
    for (auto& c : mu) c = color(rng);
    for (auto& c : nu) c = color(rng);
    const auto f = partition_reduces(p, KPartition(p, k, mu), KPartition(p, k, nu));
    ASSERT_EQ(f.has_value(), testing::brute_partition_reduces(p, mu, nu)) << trial;
    if (f) {
      for (Element x = 0; x < p.size(); ++x) EXPECT_EQ(mu[x], nu[(*f)(x)]);
    }
  }
}

TEST(Retraction, Examples) {
  const auto l3 = gallery::chain(3);
  const auto whole = SubsetMask::whole(l3);
  EXPECT_TRUE(is_retraction(l3, whole, SelfMap::identity(l3)));
  EXPECT_TRUE(degree_embedding_check(l3, whole, SelfMap::identity(l3), testing::subsets_within(l3, whole)).exact());

  const auto y = SubsetMask::of(l3, {"0", "2"});
  const SelfMap r(l3, {0, 2, 2});
  EXPECT_TRUE(is_retraction(l3, y, r));
  EXPECT_TRUE(is_retraction(l3, y, SelfMap(l3, {0, 0, 2})));
  EXPECT_FALSE(is_retraction(l3, y, SelfMap(l3, {0, 1, 2})));
  const auto report = degree_embedding_check(l3, y, r, testing::subsets_within(l3, y));
  EXPECT_EQ(report.pairs_checked, 16u);
  EXPECT_TRUE(report.exact());
}

}  // namespace
}  // namespace wadge
