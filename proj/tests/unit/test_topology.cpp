#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "wadge/gallery.hpp"
#include "wadge/topology.hpp"

namespace wadge {
namespace {

std::vector<Bits> raw(const std::vector<SubsetMask>& v) {
  std::vector<Bits> out;
  for (const auto& m : v) out.push_back(m.bits());
  return out;
}

TEST(Topology, OpenClosedBoundary) {
  const auto l3 = gallery::chain(3);
  EXPECT_TRUE(is_open(l3, SubsetMask::of(l3, {"1", "2"})));
  EXPECT_FALSE(is_open(l3, SubsetMask::of(l3, {"0"})));
  EXPECT_TRUE(is_closed(l3, SubsetMask::of(l3, {"0"})));
  EXPECT_EQ(boundary(l3, SubsetMask::of(l3, {"2"})), SubsetMask::of(l3, {"0", "1"}));
  EXPECT_EQ(up_set(l3, 2), SubsetMask::of(l3, {"2"}));
  EXPECT_EQ(up_set(l3, 0), SubsetMask::whole(l3));
  const auto x = gallery::fan(3);
  for (const auto& d : x.d) EXPECT_TRUE(is_open(x.space, d));
}

TEST(Topology, ClosureAxioms) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_poset(rng, 6);
    const auto a = testing::random_subset(rng, p);
    const auto b = testing::random_subset(rng, p);
    const auto ca = closure(p, a);
    EXPECT_TRUE(a.subset_of(ca));
    EXPECT_EQ(closure(p, ca), ca);
    EXPECT_EQ(closure(p, a | b), ca | closure(p, b));
    EXPECT_EQ(interior(p, a), closure(p, a.complement()).complement());
    EXPECT_TRUE(is_open(p, interior(p, a)));
    EXPECT_TRUE(interior(p, a).subset_of(a));
    EXPECT_EQ(boundary(p, a), ca - interior(p, a));
  }
}

TEST(Topology, EnumerateOpens) {
  const auto l2 = build_poset({"bottom", "top"}, std::vector<std::pair<std::string, std::string>>{{"bottom", "top"}});
  EXPECT_EQ(raw(enumerate_opens(l2)), (std::vector<Bits>{0b00, 0b10, 0b11}));
  EXPECT_EQ(raw(enumerate_opens(gallery::antichain(2))), (std::vector<Bits>{0b00, 0b01, 0b10, 0b11}));
  EXPECT_EQ(enumerate_opens(gallery::chain(3)).size(), 4u);
  EXPECT_THROW(enumerate_opens(gallery::antichain(5), {.max_elements = 4}), CapExceeded);
}

TEST(Topology, EnumerateOpensMatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_poset(rng, 7);
    std::vector<Bits> expected;
    for (Bits s = 0; s <= p.all(); ++s) {
      if (p.up_closure(s) == s) expected.push_back(s);
    }
    auto got = raw(enumerate_opens(p));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(Topology, DerivativeTrace) {
  const auto disc = derivative_trace(gallery::antichain(3));
  ASSERT_EQ(disc.stages.size(), 2u);
  EXPECT_TRUE(disc.stages[0].is_full());
  EXPECT_TRUE(disc.stages[1].empty());

  const std::size_t n = 5;
  const auto trace = derivative_trace(gallery::chain(n));
  ASSERT_EQ(trace.stages.size(), n + 1);
  for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(trace.stages[i].bits(), bits::full(n - i));
  EXPECT_EQ(trace.scattered_rank(), n);
  for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(trace.rank_of[x], n - 1 - x);

  const auto x1 = gallery::fan(1);
  EXPECT_TRUE(derivative_trace(x1.space).stages.back().empty());
}

TEST(Topology, DimensionExamples) {
  EXPECT_EQ(dimension(gallery::chain(0)), -1);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(dimension(gallery::chain(n)), static_cast<int>(n) - 1);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(dimension(gallery::antichain(n)), 0);
  EXPECT_EQ(dimension(gallery::truncated_c_infinity(6)), 5);
}

TEST(Topology, DimensionMatchesDefinition) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = testing::random_poset(rng, 1 + trial % 6);
    EXPECT_EQ(dimension(p), testing::brute_dimension(p)) << trial;
  }
}

TEST(Topology, SubspaceDimensionIsMonotone) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_poset(rng, 6);
    const auto a = testing::random_subset(rng, p);
    const auto b = a | testing::random_subset(rng, p);
    EXPECT_LE(dimension(p, a), dimension(p, b));
  }
}

}  // namespace
}  // namespace wadge
