#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "wadge/enumerate.hpp"

namespace wadge {
namespace {

TEST(Enumerate, KnownCounts) {
  const auto by_size = posets_up_to_isomorphism(5);
  ASSERT_EQ(by_size.size(), 6u);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(by_size[n].size(), kKnownPosetCounts[n]) << n;
}

TEST(Enumerate, RepresentativesArePairwiseNonIsomorphic) {
  for (const auto& group : posets_up_to_isomorphism(4)) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        EXPECT_FALSE(poset_isomorphic(group[i], group[j]).has_value());
      }
    }
  }
}

TEST(Enumerate, CanonicalFormIsAnIsomorphismInvariant) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_poset(rng, 1 + trial % 7);
    const auto q = testing::random_poset(rng, p.size());
    const bool same = canonical_form(p) == canonical_form(q);
    EXPECT_EQ(same, poset_isomorphic(p, q).has_value()) << trial;
  }
}

TEST(Enumerate, RefusesOversizedSpaces) {
  EXPECT_THROW(posets_up_to_isomorphism(kMaxCanonicalElements + 1), CapExceeded);
}

}  // namespace
}  // namespace wadge
