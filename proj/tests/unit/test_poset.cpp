#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "wadge/gallery.hpp"
#include "wadge/poset.hpp"

namespace wadge {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

TEST(Poset, SinglePoint) {
  const auto p = build_poset({"a"}, Pairs{});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.leq(0, 0));
  EXPECT_FALSE(p.less(0, 0));
}

TEST(Poset, ChainClosure) {
  const auto p = build_poset({"0", "1", "2"}, Pairs{{"0", "1"}, {"1", "2"}});
  EXPECT_TRUE(p.less(0, 1));
  EXPECT_TRUE(p.less(1, 2));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.leq(2, 0));
  EXPECT_EQ(p.covers().size(), 2u);
}

TEST(Poset, CycleRejected) {
  EXPECT_THROW(build_poset({"a", "b"}, Pairs{{"a", "b"}, {"b", "a"}}), CycleError);
  EXPECT_THROW(build_poset({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}, {"c", "a"}}), CycleError);
}

TEST(Poset, DuplicateAndUnknownLabels) {
  EXPECT_THROW(build_poset({"a", "a"}, Pairs{}), DuplicateLabelError);
  EXPECT_THROW(build_poset({"a"}, Pairs{{"a", "z"}}), UnknownElement);
  const auto p = gallery::chain(2);
  EXPECT_THROW(p.find("z"), UnknownElement);
}

TEST(Poset, RedundantCoversAreReduced) {
  const auto p = build_poset({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(p.covers().size(), 2u);
}

TEST(Poset, UpAndDownSets) {
  const auto l3 = gallery::chain(3);
  EXPECT_EQ(l3.up(2), bits::single(2));
  EXPECT_EQ(l3.up(0), l3.all());
  EXPECT_EQ(l3.down(1), bits::single(0) | bits::single(1));
  const auto x1 = gallery::fan(1);
  EXPECT_EQ(x1.space.up(x1.bottom), x1.space.all());
}

TEST(Poset, LinearExtensionRespectsOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_poset(rng, 7);
    const auto& order = p.linear_extension();
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) EXPECT_FALSE(p.less(order[j], order[i]));
    }
  }
}

TEST(Poset, Subspace) {
  const auto l3 = gallery::chain(3);
  const auto sub = subspace(l3, SubsetMask::of(l3, {"0", "1"}));
  EXPECT_TRUE(poset_isomorphic(sub, gallery::chain(2)).has_value());
  EXPECT_TRUE(poset_isomorphic(subspace(l3, SubsetMask::whole(l3)), l3).has_value());
  EXPECT_THROW(subspace(l3, SubsetMask::none(l3)), EmptySubspace);

  const auto x2 = gallery::fan(2);
  Bits one_chain = bits::single(x2.bottom) | bits::single(x2.top);
  for (std::size_t k = 0; k <= 2; ++k) one_chain |= bits::single(x2.element(2, k));
  EXPECT_TRUE(poset_isomorphic(subspace(x2.space, {x2.space, one_chain}), gallery::chain(5)).has_value());
}

TEST(Poset, IsomorphismWitnesses) {
  const auto l3 = gallery::chain(3);
  const auto abc = build_poset({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}});
  const auto w = poset_isomorphic(l3, abc);
  ASSERT_TRUE(w.has_value());
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) EXPECT_EQ(l3.leq(x, y), abc.leq((*w)[x], (*w)[y]));
  }
  EXPECT_FALSE(poset_isomorphic(l3, gallery::antichain(3)).has_value());

  const auto s = gallery::linear_sum(gallery::lex_product(gallery::antichain(2), gallery::chain(2)),
                                     gallery::antichain(4));
  std::vector<Bits> up(s.size());
  std::vector<std::string> labels(s.size());
  std::vector<Element> perm(s.size());
  for (Element i = 0; i < s.size(); ++i) perm[i] = (i * 3 + 1) % s.size();
  for (Element i = 0; i < s.size(); ++i) {
    labels[perm[i]] = "p" + std::to_string(i);
    Bits u = 0;
    bits::for_each(s.up(i), [&](Element j) { u |= bits::single(perm[j]); });
    up[perm[i]] = u;
  }
  const auto shuffled = FinitePoset::from_up_sets(labels, up);
  EXPECT_TRUE(poset_isomorphic(s, shuffled).has_value());
}

TEST(Poset, FromUpSetsValidates) {
  EXPECT_THROW(FinitePoset::from_up_sets({"a", "b"}, {0b11, 0b11}), CycleError);
  EXPECT_THROW(FinitePoset::from_up_sets({"a", "b", "c"}, {0b011, 0b110, 0b100}), Error);
}

TEST(SubsetMask, SpaceChecks) {
  const auto a = gallery::chain(2);
  const auto b = gallery::chain(2);
  EXPECT_THROW((void)(SubsetMask::whole(a) | SubsetMask::whole(b)), SpaceMismatch);
  const auto m = SubsetMask::of(a, {"1"});
  EXPECT_EQ(m.to_bitstring(), "01");
  EXPECT_EQ(m.complement().to_bitstring(), "10");
}

}  // namespace
}  // namespace wadge
