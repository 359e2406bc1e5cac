#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gralg/abelian_group.hpp"
#include "oracle.hpp"
#include "support.hpp"

using gralg::AbelianGroup;

namespace {

std::vector<AbelianGroup> test_matrix() {
  return {AbelianGroup::cyclic(1), AbelianGroup::cyclic(2), AbelianGroup::cyclic(3), AbelianGroup::cyclic(4),
          AbelianGroup::cyclic(5), AbelianGroup::parse("c8xc2"), AbelianGroup::parse("c4xc4"),
          AbelianGroup::parse("c2xc2xc2"), AbelianGroup::parse("c16xc4xc2"), AbelianGroup::parse("c32xc32")};
}

std::set<std::uint32_t> indices(const gralg::Subgroup& s) {
  std::set<std::uint32_t> out;
  for (const auto& g : s) out.insert(g.index());
  return out;
}

}  // namespace

TEST(AbelianGroup, Arithmetic) {
  const auto c8 = AbelianGroup::cyclic(3);
  const auto a = c8.generator(0);
  EXPECT_EQ(a.pow(3) * a.pow(6), a);
  for (const auto& g : c8.elements()) EXPECT_TRUE((g * g.inverse()).is_identity());
  const auto g = AbelianGroup::parse("c8xc2");
  const auto ab = g.generator(0) * g.generator(1);
  EXPECT_EQ(ab * ab, g.generator(0).pow(2));
  EXPECT_EQ(a.pow(-1), a.pow(7));
}

TEST(AbelianGroup, Orders) {
  const auto c8 = AbelianGroup::cyclic(3);
  EXPECT_EQ(c8.generator(0).pow(2).order(), 4u);
  EXPECT_EQ(c8.identity().order(), 1u);
  const auto g = AbelianGroup::parse("c8xc2");
  EXPECT_EQ((g.generator(0).pow(4) * g.generator(1)).order(), 2u);
  EXPECT_EQ(g.exponent(), 8u);
}

TEST(AbelianGroup, IndexConvention) {
  const auto c8 = AbelianGroup::cyclic(3);
  EXPECT_EQ(c8.generator(0).pow(3).index(), 3u);
  const auto g = AbelianGroup::parse("c8xc2");
  // a^i b^j sits at 2i + j
  EXPECT_EQ((g.generator(0).pow(3) * g.generator(1)).index(), 7u);
  const std::vector<std::uint32_t> exps{5, 1};
  EXPECT_EQ(g.encode(exps), 11u);
  EXPECT_EQ(g.decode(11), exps);
  const std::vector<std::int64_t> raw{-1, 3};
  EXPECT_EQ(g.element(raw).index(), 15u);
}

TEST(AbelianGroup, ParsingAndNames) {
  EXPECT_EQ(AbelianGroup::parse("c8xc2").name(), "C8xC2");
  EXPECT_EQ(AbelianGroup::parse("C4,C2"), AbelianGroup(std::vector<int>{2, 1}));
  EXPECT_EQ(AbelianGroup::parse("8x2"), AbelianGroup::parse("c8xc2"));
  EXPECT_EQ(AbelianGroup::cyclic(4).name(), "C16");
  EXPECT_THROW(AbelianGroup::parse("c6"), std::invalid_argument);
  EXPECT_THROW(AbelianGroup::parse("c1"), std::invalid_argument);
  EXPECT_THROW(AbelianGroup::parse(""), std::invalid_argument);
  EXPECT_THROW(AbelianGroup(std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(AbelianGroup(std::vector<int>{9, 8}), std::invalid_argument);
  const auto g = AbelianGroup::parse("c8xc2");
  EXPECT_EQ((g.generator(0).pow(2) * g.generator(1)).to_string(), "a^2*b");
  EXPECT_EQ(g.identity().to_string(), "1");
}

TEST(AbelianGroup, MixedGroupsRejected) {
  const auto c8 = AbelianGroup::cyclic(3);
  const auto c4 = AbelianGroup::cyclic(2);
  EXPECT_THROW(c8.generator(0) * c4.generator(0), std::invalid_argument);
}

TEST(AbelianGroup, TorsionAndPowers) {
  const auto c8 = AbelianGroup::cyclic(3);
  const auto a = c8.generator(0);
  EXPECT_EQ(gralg::torsion_subgroup(c8, 1), (gralg::Subgroup{c8.identity(), a.pow(4)}));
  EXPECT_EQ(gralg::torsion_subgroup(AbelianGroup::parse("c8xc2"), 1).size(), 4u);
  EXPECT_EQ(gralg::power_subgroup(c8, 1), (gralg::Subgroup{c8.identity(), a.pow(2), a.pow(4), a.pow(6)}));
  EXPECT_EQ(gralg::intersect(gralg::power_subgroup(c8, 1), gralg::torsion_subgroup(c8, 1)).size(), 2u);
  const auto g = AbelianGroup::parse("c8xc2");
  EXPECT_EQ(gralg::intersect(gralg::power_subgroup(g, 1), gralg::torsion_subgroup(g, 1)).size(), 2u);
}

TEST(AbelianGroup, SubgroupIdentitiesOverMatrix) {
  for (const auto& g : test_matrix()) {
    const auto og = testing_support::oracle_group(g);
    const int top = *std::max_element(g.exponents().begin(), g.exponents().end());
    for (int i = 0; i <= top + 1; ++i) {
      const auto tors = gralg::torsion_subgroup(g, i);
      const auto pows = gralg::power_subgroup(g, i);
      int expected_log2 = 0;
      for (int e : g.exponents()) expected_log2 += std::min(i, e);
      EXPECT_EQ(tors.size(), std::size_t{1} << expected_log2) << g.name() << " i=" << i;
      EXPECT_EQ(tors.size() * pows.size(), g.order()) << g.name() << " i=" << i;
      if (g.order() <= 1024) {
        EXPECT_TRUE(gralg::is_subgroup(g, tors));
        EXPECT_TRUE(gralg::is_subgroup(g, pows));
      }
      // kernel membership checked against the oracle's element orders
      std::set<std::uint32_t> kernel;
      for (unsigned x = 0; x < og.order(); ++x) {
        if ((1u << i) % og.element_order(og.tuple(x)) == 0) kernel.insert(x);
      }
      EXPECT_EQ(indices(tors), kernel);
      // the literal definition agrees whenever an element of order 2^i exists
      if (i >= 1 && i <= top) EXPECT_EQ(gralg::generated_by_order(g, i), tors) << g.name() << " i=" << i;
    }
  }
}

TEST(AbelianGroup, GenerateAndIntersect) {
  const auto g = AbelianGroup::parse("c8xc2");
  const std::vector gens{g.generator(0).pow(2), g.generator(1)};
  const auto s = gralg::generate(g, gens);
  EXPECT_EQ(s.size(), 8u);
  EXPECT_TRUE(gralg::is_subgroup(g, s));
  EXPECT_EQ(gralg::generate(g, std::vector<gralg::GroupElement>{}).size(), 1u);
  EXPECT_FALSE(gralg::is_subgroup(g, gralg::Subgroup{g.identity(), g.generator(0)}));
}

TEST(AbelianGroup, Quotients) {
  const auto c8 = AbelianGroup::cyclic(3);
  const auto q = gralg::quotient(c8, gralg::torsion_subgroup(c8, 1));
  EXPECT_EQ(q.target, AbelianGroup::cyclic(2));
  EXPECT_EQ(q.projection[1], q.target.generator(0).index());
  for (const auto& g : test_matrix()) {
    if (g.order() > 512) continue;
    for (int i = 0; i <= 2; ++i) {
      const auto h = gralg::power_subgroup(g, i);
      const auto quo = gralg::quotient(g, h);
      ASSERT_EQ(quo.target.order() * h.size(), g.order());
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        for (std::uint32_t y = 0; y < g.order(); y += 3) {
          ASSERT_EQ(quo.projection[g.mul_index(x, y)], quo.target.mul_index(quo.projection[x], quo.projection[y]));
        }
        ASSERT_EQ(quo.projection[x] == 0, std::binary_search(h.begin(), h.end(), g.element_at(x)));
      }
      for (std::uint32_t t = 0; t < quo.target.order(); ++t) EXPECT_EQ(quo.projection[quo.section[t]], t);
    }
  }
  EXPECT_THROW(gralg::quotient(c8, gralg::Subgroup{c8.identity(), c8.generator(0)}), std::invalid_argument);
}
