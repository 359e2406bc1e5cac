#include <gtest/gtest.h>

#include <stdexcept>

#include "gralg/formulas.hpp"
#include "gralg/unitary.hpp"

using gralg::AbelianGroup;
using gralg::FormulaSource;
using gralg::Involution;

TEST(Formulas, CanonicalExamples) {
  EXPECT_EQ(gralg::order_canonical(AbelianGroup::cyclic(3), 2).value(), 32u);
  EXPECT_EQ(gralg::order_canonical(AbelianGroup::cyclic(3), 4).value(), 512u);
  EXPECT_EQ(gralg::order_canonical(AbelianGroup::cyclic(4), 2).value(), 512u);
  const auto p = gralg::order_canonical(AbelianGroup::parse("c8xc2"), 2);
  EXPECT_EQ(p.log2_value, 10);
  EXPECT_EQ(p.source, FormulaSource::Canonical);
  // elementary abelian G: G^2[2] trivial, G[2] = G
  EXPECT_EQ(gralg::order_canonical(AbelianGroup::parse("c2xc2"), 2).value(), 8u);
  EXPECT_EQ(gralg::order_canonical(AbelianGroup::cyclic(1), 4).value(), 4u);
  EXPECT_THROW(gralg::order_canonical(AbelianGroup::cyclic(3), 6), std::invalid_argument);
}

TEST(Formulas, Sigma3AndSigma4) {
  EXPECT_EQ(gralg::order_sigma3(3, 2).value(), 16u);
  EXPECT_EQ(gralg::order_sigma3(4, 2).value(), 256u);
  EXPECT_EQ(gralg::order_sigma3(3, 8).value(), 4096u);
  const auto s4 = gralg::order_sigma4(3, 2);
  EXPECT_EQ(s4.value(), 16u);
  EXPECT_TRUE(s4.elementary_abelian);
  EXPECT_FALSE(gralg::order_sigma3(3, 2).elementary_abelian);
  EXPECT_EQ(gralg::order_sigma4(4, 2).value(), 256u);
  EXPECT_EQ(gralg::order_sigma4(3, 4).value(), 256u);
  EXPECT_THROW(gralg::order_sigma3(2, 2), std::invalid_argument);
  EXPECT_THROW(gralg::order_sigma4(1, 2), std::invalid_argument);
  EXPECT_THROW(gralg::order_canonical_cyclic(1, 2), std::invalid_argument);
}

TEST(Formulas, SourcesAndNames) {
  EXPECT_EQ(gralg::to_string(FormulaSource::Canonical), "L1");
  EXPECT_EQ(gralg::to_string(FormulaSource::Sigma3), "L3");
  EXPECT_EQ(gralg::to_string(FormulaSource::Sigma4), "L6");
  EXPECT_EQ(gralg::to_string(FormulaSource::CanonicalCyclic), "SIGMA2-CYCLIC");
}

TEST(Formulas, LargeValuesStayExact) {
  const auto p = gralg::order_sigma3(6, 256);  // 2^(8*32)
  EXPECT_EQ(p.log2_value, 256);
  EXPECT_THROW(p.value(), std::overflow_error);
  EXPECT_EQ(gralg::pow2_decimal(64), "18446744073709551616");
  EXPECT_EQ(gralg::pow2_decimal(0), "1");
  EXPECT_EQ(gralg::pow2_decimal(100), "1267650600228229401496703205376");
}

// The general formula specializes to 2 q^{2^{n-1}} on cyclic groups.
TEST(Formulas, CanonicalSpecializesOnCyclicGroups) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t q : {2u, 4u, 8u}) {
      const auto general = gralg::order_canonical(AbelianGroup::cyclic(n), q);
      int k = 0;
      while ((1u << k) < q) ++k;
      const int expected = n == 1 ? k : 1 + k * (1 << (n - 1));
      EXPECT_EQ(general.log2_value, expected) << "n=" << n << " q=" << q;
      if (n >= 2) EXPECT_EQ(gralg::order_canonical_cyclic(n, q).log2_value, expected);
    }
  }
}

TEST(Formulas, PredictionDispatch) {
  const auto c8 = AbelianGroup::cyclic(3);
  EXPECT_FALSE(gralg::predict_order(Involution::parse(c8, "sigma1"), 2).has_value());
  EXPECT_EQ(gralg::predict_order(Involution::parse(c8, "sigma2"), 2)->source, FormulaSource::Canonical);
  EXPECT_EQ(gralg::predict_order(Involution::parse(c8, "sigma3"), 2)->source, FormulaSource::Sigma3);
  EXPECT_EQ(gralg::predict_order(Involution::parse(c8, "sigma4"), 2)->source, FormulaSource::Sigma4);
  const auto g = AbelianGroup::parse("c8xc2");
  EXPECT_TRUE(gralg::is_canonical(Involution::parse(g, "a->a^7,b->b")));
  EXPECT_FALSE(gralg::predict_order(Involution::parse(g, "sigma2"), 2).has_value());
  EXPECT_EQ(gralg::predict_order(Involution::parse(g, "a->a^7"), 2)->log2_value, 10);
  // on C_4 the canonical involution is a -> a^3, and only the general formula applies
  const auto c4 = AbelianGroup::cyclic(2);
  EXPECT_EQ(gralg::predict_order(Involution::parse(c4, "a->a^3"), 2)->value(), 8u);
}

// Every predictor against enumeration wherever enumeration fits.
TEST(Formulas, PredictionsMatchEnumeration) {
  for (auto [n, q] : {std::pair{2, 2u}, std::pair{2, 4u}, std::pair{3, 2u}, std::pair{3, 4u}, std::pair{4, 2u}}) {
    const gralg::GroupAlgebra alg(gralg::Field::with_order(q), AbelianGroup::cyclic(n));
    for (const auto& s : gralg::enumerate_involutive_automorphisms(alg.group())) {
      const auto p = gralg::predict_order(s, q);
      if (!p) continue;
      const auto v = gralg::compute_unitary_subgroup(alg, s);
      EXPECT_EQ(v.report.order_log2, p->log2_value) << alg.name() << " " << s.to_string();
      if (p->elementary_abelian) EXPECT_EQ(*v.report.exponent, 2u);
    }
  }
  const gralg::GroupAlgebra alg(gralg::Field(), AbelianGroup::parse("c8xc2"));
  const auto s = Involution::parse(alg.group(), "a->a^7");
  EXPECT_EQ(gralg::compute_unitary_subgroup(alg, s).report.order_log2, gralg::predict_order(s, 2)->log2_value);
}
