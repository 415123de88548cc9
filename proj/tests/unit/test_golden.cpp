#include <gtest/gtest.h>

#include <cmath>

#include "hp_oracle.hpp"
#include "phicert/golden.hpp"

TEST(Golden, EnclosureIsOneUlpAroundTheConjugate) {
  const auto& g = phicert::golden_ratio().enclosure;
  EXPECT_EQ(std::nextafter(g.lo(), 1.0), g.hi());
  EXPECT_LT(hp::Real(g.lo()), hp::phi());
  EXPECT_GT(hp::Real(g.hi()), hp::phi());
  EXPECT_TRUE(g.contains(0.6180339887498949));
}

TEST(Golden, SatisfiesItsQuadratic) {
  const auto& g = phicert::phi();
  EXPECT_TRUE((g * g + g - 1.0).contains_zero());
  // phi^2 = 1 - phi, the identity behind G(phi) = 0.
  EXPECT_TRUE(phicert::intersect(g * g, 1.0 - g).width() >= 0.0);
}

TEST(Golden, UnionClosedConstant) {
  const auto c = phicert::union_closed_constant();
  EXPECT_TRUE(c.contains(0.3819660112501051));
  EXPECT_LT(hp::Real(c.lo()), 1 - hp::phi());
  EXPECT_GT(hp::Real(c.hi()), 1 - hp::phi());
}

TEST(Golden, ExactComparison) {
  const auto& g = phicert::phi();
  EXPECT_EQ(phicert::compare_with_phi(g.lo()), -1);
  EXPECT_EQ(phicert::compare_with_phi(g.hi()), 1);
  EXPECT_EQ(phicert::compare_with_phi(0.5), -1);
  EXPECT_EQ(phicert::compare_with_phi(0.7), 1);
  EXPECT_EQ(phicert::compare_with_phi(0.61), -1);
  EXPECT_EQ(phicert::compare_with_phi(0.6180341), 1);
}
