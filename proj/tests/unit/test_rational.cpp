#include <gtest/gtest.h>

#include "phicert/errors.hpp"
#include "phicert/interval.hpp"
#include "phicert/rational.hpp"

using phicert::Rational;

TEST(Rational, NormalizesSignAndCommonFactors) {
  const Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
}

TEST(Rational, ZeroDenominatorIsRejected) { EXPECT_THROW(Rational(1, 0), phicert::DomainError); }

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/400"), Rational(-3, 400));
  EXPECT_EQ(Rational::parse("0.7598"), Rational(7598, 10000));
  EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
  EXPECT_EQ(Rational::parse(" 0.02 "), Rational(1, 50));
  EXPECT_EQ(Rational::parse("2.5e1"), Rational(25));
}

TEST(Rational, RejectsGarbage) {
  EXPECT_THROW(Rational::parse(""), phicert::ParameterError);
  EXPECT_THROW(Rational::parse("abc"), phicert::ParameterError);
  EXPECT_THROW(Rational::parse("1.2.3"), phicert::ParameterError);
  EXPECT_THROW(Rational::parse("1/0"), phicert::ParameterError);
}

TEST(Rational, ArithmeticAndOrdering) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_GT(Rational(98, 100), Rational(4899, 5000));
  EXPECT_THROW(a / Rational(0), phicert::DomainError);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(6, 3).floor(), 2);
  EXPECT_EQ(Rational(6, 3).ceil(), 2);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(3, 5).to_decimal(3), "0.600");
  EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.12");  // half-even
  EXPECT_EQ(Rational(3, 8).to_decimal(2), "0.38");
  EXPECT_EQ(Rational(-1, 3).to_decimal(4), "-0.3333");
  EXPECT_EQ(Rational(77, 100).exact_decimal(3), "0.770");
  EXPECT_EQ(Rational(7598, 10000).exact_decimal(4), "0.7598");
  EXPECT_EQ(Rational(1, 3).exact_decimal(), "1/3");
}

TEST(Rational, EnclosureContainsTheExactValue) {
  // 98/100 is not a double; its enclosure must straddle it.
  const auto e = Rational(98, 100).enclose();
  EXPECT_LT(e.lo(), e.hi());
  EXPECT_TRUE(e.contains(0.98));
  EXPECT_TRUE(Rational(1, 4).enclose().is_point());
}

TEST(Rational, OverflowIsReported) {
  const Rational big(INT64_MAX / 2);
  EXPECT_THROW(big * big, phicert::RangeError);
}
