#include <gtest/gtest.h>

#include "phicert/errors.hpp"
#include "phicert/golden.hpp"
#include "phicert/prover.hpp"

using phicert::Interval;
using phicert::Verdict;

TEST(Prover, FunctionSpecs) {
  EXPECT_EQ(phicert::make_function("G").spec, "G");
  EXPECT_NO_THROW(phicert::make_function("-G"));
  EXPECT_NO_THROW(phicert::make_function("G-0.01"));
  EXPECT_NO_THROW(phicert::make_function("Gw(0.7)"));
  EXPECT_NO_THROW(phicert::make_function("g1+1"));
  EXPECT_THROW(phicert::make_function("Q"), phicert::ParameterError);
  EXPECT_THROW(phicert::make_function("Gw(abc)"), phicert::Error);
}

TEST(Prover, GPositiveAwayFromTheGoldenPoint) {
  const auto cert = phicert::prove_nonneg(phicert::make_function("G"), Interval(0.619, 0.98), 30);
  EXPECT_EQ(cert.verdict, Verdict::certified);
  EXPECT_FALSE(cert.witness.has_value());
  const double min_lower = std::stod(*cert.result("min_lower_bound"));
  EXPECT_GE(min_lower, 0.0);
  EXPECT_LE(min_lower, 8.19e-8);  // the true minimum on this range
}

TEST(Prover, StrictMarginAtTheGoldenPointIsUndecided) {
  const auto& g = phicert::phi();
  const Interval around(g.lo() - 1e-3, g.hi() + 1e-3);
  const auto cert = phicert::prove_nonneg(phicert::make_function("G"), around, 30, 1e-12);
  EXPECT_EQ(cert.verdict, Verdict::undecided);
  ASSERT_TRUE(cert.witness.has_value());
}

TEST(Prover, NeverReportsFailed) {
  const auto cert = phicert::prove_nonneg(phicert::make_function("-G"), Interval(0.65, 0.70), 10);
  EXPECT_EQ(cert.verdict, Verdict::undecided);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_LT(cert.witness->output.hi(), 0.0);
  const auto shifted = phicert::prove_nonneg(phicert::make_function("G-0.01"), Interval(0.62, 0.99), 20);
  EXPECT_EQ(shifted.verdict, Verdict::undecided);
}

TEST(Prover, ParameterChecks) {
  const auto f = phicert::make_function("G");
  EXPECT_THROW(phicert::prove_nonneg(f, Interval(0.7, 0.8), 0), phicert::ParameterError);
  EXPECT_THROW(phicert::prove_nonneg(f, Interval(0.7, 0.8), 5, -1.0), phicert::ParameterError);
  EXPECT_THROW(phicert::prove_nonneg(phicert::make_function("L"), Interval(0.5, 1.0), 5), phicert::DomainError);
}

TEST(Prover, CentredFormIsNoWiderThanNatural) {
  const auto f = phicert::make_function("G");
  for (double a = 0.62; a < 0.97; a += 0.05) {
    const Interval box(a, a + 0.01);
    const Interval e = phicert::enclose(f, box);
    EXPECT_TRUE(f.value(box).contains(e));
    EXPECT_LE(e.lo(), f.scalar(box.mid()));
    EXPECT_GE(e.hi(), f.scalar(box.mid()));
  }
}

TEST(Prover, WeightedGapJustAboveGoldenIsCertified) {
  const auto cert = phicert::prove_nonneg(phicert::make_function("Gw(0.6180341)"), Interval(0.6180341, 0.98), 30);
  EXPECT_EQ(cert.verdict, Verdict::certified);
}

TEST(Prover, DeterministicCertificates) {
  const auto f = phicert::make_function("G");
  const auto a = phicert::prove_nonneg(f, Interval(0.7, 0.9), 20);
  const auto b = phicert::prove_nonneg(f, Interval(0.7, 0.9), 20);
  EXPECT_TRUE(phicert::same_outcome(a, b));
}
