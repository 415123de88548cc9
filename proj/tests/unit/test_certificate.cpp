#include <gtest/gtest.h>

#include "phicert/certificate.hpp"
#include "phicert/errors.hpp"

using phicert::Certificate;
using phicert::Interval;
using phicert::Verdict;

namespace {

Certificate sample_certificate() {
  Certificate c;
  c.pipeline = phicert::Pipeline::I1;
  c.parameters = {{"grid_step", "1/200"}, {"threshold", "0.04"}};
  c.toolinfo = phicert::current_toolinfo();
  c.add_step("first", {Interval(0.1, 0.2)}, Interval(0.3, 0.30000000000000004), Verdict::certified);
  c.add_step("second", {Interval(1.0 / 3.0)}, Interval(-1e-300, 2.5), Verdict::undecided);
  Certificate child;
  child.pipeline = phicert::Pipeline::generic;
  child.add_step("leaf", {}, Interval(0.0), Verdict::certified);
  child.finalize();
  c.children.push_back(child);
  c.results = {{"min_lower_bound", "0.0925"}};
  c.finalize();
  c.witness = *c.first_unsuccessful_step();
  return c;
}

}  // namespace

TEST(Verdict, ConjunctionOrder) {
  EXPECT_EQ(phicert::conjoin(Verdict::certified, Verdict::certified), Verdict::certified);
  EXPECT_EQ(phicert::conjoin(Verdict::certified, Verdict::undecided), Verdict::undecided);
  EXPECT_EQ(phicert::conjoin(Verdict::undecided, Verdict::failed), Verdict::failed);
  EXPECT_EQ(phicert::conjoin(Verdict::failed, Verdict::certified), Verdict::failed);
}

TEST(Verdict, NamesRoundTrip) {
  for (const auto v : {Verdict::certified, Verdict::failed, Verdict::undecided}) {
    EXPECT_EQ(phicert::parse_verdict(phicert::to_string(v)), v);
  }
  for (const auto p : {phicert::Pipeline::I1, phicert::Pipeline::I2, phicert::Pipeline::I3,
                       phicert::Pipeline::exact_facts, phicert::Pipeline::generic, phicert::Pipeline::claim1}) {
    EXPECT_EQ(phicert::parse_pipeline(phicert::to_string(p)), p);
  }
}

TEST(Certificate, FinalizeConjoinsStepsAndChildren) {
  Certificate c;
  c.add_step("ok", {}, Interval(1.0), Verdict::certified);
  c.finalize();
  EXPECT_EQ(c.verdict, Verdict::certified);
  Certificate bad;
  bad.add_step("no", {}, Interval(-1.0), Verdict::failed);
  bad.finalize();
  c.children.push_back(bad);
  c.finalize();
  EXPECT_EQ(c.verdict, Verdict::failed);
  ASSERT_NE(c.first_unsuccessful_step(), nullptr);
  EXPECT_EQ(c.first_unsuccessful_step()->description, "no");
}

TEST(Certificate, JsonRoundTripPreservesEverything) {
  const Certificate c = sample_certificate();
  const std::string text = phicert::to_json(c);
  const Certificate back = phicert::certificate_from_json(text);
  EXPECT_TRUE(phicert::same_outcome(c, back));
  EXPECT_EQ(back.parameters, c.parameters);
  EXPECT_EQ(back.results, c.results);
  ASSERT_EQ(back.steps.size(), 2u);
  EXPECT_EQ(back.steps[1].inputs[0], c.steps[1].inputs[0]);
  EXPECT_EQ(back.steps[0].output.hi(), 0.30000000000000004);
  ASSERT_TRUE(back.witness.has_value());
  EXPECT_EQ(back.witness->description, "second");
  EXPECT_EQ(phicert::to_json(back), text);
}

TEST(Certificate, SameOutcomeDetectsEndpointChanges) {
  const Certificate c = sample_certificate();
  Certificate d = c;
  d.toolinfo.version = "other";
  EXPECT_TRUE(phicert::same_outcome(c, d));
  d.steps[0].output = Interval(0.3, 0.31);
  EXPECT_FALSE(phicert::same_outcome(c, d));
}

TEST(Certificate, MalformedJsonIsAValidationError) {
  EXPECT_THROW(phicert::certificate_from_json("{"), phicert::ValidationError);
  EXPECT_THROW(phicert::certificate_from_json("{\"pipeline\": \"I1\"}"), phicert::ValidationError);
}

TEST(Decimal, ShortestRoundTrip) {
  EXPECT_EQ(phicert::shortest_decimal(0.1), "0.1");
  EXPECT_EQ(phicert::shortest_decimal(0.30000000000000004), "0.30000000000000004");
  for (const double v : {1.0 / 3.0, 0.6180339887498949, 1e-300, -2.5, 0.0}) {
    EXPECT_EQ(phicert::parse_double(phicert::shortest_decimal(v)), v);
  }
}
