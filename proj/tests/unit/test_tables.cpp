#include <gtest/gtest.h>

#include <cmath>

#include "hp_oracle.hpp"
#include "phicert/errors.hpp"
#include "phicert/tables.hpp"

namespace {

bool encloses(const phicert::Interval& x, const hp::Real& exact) {
  return hp::Real(x.lo()) <= exact && exact <= hp::Real(x.hi());
}

}  // namespace

TEST(Table1, MatchesTheReferenceValues) {
  const char* expected[] = {"0.1020", "0.1039", "0.1057", "0.1074", "0.1089", "0.1104", "0.1117", "0.1130", "0.1141",
                            "0.1151", "0.1159", "0.1167", "0.1173", "0.1178", "0.1182", "0.1184", "0.1185", "0.1184",
                            "0.1182", "0.1178", "0.1173", "0.1167", "0.1159", "0.1149", "0.1137", "0.1124", "0.1109",
                            "0.1093", "0.1075", "0.1054", "0.1032", "0.1009", "0.0983", "0.0955", "0.0925"};
  const auto rows = phicert::table1();
  ASSERT_EQ(rows.size(), 35u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].x, phicert::Rational(120 + static_cast<std::int64_t>(i), 200));
    EXPECT_EQ(rows[i].rounded, expected[i]) << rows[i].x.to_decimal(3);
    EXPECT_TRUE(encloses(rows[i].L, hp::L(hp::Real(120 + i) / 200)));
  }
  EXPECT_NEAR(rows.back().L.mid(), 0.092483, 5e-7);
}

TEST(Table2, RecomputedValuesAgreeWithThePrintedOnes) {
  const auto rows = phicert::table2();
  ASSERT_EQ(rows.size(), 97u);
  EXPECT_EQ(rows.front().x, phicert::Rational(7598, 10000));
  for (const auto& r : rows) {
    EXPECT_LE(std::abs(std::stod(r.rounded_g1) - r.printed_g1), 1.00001e-4) << r.x.to_decimal(4);
    EXPECT_LE(std::abs(std::stod(r.rounded_g2) - r.printed_g2), 1.00001e-4) << r.x.to_decimal(4);
    const hp::Real x = hp::Real(r.x.num()) / r.x.den();
    EXPECT_TRUE(encloses(r.g1, hp::g1(x)));
    EXPECT_TRUE(encloses(r.g2, hp::g2(x)));
  }
  const auto last = phicert::table2_text().rows.back();
  EXPECT_EQ(last[0], "0.9800");
  EXPECT_EQ(last[1], "0.1030");
  EXPECT_EQ(last[2], "0.0961");
}

TEST(Figure1, SamplesTheGapFromPointSixToOne) {
  const auto rows = phicert::figure1();
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_EQ(rows.front().x, phicert::Rational(3, 5));
  EXPECT_EQ(rows.back().x, phicert::Rational(1));
  EXPECT_NEAR(rows[18].G.mid(), 1.012e-10, 1e-12);  // x = 0.618
  for (const auto& r : rows) EXPECT_GE(r.G.hi(), 0.0);
  EXPECT_TRUE(rows.back().G.contains_zero());
}

TEST(Rounding, HalfEven) {
  EXPECT_EQ(phicert::round_half_even(0.12345, 4), "0.1234");
  EXPECT_EQ(phicert::round_half_even(0.5, 0), "0");
  EXPECT_EQ(phicert::round_half_even(1.5, 0), "2");
  EXPECT_EQ(phicert::round_half_even(0.09248, 4), "0.0925");
}

TEST(Render, CsvAndTsvRoundTrip) {
  for (const auto fmt : {phicert::Format::csv, phicert::Format::tsv}) {
    const auto t = phicert::table1_text();
    const auto back = phicert::parse_delimited(phicert::render(t, fmt), fmt);
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.rows, t.rows);
  }
  const auto text = phicert::render(phicert::table1_text(), phicert::Format::csv);
  EXPECT_EQ(text.substr(0, 17), "x,L\n0.600,0.1020\n");
}

TEST(Render, JsonWritesNumbers) {
  const auto json = phicert::render(phicert::table1_text(), phicert::Format::json);
  EXPECT_NE(json.find("\"x\": 0.600, \"L\": 0.1020"), std::string::npos) << json.substr(0, 80);
}

TEST(Render, FormatNames) {
  EXPECT_EQ(phicert::parse_format("tsv"), phicert::Format::tsv);
  EXPECT_THROW(phicert::parse_format("xml"), phicert::ParameterError);
  EXPECT_THROW(phicert::parse_delimited("", phicert::Format::csv), phicert::ValidationError);
  EXPECT_THROW(phicert::parse_delimited("a,b\n1\n", phicert::Format::csv), phicert::ValidationError);
}
