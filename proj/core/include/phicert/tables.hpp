#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phicert/interval.hpp"
#include "phicert/rational.hpp"

namespace phicert {

// L at x = 0.600, 0.605, ..., 0.770.
struct Table1Row {
  Rational x;
  Interval L;
  std::string rounded;  // 4 decimals, round-half-even on the midpoint
};

std::vector<Table1Row> table1();

// g1 and g2 at the abscissae of the shipped chain table.
struct Table2Row {
  Rational x;
  double printed_g1 = 0.0;
  double printed_g2 = 0.0;
  Interval g1;
  Interval g2;
  std::string rounded_g1;
  std::string rounded_g2;
};

std::vector<Table2Row> table2();

// G(x) at x = 0.600, 0.601, ..., 1.000.
struct FigureRow {
  Rational x;
  Interval G;
};

std::vector<FigureRow> figure1();

// Round-half-even of v to `places` decimals, as fixed-point text.
std::string round_half_even(double v, int places = 4);

enum class Format { csv, tsv, json };

Format parse_format(std::string_view text);

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

TextTable table1_text();
TextTable table2_text();
TextTable figure1_text();

// CSV and TSV: a header line, then one line per row. JSON: an array of
// objects whose values are the cells written verbatim as numbers.
std::string render(const TextTable& table, Format format);

// Inverse of render for csv and tsv.
TextTable parse_delimited(std::string_view text, Format format);

}  // namespace phicert
