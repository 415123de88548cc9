#include "phicert/tables.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "phicert/certificate.hpp"
#include "phicert/chain.hpp"
#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"

namespace phicert {

std::string round_half_even(double v, int places) {
  // nearbyint honours the default round-to-nearest-even mode.
  const double scaled = std::nearbyint(v * std::pow(10.0, places));
  const bool negative = scaled < 0.0;
  auto digits = std::to_string(static_cast<std::int64_t>(std::fabs(scaled)));
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
  if (places > 0) digits.insert(digits.end() - places, '.');
  return negative ? "-" + digits : digits;
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (int k = 120; k <= 154; ++k) {
    const Rational x(k, 200);
    const Interval L = convexity_numerator(x.enclose());
    rows.push_back({x, L, round_half_even(L.mid())});
  }
  return rows;
}

std::vector<Table2Row> table2() {
  std::vector<Table2Row> rows;
  for (const auto& printed : builtin_chain_rows()) {
    const Interval x = printed.x.enclose();
    const Interval g1 = entropy_of_square(x);
    const Interval g2 = scaled_entropy(x);
    rows.push_back({printed.x, printed.g1, printed.g2, g1, g2, round_half_even(g1.mid()),
                    round_half_even(g2.mid())});
  }
  return rows;
}

std::vector<FigureRow> figure1() {
  std::vector<FigureRow> rows;
  for (int k = 600; k <= 1000; ++k) {
    const Rational x(k, 1000);
    rows.push_back({x, golden_gap(x.enclose())});
  }
  return rows;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "tsv") return Format::tsv;
  if (text == "json") return Format::json;
  throw ParameterError("unknown format '" + std::string(text) + "' (expected csv, tsv or json)");
}

TextTable table1_text() {
  TextTable t{{"x", "L"}, {}};
  for (const auto& r : table1()) t.rows.push_back({r.x.to_decimal(3), r.rounded});
  return t;
}

TextTable table2_text() {
  TextTable t{{"x", "g1", "g2"}, {}};
  for (const auto& r : table2()) t.rows.push_back({r.x.to_decimal(4), r.rounded_g1, r.rounded_g2});
  return t;
}

TextTable figure1_text() {
  TextTable t{{"x", "G"}, {}};
  for (const auto& r : figure1()) t.rows.push_back({r.x.to_decimal(3), shortest_decimal(r.G.mid())});
  return t;
}

std::string render(const TextTable& table, Format format) {
  std::string out;
  if (format == Format::json) {
    out += "[\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      out += "  {";
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out += ", ";
        out += "\"" + table.header[c] + "\": " + table.rows[i][c];
      }
      out += i + 1 < table.rows.size() ? "},\n" : "}\n";
    }
    return out + "]\n";
  }
  const char sep = format == Format::csv ? ',' : '\t';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += sep;
      out += cells[c];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

TextTable parse_delimited(std::string_view text, Format format) {
  if (format == Format::json) throw ParameterError("parse_delimited reads csv or tsv only");
  const char sep = format == Format::csv ? ',' : '\t';
  std::istringstream in{std::string(text)};
  std::string line;
  TextTable t;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, sep)) cells.push_back(cell);
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != t.header.size()) throw ValidationError("row width differs from header: " + line);
      t.rows.push_back(std::move(cells));
    }
  }
  if (first) throw ValidationError("table has no header");
  return t;
}

}  // namespace phicert
