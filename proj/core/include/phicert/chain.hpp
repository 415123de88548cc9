#pragma once

#include <string_view>
#include <vector>

#include "phicert/interval.hpp"
#include "phicert/rational.hpp"

namespace phicert {

// One row of a printed chain table: the abscissa as an exact decimal and the
// 4-decimal display values of g1 and g2. Display values never enter a proof.
struct PrintedRow {
  Rational x;
  double g1 = 0.0;
  double g2 = 0.0;
};

// Parses the TSV asset format: header "x<TAB>g1<TAB>g2", then one row per
// line. Throws ValidationError on malformed input.
std::vector<PrintedRow> parse_chain_tsv(std::string_view text);

// The 97-row table shipped with the library.
std::string_view builtin_chain_tsv();
const std::vector<PrintedRow>& builtin_chain_rows();
std::vector<Rational> builtin_chain_abscissae();

struct ChainRow {
  Rational x;
  Interval g1;  // enclosure of phi H(x^2)
  Interval g2;  // enclosure of x H(x)
};

// Sandwich chain x_1 < ... < x_n with certified enclosures of g1 and g2.
// On [x_i, x_{i+1}] both functions decrease, so
//   g2(x) <= g2(x_i) <= g1(x_{i+1}) <= g1(x)
// whenever the certified gap below is nonnegative.
class ChainTable {
 public:
  // Throws ValidationError unless the abscissae are strictly increasing and
  // lie in (0,1).
  explicit ChainTable(const std::vector<Rational>& xs);

  const std::vector<ChainRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  // Lower bound of g1(x_{i+1}) - g2(x_i).
  double certified_gap(std::size_t i) const;
  double min_certified_gap() const;

 private:
  std::vector<ChainRow> rows_;
};

// Greedy chain on the 1/10000 grid: from each x_i take the largest
// x_{i+1} <= end whose certified gap is >= margin, found by bisection.
// Throws ParameterError if the chain cannot advance or exceeds max_rows.
std::vector<Rational> synthesize_chain(const Rational& start, const Rational& end, double margin,
                                       std::size_t max_rows = 2000);

}  // namespace phicert
