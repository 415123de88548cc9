#include "phicert/chain.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "phicert/certificate.hpp"
#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"

namespace phicert {
namespace detail {
std::string_view table2_asset();
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

std::vector<PrintedRow> parse_chain_tsv(std::string_view text) {
  std::vector<PrintedRow> rows;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line, '\t');
    if (!header_seen) {
      if (cells.size() != 3 || trim(cells[0]) != "x" || trim(cells[1]) != "g1" || trim(cells[2]) != "g2") {
        throw ValidationError("chain table: expected header 'x<TAB>g1<TAB>g2'");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 3) {
      throw ValidationError("chain table line " + std::to_string(line_no) + ": expected 3 columns");
    }
    try {
      rows.push_back({Rational::parse(trim(cells[0])), parse_double(trim(cells[1])),
                      parse_double(trim(cells[2]))});
    } catch (const Error& e) {
      throw ValidationError("chain table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw ValidationError("chain table: missing header");
  return rows;
}

std::string_view builtin_chain_tsv() { return detail::table2_asset(); }

const std::vector<PrintedRow>& builtin_chain_rows() {
  static const std::vector<PrintedRow> rows = parse_chain_tsv(builtin_chain_tsv());
  return rows;
}

std::vector<Rational> builtin_chain_abscissae() {
  std::vector<Rational> xs;
  for (const auto& r : builtin_chain_rows()) xs.push_back(r.x);
  return xs;
}

ChainTable::ChainTable(const std::vector<Rational>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= Rational(0) || xs[i] >= Rational(1)) {
      throw ValidationError("chain abscissa " + xs[i].str() + " outside (0,1)");
    }
    if (i > 0 && xs[i] <= xs[i - 1]) {
      throw ValidationError("chain abscissae not strictly increasing at index " + std::to_string(i));
    }
    const Interval x = xs[i].enclose();
    rows_.push_back({xs[i], entropy_of_square(x), scaled_entropy(x)});
  }
}

double ChainTable::certified_gap(std::size_t i) const {
  return (rows_.at(i + 1).g1 - rows_.at(i).g2).lo();
}

double ChainTable::min_certified_gap() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < rows_.size(); ++i) m = std::min(m, certified_gap(i));
  return m;
}

std::vector<Rational> synthesize_chain(const Rational& start, const Rational& end, double margin,
                                       std::size_t max_rows) {
  constexpr std::int64_t kScale = 10000;
  if (start >= end) throw ParameterError("chain start must be below its end");
  const std::int64_t first = (start * Rational(kScale)).ceil();
  const std::int64_t last = (end * Rational(kScale)).ceil();

  auto g1 = [](std::int64_t k) { return entropy_of_square(Rational(k, kScale).enclose()); };

  std::vector<Rational> xs{Rational(first, kScale)};
  std::int64_t k = first;
  while (k < last) {
    if (xs.size() >= max_rows) throw ParameterError("chain synthesis exceeded row limit");
    const Interval g2 = scaled_entropy(Rational(k, kScale).enclose());
    // Same comparison as ChainTable::certified_gap.
    auto feasible = [&](std::int64_t j) { return (g1(j) - g2).lo() >= margin; };
    std::int64_t next = 0;
    if (feasible(last)) {
      next = last;
    } else {
      if (!feasible(k + 1)) {
        throw ParameterError("chain cannot advance past x = " + Rational(k, kScale).to_decimal(4) +
                             " at margin " + shortest_decimal(margin));
      }
      std::int64_t good = k + 1;
      std::int64_t bad = last;
      while (bad - good > 1) {
        const std::int64_t m = good + (bad - good) / 2;
        (feasible(m) ? good : bad) = m;
      }
      next = good;
    }
    xs.emplace_back(next, kScale);
    k = next;
  }
  return xs;
}

}  // namespace phicert
