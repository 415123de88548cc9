// Acceptance gate: prints one PASS/FAIL line per criterion and exits with the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hp_oracle.hpp"
#include "phicert/chain.hpp"
#include "phicert/entropy.hpp"
#include "phicert/frankl.hpp"
#include "phicert/golden.hpp"
#include "phicert/measure.hpp"
#include "phicert/phi_star.hpp"
#include "phicert/pipelines.hpp"
#include "phicert/prover.hpp"
#include "phicert/tables.hpp"

namespace {

using namespace phicert;

// Tolerances and limits.
constexpr double kTableTol = 1e-4;
constexpr double kL_Threshold = 0.04;
constexpr double kL_ObservedMin = 0.09;
constexpr double kChainMargin = 1e-3;
constexpr double kPhiStarTol = 1e-6;
constexpr double kPropertyTol = 1e-9;
constexpr double kEqualityTol = 1e-12;
constexpr double kEndpointTol = 1e-6;
constexpr double kZeroPoint = 1e-4;

// L at x = 0.600, 0.605, ..., 0.770 reference values, to 4 decimals.
constexpr double kReferenceL[35] = {
    0.1020, 0.1039, 0.1057, 0.1074, 0.1089, 0.1104, 0.1117, 0.1130, 0.1141, 0.1151, 0.1159, 0.1167,
    0.1173, 0.1178, 0.1182, 0.1184, 0.1185, 0.1184, 0.1182, 0.1178, 0.1173, 0.1167, 0.1159, 0.1149,
    0.1137, 0.1124, 0.1109, 0.1093, 0.1075, 0.1054, 0.1032, 0.1009, 0.0983, 0.0955, 0.0925};

struct Result {
  bool ok = true;
  std::string detail;
};

int run_cli(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

Result table1_reproduction() {
  const auto rows = table1();
  if (rows.size() != 35) return {false, "expected 35 rows"};
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, std::abs(std::stod(rows[i].rounded) - kReferenceL[i]));
  }
  return {worst <= kTableTol + 1e-12, "max |rounded - reference| = " + shortest_decimal(worst)};
}

Result convexity_certificate() {
  ConvexityOptions o;
  o.threshold = kL_Threshold;
  const Certificate c = verify_convexity_piece(o);
  const double min_lower = std::stod(*c.result("min_lower_bound"));
  return {c.verdict == Verdict::certified && min_lower >= kL_ObservedMin,
          "verdict " + std::string(to_string(c.verdict)) + ", certified min L = " + shortest_decimal(min_lower)};
}

Result table2_reproduction() {
  const auto rows = table2();
  if (rows.size() != 97) return {false, "expected 97 rows"};
  double worst = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, std::abs(std::stod(r.rounded_g1) - r.printed_g1));
    worst = std::max(worst, std::abs(std::stod(r.rounded_g2) - r.printed_g2));
  }
  const ChainTable chain(builtin_chain_abscissae());
  std::size_t certified = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain.certified_gap(i) >= kChainMargin) ++certified;
  }
  return {worst <= kTableTol + 1e-12 && certified == 96,
          "max value deviation " + shortest_decimal(worst) + ", " + std::to_string(certified) +
              "/96 gaps >= 1e-3, min gap " + shortest_decimal(chain.min_certified_gap())};
}

Result exact_facts() {
  constexpr std::int64_t lhs = 7LL * 7 * 7 * 7 * 7 * 7 * 7 * 8;
  constexpr std::int64_t rhs = 5LL * 5 * 5 * 5 * 5 * 5 * 5 * 5 * 5 * 5;
  static_assert(lhs == 6588344 && rhs == 9765625);
  const Certificate c = verify_exact_facts();
  const bool ok = c.verdict == Verdict::certified && lhs <= rhs && 50 * 50 >= 2048 && 25 >= 5 * 4;
  return {ok, "7^7*8 = 6588344 <= 5^10 = 9765625, 2500 >= 2048, 25/4 >= 5"};
}

Result claim1_cli() {
  const int clean = run_cli({"certify"});
  std::string err1;
  const int sabotaged = run_cli({"certify", "--threshold", "0.12"}, &err1);
  std::string err2;
  const int sabotaged_chain = run_cli({"certify", "--margin", "0.01"}, &err2);
  const bool witness1 = err1.find("first unsuccessful step: L(x) >= threshold at x = 0.600") != std::string::npos;
  const bool witness2 = err2.find("piece I2: failed") != std::string::npos &&
                        err2.find("first unsuccessful step: g1(x_2) - g2(x_1) >= margin") != std::string::npos;
  return {clean == 0 && sabotaged == 1 && sabotaged_chain == 1 && witness1 && witness2,
          "default exit " + std::to_string(clean) + ", threshold 0.12 exit " + std::to_string(sabotaged) +
              ", margin 0.01 exit " + std::to_string(sabotaged_chain)};
}

Result cross_check_prover() {
  const Certificate away = prove_nonneg(make_function("G"), Interval(0.619, 0.98), 30);
  const Certificate tangent = prove_nonneg(make_function("G"), Interval(0.6, 0.65), 30);
  return {away.verdict == Verdict::certified && tangent.verdict == Verdict::undecided,
          "[0.619, 0.98] " + std::string(to_string(away.verdict)) + " (" + *away.result("boxes_accepted") +
              " boxes), [0.6, 0.65] " + std::string(to_string(tangent.verdict))};
}

Result phi_star() {
  const PhiStarBracket b = find_phi_star(kPhiStarTol);
  const bool contains = compare_with_phi(b.lo) < 0 && compare_with_phi(b.hi) > 0;
  return {!b.partial && b.hi - b.lo <= kPhiStarTol && contains,
          "[" + shortest_decimal(b.lo) + ", " + shortest_decimal(b.hi) + "], " + std::to_string(b.probes.size()) +
              " probes"};
}

Result concavity_suite() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = INFINITY;
  for (const double phi : {0.3, 0.5, 0.618, 0.8}) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_measure(phi, rng);
      const auto b = random_measure(phi, rng);
      worst = std::min(worst, concavity_gap(a, b, u(rng)));
    }
  }
  return {worst >= -kPropertyTol, "4000 triples, min gap " + shortest_decimal(worst)};
}

Result minimizer_suite() {
  std::ostringstream detail;
  bool ok = true;
  for (const double phi : {0.3, 0.5, 0.618, 0.8}) {
    const MinimizeResult r = minimize_F(phi, 5, 20, 0, 0);
    const auto support = prune(DiscreteMeasure(r.atoms, phi));
    double lowest = 1.0;
    for (const auto& a : support) lowest = std::min(lowest, a.point);
    const bool good = support.size() <= 2 && (support.size() < 2 || lowest < kZeroPoint);
    ok = ok && good;
    detail << "phi " << phi << ": " << support.size() << " pt" << (support.size() == 2 ? ", low " + shortest_decimal(lowest) : "")
           << "; ";
  }
  return {ok, detail.str()};
}

Result two_point_structure() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double h = 0.25;
  int good = 0;
  for (int i = 0; i < 100; ++i) {
    const double p = 0.01 + 0.98 * u(rng);
    const double x = 0.05 + 0.95 * u(rng);
    const double y = x * (0.01 + 0.98 * u(rng));
    const TwoPointContext ctx(p, x, y);
    auto g = [&](double z) { return two_point_cleared_curvature(ctx, Interval(z)); };
    const Interval third = g(0.75) - 3.0 * g(0.5) + 3.0 * g(0.25) - g(0.0);
    const Interval lead = (g(0.5) - 2.0 * g(0.25) + g(0.0)) / (2.0 * h * h);
    const hp::Real exact = -hp::Real(x) * hp::Real(y);
    if (third.contains_zero() && hp::Real(lead.lo()) <= exact && exact <= hp::Real(lead.hi())) ++good;
  }
  return {good == 100, std::to_string(good) + "/100 contexts quadratic with -xy leading coefficient"};
}

Result frankl_brute_force() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 1; n <= 3; ++n) {
    const FranklSummary s = exhaustive_check(n, 0);
    ok = ok && s.min_fraction >= Rational(1, 2) && s.bound_violations == 0;
    detail << "n=" << n << ": " << s.evaluated << " families, min " << s.min_fraction.str() << "; ";
  }
  const auto t0 = std::chrono::steady_clock::now();
  const FranklSummary four = exhaustive_check(4, 0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && four.bound_violations == 0 && secs < 60.0;
  detail << "n=4: " << four.evaluated << " families, min " << four.min_fraction.str();
  return {ok, detail.str()};
}

Result gilmer_suite() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 6);
  const double cap = union_closed_constant().lo();
  double worst = INFINITY;
  int accepted = 0;
  while (accepted < 1000) {
    const int m = count(rng);
    std::vector<double> p(m);
    std::vector<double> w(m);
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      p[i] = u(rng);
      total += (w[i] = u(rng) + 1e-3);
    }
    double mean = 0.0;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      w[i] /= total;
      if (i + 1 < m) sum += w[i];
    }
    w[m - 1] = 1.0 - sum;
    for (int i = 0; i < m; ++i) mean += w[i] * p[i];
    if (mean > cap) continue;
    worst = std::min(worst, gilmer_tight_check(p, w));
    ++accepted;
  }
  const double equality = gilmer_tight_check({union_closed_constant().mid()}, {1.0});
  return {worst >= -kPropertyTol && std::abs(equality) <= kEqualityTol,
          "1000 instances, min gap " + shortest_decimal(worst) + ", equality case " + shortest_decimal(equality)};
}

Result figure1_data() {
  std::ostringstream out;
  std::ostringstream err;
  const std::vector<std::string> args = {"plot"};
  if (cli::run(args, out, err) != 0) return {false, "plot failed: " + err.str()};
  const TextTable t = parse_delimited(out.str(), Format::csv);
  if (t.rows.size() != 401) return {false, "expected 401 samples"};
  double worst = INFINITY;
  double near_phi = NAN;
  double best_dist = INFINITY;
  const double golden = phi().mid();
  for (const auto& row : t.rows) {
    const double x = std::stod(row[0]);
    const double g = std::stod(row[1]);
    if (compare_with_phi(x) > 0) worst = std::min(worst, g);
    if (std::abs(x - golden) < best_dist) {
      best_dist = std::abs(x - golden);
      near_phi = g;
    }
  }
  const double at_one = std::stod(t.rows.back()[1]);
  return {worst >= -kPropertyTol && std::abs(near_phi) <= kEndpointTol && std::abs(at_one) <= kEndpointTol,
          "min G for x >= phi " + shortest_decimal(worst) + ", G near phi " + shortest_decimal(near_phi) +
              ", G(1) " + shortest_decimal(at_one)};
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Result()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"table1 values", 1.0, table1_reproduction},
      {"convexity piece certificate", 1.0, convexity_certificate},
      {"table2 values and chain gaps", 1.0, table2_reproduction},
      {"exact integer facts", 1.0, exact_facts},
      {"full certificate and sabotage", 5.0, claim1_cli},
      {"prover cross-check", 10.0, cross_check_prover},
      {"phi-star bracket", 60.0, phi_star},
      {"concavity property suite", 30.0, concavity_suite},
      {"two-point minimizer suite", 120.0, minimizer_suite},
      {"two-point curvature structure", 10.0, two_point_structure},
      {"union-closed brute force", 120.0, frankl_brute_force},
      {"tight entropy inequality suite", 10.0, gilmer_suite},
      {"figure data", 10.0, figure1_data},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit_seconds) {
      r.ok = false;
      r.detail += " (over time limit)";
    }
    if (!r.ok) ++failures;
    std::printf("%s %2zu %-32s %8.3fs  %s\n", r.ok ? "PASS" : "FAIL", i + 1, c.name, secs, r.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
