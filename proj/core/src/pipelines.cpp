#include "phicert/pipelines.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "phicert/chain.hpp"
#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"
#include "phicert/golden.hpp"
#include "phicert/prover.hpp"

namespace phicert {
namespace {

constexpr int kMonotonicityBoxes = 32;
constexpr int kLipschitzBoxes = 64;
constexpr int kSandwichSamples = 20;

Verdict verdict_of(bool ok) { return ok ? Verdict::certified : Verdict::failed; }

Certificate start(Pipeline p) {
  require_faithful_ln();
  Certificate cert;
  cert.pipeline = p;
  cert.toolinfo = current_toolinfo();
  return cert;
}

std::vector<Interval> split_evenly(const Interval& range, int parts) {
  std::vector<Interval> boxes;
  const double w = range.width() / parts;
  double lo = range.lo();
  for (int i = 0; i < parts; ++i) {
    const double hi = i + 1 == parts ? range.hi() : range.lo() + w * (i + 1);
    boxes.emplace_back(lo, hi);
    lo = hi;
  }
  return boxes;
}

// Every box of the derivative enclosure strictly negative.
Step decreasing_step(const std::string& what, Interval (*derivative)(const Interval&),
                     const Interval& range) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& box : split_evenly(range, kMonotonicityBoxes)) {
    worst = std::max(worst, derivative(box).hi());
  }
  const Interval bound(worst);
  return Step{what + " decreasing: derivative upper bound < 0 on " + std::to_string(kMonotonicityBoxes) +
                  " boxes",
              {range}, bound, verdict_of(worst < 0.0)};
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Step exact_le(const std::string& what, std::int64_t lhs, std::int64_t rhs) {
  return Step{what + ": " + std::to_string(lhs) + " <= " + std::to_string(rhs),
              {Interval(static_cast<double>(lhs)), Interval(static_cast<double>(rhs))},
              Interval(static_cast<double>(rhs - lhs)), verdict_of(lhs <= rhs)};
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ',';
    out += x.str();
  }
  return out;
}

std::vector<Rational> split_rationals(const std::string& text) {
  std::vector<Rational> xs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto cell = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (!cell.empty()) xs.push_back(Rational::parse(cell));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return xs;
}

std::string required(const Certificate& cert, std::string_view key) {
  auto v = cert.parameter(key);
  if (!v) throw ValidationError("certificate lacks parameter '" + std::string(key) + "'");
  return *v;
}

}  // namespace

const PieceSpec& piece(PieceName name) {
  static const PieceSpec specs[] = {
      {PieceName::I1, Rational(3, 5), Rational(77, 100)},
      {PieceName::I2, Rational(76, 100), Rational(98, 100)},
      {PieceName::I3, Rational(98, 100), Rational(1)},
  };
  return specs[static_cast<int>(name)];
}

Certificate verify_convexity_piece(const ConvexityOptions& options) {
  const Rational& step = options.grid_step;
  if (step <= Rational(0)) throw ParameterError("grid step must be positive");
  const Interval slack = options.lipschitz * step.enclose() / 2.0;
  if (!(slack.hi() <= options.threshold)) {
    throw ParameterError("grid too coarse: lipschitz * grid_step / 2 = " + shortest_decimal(slack.hi()) +
                         " exceeds threshold " + shortest_decimal(options.threshold));
  }

  Certificate cert = start(Pipeline::I1);
  cert.parameters = {{"grid_step", step.str()},
                     {"threshold", shortest_decimal(options.threshold)},
                     {"lipschitz", shortest_decimal(options.lipschitz)}};

  const PieceSpec& spec = piece(PieceName::I1);
  const std::int64_t k_first = (spec.lo / step).ceil();
  const std::int64_t k_last = (spec.hi / step).floor();
  if (k_first > k_last) throw ParameterError("grid step leaves no grid point in [0.6, 0.77]");

  // Every point of [phi, 0.77] lies within step/2 of a grid point.
  const Rational half = step / Rational(2);
  const Rational first = Rational(k_first) * step;
  const Rational last = Rational(k_last) * step;
  const bool covers_left = (first - half).enclose().hi() <= phi().lo();
  const bool covers_right = last + half >= spec.hi;
  cert.add_step("grid is step/2-dense in [phi, 0.77]", {phi(), spec.hi.enclose()},
                Interval((first - half).enclose().lo(), (last + half).enclose().hi()),
                verdict_of(covers_left && covers_right));

  const Interval piece_range(spec.lo.enclose().lo(), spec.hi.enclose().hi());
  double worst_derivative = 0.0;
  for (const auto& box : split_evenly(piece_range, kLipschitzBoxes)) {
    worst_derivative = std::max(worst_derivative, convexity_numerator_derivative(box).mag());
  }
  cert.add_step("|L'| <= lipschitz on [0.6, 0.77]", {piece_range},
                Interval(0.0, worst_derivative), verdict_of(worst_derivative <= options.lipschitz));

  double min_lower = std::numeric_limits<double>::infinity();
  for (std::int64_t k = k_first; k <= k_last; ++k) {
    const Rational x = Rational(k) * step;
    const Interval value = convexity_numerator(x.enclose());
    const bool ok = value.lo() >= options.threshold;
    min_lower = std::min(min_lower, value.lo());
    Step& s = cert.add_step("L(x) >= threshold at x = " + x.exact_decimal(3), {x.enclose()}, value,
                            verdict_of(ok));
    if (!ok && !cert.witness) cert.witness = s;
  }

  cert.add_step("G(phi) contains 0", {phi()}, golden_gap(phi()),
                verdict_of(golden_gap(phi()).contains_zero()));
  cert.add_step("G'(phi) contains 0", {phi()}, golden_gap_derivative(phi()),
                verdict_of(golden_gap_derivative(phi()).contains_zero()));

  cert.finalize();
  cert.results = {{"grid_points", std::to_string(k_last - k_first + 1)},
                  {"min_lower_bound", shortest_decimal(min_lower)},
                  {"max_abs_L_derivative", shortest_decimal(worst_derivative)}};
  if (cert.verdict == Verdict::certified) {
    cert.results.emplace_back("conclusion", "L > 0 on [phi, 0.77], so G is convex there and G >= 0");
  }
  return cert;
}

Certificate verify_chain_piece(const ChainOptions& options) {
  const bool builtin = options.abscissae.empty();
  const std::vector<Rational> xs = builtin ? builtin_chain_abscissae() : options.abscissae;
  if (xs.size() < 2) throw ParameterError("chain needs at least two rows");
  if (xs.front() <= Rational(5, 7)) {
    throw ParameterError("chain must start above 5/7, where x H(x) is known to decrease");
  }
  if (!(options.margin >= 0.0)) throw ParameterError("chain margin must be >= 0");

  Certificate cert = start(Pipeline::I2);
  cert.parameters = {{"margin", shortest_decimal(options.margin)},
                     {"source", builtin ? "builtin" : "custom"},
                     {"abscissae", join(xs)}};

  const ChainTable table(xs);
  const PieceSpec& spec = piece(PieceName::I2);
  const Interval span(table.rows().front().x.enclose().lo(), table.rows().back().x.enclose().hi());

  cert.add_step("chain covers [0.76, 0.98]", {spec.lo.enclose(), spec.hi.enclose()}, span,
                verdict_of(xs.front() <= spec.lo && xs.back() >= spec.hi));

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    const auto& a = table.rows()[i];
    const auto& b = table.rows()[i + 1];
    const Interval gap = b.g1 - a.g2;
    const bool ok = gap.lo() >= options.margin;
    min_gap = std::min(min_gap, gap.lo());
    Step& s = cert.add_step("g1(x_" + std::to_string(i + 2) + ") - g2(x_" + std::to_string(i + 1) +
                                ") >= margin at [" + a.x.exact_decimal(4) + ", " + b.x.exact_decimal(4) + "]",
                            {a.x.enclose(), b.x.enclose()}, gap, verdict_of(ok));
    if (!ok && !cert.witness) cert.witness = s;
  }

  cert.steps.push_back(decreasing_step("g1 = phi H(x^2)", entropy_of_square_derivative, span));
  cert.steps.push_back(decreasing_step("g2 = x H(x)", scaled_entropy_derivative, span));

  const Certificate facts = verify_exact_facts();
  cert.add_step("g2 decreasing on [5/7, 1] by the exact fact 7^7 * 8 <= 5^10", {facts.steps.front().inputs},
                facts.steps.front().output, facts.steps.front().verdict);

  cert.finalize();
  cert.results = {{"rows", std::to_string(table.size())}, {"min_certified_gap", shortest_decimal(min_gap)}};
  return cert;
}

Certificate verify_exact_facts() {
  Certificate cert;
  cert.pipeline = Pipeline::exact_facts;
  cert.toolinfo = current_toolinfo();

  // (7/5)^(10/3) <= 7/2  <=>  7^10 * 2^3 <= 5^10 * 7^3  <=>  7^7 * 8 <= 5^10,
  // which is g2'(5/7) <= 0.
  cert.steps.push_back(exact_le("(7/5)^(10/3) <= 7/2 as 7^7 * 8 <= 5^10", ipow(7, 7) * 8, ipow(5, 10)));
  // The two-step route: (7/5)^3 <= 14/5 and 7/5 <= (5/4)^3.
  cert.steps.push_back(exact_le("(7/5)^3 <= 14/5 as 7^3 * 5 <= 14 * 5^3", ipow(7, 3) * 5, 14 * ipow(5, 3)));
  cert.steps.push_back(exact_le("7/5 <= (5/4)^3 as 7 * 4^3 <= 5^3 * 5", 7 * ipow(4, 3), ipow(5, 3) * 5));
  // log2(50) >= 5.5  <=>  50^2 >= 2^11.
  cert.steps.push_back(exact_le("log2(50) >= 5.5 as 2^11 <= 50^2", ipow(2, 11), 50 * 50));
  // 5.5 >= 3 + sqrt(5)  <=>  (5.5 - 3)^2 = 25/4 >= 5  <=>  5 * 4 <= 25.
  cert.steps.push_back(exact_le("5.5 >= 3 + sqrt(5) as 5 * 4 <= 25", 5 * 4, 25));

  cert.finalize();
  if (cert.verdict != Verdict::certified) {
    throw Error("exact integer fact failed; the build is broken");
  }
  return cert;
}

std::vector<Step> tail_conditions(const Interval& weight, const Interval& eps_max) {
  std::vector<Step> steps;
  const Interval one(1.0);
  const Interval two(2.0);
  const Interval eps(0.0, eps_max.hi());

  const Interval product_at_end = weight * (one - eps_max) * (two - eps_max);
  steps.push_back({"weight (1-eps)(2-eps) >= 1 at eps = eps_max", {weight, eps_max}, product_at_end,
                   verdict_of(product_at_end.lo() >= 1.0)});

  const Interval product_slope = weight * (2.0 * eps - 3.0);
  steps.push_back({"d/deps weight (1-eps)(2-eps) = -weight (3 - 2 eps) < 0 on [0, eps_max]", {weight, eps},
                   product_slope, verdict_of(product_slope.hi() < 0.0)});

  const Interval first_term = (one - eps) * (one - weight * (one - eps) * (two - eps));
  steps.push_back({"(1-eps)(1 - weight (1-eps)(2-eps)) <= 0 on [0, eps_max]", {weight, eps}, first_term,
                   verdict_of(first_term.hi() <= 0.0)});

  const Interval log_slope = -(ln(two - eps) + one);
  steps.push_back({"d/deps (2-eps) ln(2-eps) < 0 on [0, eps_max], so weight (2-eps) ln(2-eps) <= 2 weight ln 2",
                   {eps}, log_slope, verdict_of(log_slope.hi() < 0.0)});

  const Interval lead = 2.0 * weight - one;
  const Interval rest = one - weight;
  steps.push_back({"2 weight - 1 > 0 and 1 - weight >= 0", {weight}, Interval(std::min(lead.lo(), rest.lo()),
                                                                               std::max(lead.hi(), rest.hi())),
                   verdict_of(lead.lo() > 0.0 && rest.lo() >= 0.0)});

  const Interval lhs = lead * ln(one / eps_max);
  const Interval rhs = 2.0 * weight * ln(two);
  steps.push_back({"(2 weight - 1) ln(1/eps_max) >= 2 weight ln 2", {lhs, rhs}, lhs - rhs,
                   verdict_of(lhs.lo() >= rhs.hi())});
  return steps;
}

Certificate verify_tail_piece(const Rational& eps_max) {
  if (eps_max <= Rational(0) || eps_max > Rational(1, 50)) {
    throw ParameterError("eps_max must lie in (0, 0.02], got " + eps_max.str());
  }
  Certificate cert = start(Pipeline::I3);
  cert.parameters = {{"eps_max", eps_max.str()}};

  const Interval e = eps_max.enclose();
  for (auto& s : tail_conditions(phi(), e)) {
    s.description = "[weight = phi] " + s.description;
    cert.steps.push_back(std::move(s));
  }

  // Exact backup for the final comparison; valid for any eps_max <= 1/50
  // because ln(1/eps) only grows as eps shrinks.
  const Certificate facts = verify_exact_facts();
  cert.add_step("exact chain (sqrt5 - 2) log 50 >= (sqrt5 - 1) log 2 via log2 50 >= 5.5 >= 3 + sqrt5",
                {facts.steps[3].output, facts.steps[4].output}, Interval(0.0),
                conjoin(facts.steps[3].verdict, facts.steps[4].verdict));

  // Spot checks of eps (ln(1/eps) + 1 - eps) <= H(eps) <= eps (ln(1/eps) + 1).
  for (int k = 1; k <= kSandwichSamples; ++k) {
    const Interval x = (eps_max * Rational(k, kSandwichSamples)).enclose();
    const Interval log_inv = ln(Interval(1.0) / x);
    const Interval lower = x * (log_inv + 1.0 - x);
    const Interval upper = x * (log_inv + 1.0);
    const Interval h = binary_entropy(x);
    const Interval sandwich(lower.lo(), upper.hi());
    cert.add_step("Taylor sandwich holds at eps = " + shortest_decimal(x.mid()), {x, sandwich}, h,
                  verdict_of(h.hi() >= lower.lo() && h.lo() <= upper.hi() && sandwich.contains(h)));
  }

  cert.finalize();
  if (cert.verdict == Verdict::certified) {
    cert.results.emplace_back("conclusion", "phi H(x^2) >= x H(x) on [1 - eps_max, 1], equality only at x = 1");
  }
  return cert;
}

Certificate verify_claim1(const Claim1Options& options) {
  Certificate cert = start(Pipeline::claim1);

  ChainOptions chain = options.chain;
  if (options.synthesize_chain) {
    chain.abscissae = synthesize_chain(Rational(7598, 10000), piece(PieceName::I2).hi, chain.margin);
  }
  cert.children.push_back(verify_convexity_piece(options.convexity));
  cert.children.push_back(verify_chain_piece(chain));
  cert.children.push_back(verify_exact_facts());
  cert.children.push_back(verify_tail_piece(options.eps_max));

  const Certificate& chain_cert = cert.children[1];
  const std::vector<Rational> xs = split_rationals(*chain_cert.parameter("abscissae"));
  const Rational tail_start = Rational(1) - options.eps_max;
  const Rational& convex_end = piece(PieceName::I1).hi;
  cert.add_step("pieces cover [phi, 1]: 0.77 >= x_1 and x_n >= 1 - eps_max",
                {convex_end.enclose(), xs.front().enclose(), xs.back().enclose(), tail_start.enclose()},
                Interval(0.0), verdict_of(convex_end >= xs.front() && xs.back() >= tail_start));

  cert.parameters = {{"grid_step", options.convexity.grid_step.str()},
                     {"threshold", shortest_decimal(options.convexity.threshold)},
                     {"lipschitz", shortest_decimal(options.convexity.lipschitz)},
                     {"margin", shortest_decimal(chain.margin)},
                     {"chain_source", options.synthesize_chain       ? "synthesized"
                                      : options.chain.abscissae.empty() ? "builtin"
                                                                        : "custom"},
                     {"abscissae", join(xs)},
                     {"eps_max", options.eps_max.str()}};
  cert.finalize();
  for (const auto& child : cert.children) {
    if (child.verdict != Verdict::certified) {
      cert.results.emplace_back("first_unsuccessful_piece", std::string(to_string(child.pipeline)));
      break;
    }
  }
  if (cert.verdict == Verdict::certified) {
    cert.results.emplace_back("conclusion", "phi H(x^2) >= x H(x) for all x in [phi, 1]");
  }
  return cert;
}

Certificate rerun(const Certificate& cert) {
  switch (cert.pipeline) {
    case Pipeline::I1:
      return verify_convexity_piece({Rational::parse(required(cert, "grid_step")),
                                     parse_double(required(cert, "threshold")),
                                     parse_double(required(cert, "lipschitz"))});
    case Pipeline::I2: {
      ChainOptions o;
      o.margin = parse_double(required(cert, "margin"));
      if (required(cert, "source") != "builtin") o.abscissae = split_rationals(required(cert, "abscissae"));
      return verify_chain_piece(o);
    }
    case Pipeline::I3:
      return verify_tail_piece(Rational::parse(required(cert, "eps_max")));
    case Pipeline::exact_facts:
      return verify_exact_facts();
    case Pipeline::generic:
      return prove_nonneg(make_function(required(cert, "fn")),
                          Interval(parse_double(required(cert, "lo")), parse_double(required(cert, "hi"))),
                          std::stoi(required(cert, "max_depth")),
                          parse_double(required(cert, "strict_margin")));
    case Pipeline::claim1: {
      Claim1Options o;
      o.convexity = {Rational::parse(required(cert, "grid_step")), parse_double(required(cert, "threshold")),
                     parse_double(required(cert, "lipschitz"))};
      o.chain.margin = parse_double(required(cert, "margin"));
      if (required(cert, "chain_source") != "builtin") o.chain.abscissae = split_rationals(required(cert, "abscissae"));
      o.eps_max = Rational::parse(required(cert, "eps_max"));
      return verify_claim1(o);
    }
  }
  throw ValidationError("unknown pipeline");
}

}  // namespace phicert
