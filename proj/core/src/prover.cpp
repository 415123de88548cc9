#include "phicert/prover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "phicert/errors.hpp"
#include "phicert/golden.hpp"

namespace phicert {
namespace {

Function named(FnId id) {
  Function f;
  f.spec = std::string(short_name(id));
  f.value = [id](const Interval& x) { return evaluate(id, x); };
  f.scalar = [id](double x) { return scalar::evaluate(id, x); };
  switch (id) {
    case FnId::entropy:
      f.derivative = binary_entropy_derivative;
      break;
    case FnId::golden_gap:
      f.derivative = golden_gap_derivative;
      break;
    case FnId::golden_gap_derivative:
      f.derivative = [](const Interval& x) {
        return convexity_numerator(x) / (Interval(1.0) - powi(x, 2));
      };
      break;
    case FnId::convexity_numerator:
      f.derivative = convexity_numerator_derivative;
      break;
    case FnId::entropy_of_square:
      f.derivative = entropy_of_square_derivative;
      break;
    case FnId::scaled_entropy:
      f.derivative = scaled_entropy_derivative;
      break;
    case FnId::entropy_derivative:
      break;
  }
  return f;
}

Function weighted(double weight) {
  Function f;
  const Interval w(weight);
  f.spec = "Gw(" + shortest_decimal(weight) + ")";
  f.value = [w](const Interval& x) { return weighted_gap(w, x); };
  f.derivative = [w](const Interval& x) { return weighted_gap_derivative(w, x); };
  f.scalar = [weight](double x) {
    return weight * scalar::binary_entropy(x * x) - x * scalar::binary_entropy(x);
  };
  return f;
}

}  // namespace

Function make_function(std::string_view spec) {
  const std::string original(spec);
  bool negate = false;
  if (!spec.empty() && spec.front() == '-') {
    negate = true;
    spec.remove_prefix(1);
  }
  Function f;
  if (spec.rfind("Gw(", 0) == 0) {
    const auto close = spec.find(')');
    if (close == std::string_view::npos) throw ParameterError("unterminated Gw( in '" + original + "'");
    f = weighted(parse_double(spec.substr(3, close - 3)));
    spec.remove_prefix(close + 1);
  } else {
    const auto cut = spec.find_first_of("+-");
    const auto id = parse_fn_id(spec.substr(0, cut));
    if (!id) throw ParameterError("unknown function '" + original + "'");
    f = named(*id);
    spec.remove_prefix(cut == std::string_view::npos ? spec.size() : cut);
  }
  double shift = 0.0;
  if (!spec.empty()) {
    const bool minus = spec.front() == '-';
    shift = parse_double(spec.substr(1));
    if (minus) shift = -shift;
  }
  if (negate) {
    auto value = f.value;
    auto derivative = f.derivative;
    auto sc = f.scalar;
    f.value = [value](const Interval& x) { return -value(x); };
    if (derivative) f.derivative = [derivative](const Interval& x) { return -derivative(x); };
    f.scalar = [sc](double x) { return -sc(x); };
  }
  if (shift != 0.0) {
    auto value = f.value;
    auto sc = f.scalar;
    f.value = [value, shift](const Interval& x) { return value(x) + shift; };
    f.scalar = [sc, shift](double x) { return sc(x) + shift; };
  }
  f.spec = original;
  return f;
}

Interval enclose(const Function& f, const Interval& box) {
  const Interval natural = f.value(box);
  if (!f.derivative || box.is_point()) return natural;
  try {
    const double m = box.mid();
    const Interval centred = f.value(Interval(m)) + f.derivative(box) * (box - m);
    const double lo = std::max(natural.lo(), centred.lo());
    const double hi = std::min(natural.hi(), centred.hi());
    if (lo <= hi) return Interval(lo, hi);
  } catch (const DomainError&) {
    // Derivative undefined on the closed box (e.g. touches 0 or 1).
  }
  return natural;
}

Certificate prove_nonneg(const Function& f, const Interval& domain, int max_depth,
                         double strict_margin) {
  if (max_depth < 1) throw ParameterError("max_depth must be positive");
  if (!(strict_margin >= 0.0)) throw ParameterError("strict_margin must be >= 0");

  Certificate cert;
  cert.pipeline = Pipeline::generic;
  cert.toolinfo = current_toolinfo();
  cert.parameters = {{"fn", f.spec},
                     {"lo", shortest_decimal(domain.lo())},
                     {"hi", shortest_decimal(domain.hi())},
                     {"max_depth", std::to_string(max_depth)},
                     {"strict_margin", shortest_decimal(strict_margin)}};

  struct Pending {
    Interval box;
    int depth;
  };
  std::vector<Pending> stack{{domain, 0}};
  double min_lower = std::numeric_limits<double>::infinity();
  int deepest = 0;
  std::size_t accepted = 0;

  while (!stack.empty()) {
    const Pending item = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, item.depth);

    Interval e;
    try {
      e = enclose(f, item.box);
    } catch (const DomainError& err) {
      throw DomainError(std::string(err.what()) + " (on box " + item.box.str() + ")");
    }

    if (e.lo() >= strict_margin) {
      cert.add_step("f >= margin on box", {item.box}, e, Verdict::certified);
      min_lower = std::min(min_lower, e.lo());
      ++accepted;
      continue;
    }
    const bool refuted = e.hi() < strict_margin;
    const bool exhausted = item.depth >= max_depth || item.box.width() == 0.0 ||
                           item.box.mid() == item.box.lo() || item.box.mid() == item.box.hi();
    if (refuted || exhausted) {
      Step w{refuted ? "upper bound below margin on box" : "depth exhausted without a decision",
             {item.box}, e, Verdict::undecided};
      cert.steps.push_back(w);
      cert.witness = w;
      break;
    }
    const auto [left, right] = bisect(item.box);
    stack.push_back({right, item.depth + 1});
    stack.push_back({left, item.depth + 1});
  }

  cert.finalize();
  cert.results = {{"boxes_accepted", std::to_string(accepted)},
                  {"deepest_level", std::to_string(deepest)}};
  if (accepted > 0) cert.results.emplace_back("min_lower_bound", shortest_decimal(min_lower));
  return cert;
}

}  // namespace phicert
