#include "phicert/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "phicert/errors.hpp"
#include "phicert/golden.hpp"

namespace phicert {
namespace {

constexpr std::array<std::pair<FnId, std::string_view>, 7> kNames = {{
    {FnId::entropy, "H"},
    {FnId::entropy_derivative, "Hprime"},
    {FnId::golden_gap, "G"},
    {FnId::golden_gap_derivative, "Gprime"},
    {FnId::convexity_numerator, "L"},
    {FnId::entropy_of_square, "g1"},
    {FnId::scaled_entropy, "g2"},
}};

void require_closed_unit(const Interval& x, const char* fn) {
  if (x.lo() < 0.0 || x.hi() > 1.0) {
    throw DomainError(std::string(fn) + " requires argument in [0,1], got " + x.str());
  }
}

void require_open_unit(const Interval& x, const char* fn) {
  if (x.lo() <= 0.0 || x.hi() >= 1.0) {
    throw DomainError(std::string(fn) + " requires argument in (0,1), got " + x.str());
  }
}

const Interval& ln2() {
  static const Interval value = ln(Interval(2.0));
  return value;
}

// H at a single point; t ln t is 0 at t = 0 by continuity.
Interval entropy_at(double t) {
  if (t == 0.0 || t == 1.0) return Interval(0.0);
  const Interval x(t);
  const Interval y = Interval(1.0) - x;
  return -(x * ln(x)) - y * ln(y);
}

Interval entropy_derivative_at(double t) {
  const Interval x(t);
  return ln((Interval(1.0) - x) / x);
}

double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

}  // namespace

std::string_view short_name(FnId id) {
  for (const auto& [fn, name] : kNames) {
    if (fn == id) return name;
  }
  return "?";
}

std::optional<FnId> parse_fn_id(std::string_view name) {
  for (const auto& [fn, n] : kNames) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

Interval binary_entropy(const Interval& x) {
  require_closed_unit(x, "H");
  // Increasing on [0, 1/2], decreasing on [1/2, 1], maximum ln 2.
  Interval r;
  if (x.hi() <= 0.5) {
    r = Interval(entropy_at(x.lo()).lo(), entropy_at(x.hi()).hi());
  } else if (x.lo() >= 0.5) {
    r = Interval(entropy_at(x.hi()).lo(), entropy_at(x.lo()).hi());
  } else {
    r = Interval(std::min(entropy_at(x.lo()).lo(), entropy_at(x.hi()).lo()), ln2().hi());
  }
  return Interval(std::max(r.lo(), 0.0), std::min(r.hi(), ln2().hi()));
}

Interval binary_entropy_derivative(const Interval& w) {
  require_open_unit(w, "H'");
  return Interval(entropy_derivative_at(w.hi()).lo(), entropy_derivative_at(w.lo()).hi());
}

Interval entropy_of_square(const Interval& x) {
  require_closed_unit(x, "g1");
  return phi() * binary_entropy(powi(x, 2));
}

Interval scaled_entropy(const Interval& x) {
  require_closed_unit(x, "g2");
  return x * binary_entropy(x);
}

Interval golden_gap(const Interval& x) { return weighted_gap(phi(), x); }

Interval weighted_gap(const Interval& weight, const Interval& x) {
  require_closed_unit(x, "G");
  return weight * binary_entropy(powi(x, 2)) - x * binary_entropy(x);
}

Interval golden_gap_derivative(const Interval& x) { return weighted_gap_derivative(phi(), x); }

Interval weighted_gap_derivative(const Interval& weight, const Interval& x) {
  require_open_unit(x, "G'");
  const Interval sq = powi(x, 2);
  const Interval one(1.0);
  return 2.0 * x * weight * ln((one - sq) / sq) + 2.0 * x * ln(x) + (one - 2.0 * x) * ln(one - x);
}

Interval convexity_numerator(const Interval& x) {
  require_open_unit(x, "L");
  const Interval& f = phi();
  const Interval one(1.0);
  const Interval sq = powi(x, 2);
  // Term order follows the closed form exactly.
  return 2.0 * f * (one - sq) * ln(one / sq - one) - 4.0 * f - 2.0 * sq * ln(x) +
         2.0 * (sq - one) * ln(one - x) + x + 2.0 * ln(x) + one;
}

Interval convexity_numerator_derivative(const Interval& x) {
  require_open_unit(x, "L'");
  const Interval& f = phi();
  const Interval one(1.0);
  const Interval sq = powi(x, 2);
  return -4.0 * f * x * ln(one / sq - one) + (2.0 - 4.0 * f) / x - 4.0 * x * ln(x) +
         4.0 * x * ln(one - x) + Interval(3.0);
}

Interval entropy_of_square_derivative(const Interval& x) {
  require_open_unit(x, "g1'");
  const Interval sq = powi(x, 2);
  return 2.0 * x * phi() * ln((Interval(1.0) - sq) / sq);
}

Interval scaled_entropy_derivative(const Interval& x) {
  require_open_unit(x, "g2'");
  return -2.0 * x * ln(x) + (2.0 * x - 1.0) * ln(Interval(1.0) - x);
}

Interval evaluate(FnId id, const Interval& x) {
  switch (id) {
    case FnId::entropy: return binary_entropy(x);
    case FnId::entropy_derivative: return binary_entropy_derivative(x);
    case FnId::golden_gap: return golden_gap(x);
    case FnId::golden_gap_derivative: return golden_gap_derivative(x);
    case FnId::convexity_numerator: return convexity_numerator(x);
    case FnId::entropy_of_square: return entropy_of_square(x);
    case FnId::scaled_entropy: return scaled_entropy(x);
  }
  throw DomainError("unknown function id");
}

namespace scalar {

double binary_entropy(double x) { return -xlogx(x) - xlogx(1.0 - x); }

double binary_entropy_derivative(double w) { return std::log((1.0 - w) / w); }

double entropy_of_square(double x) { return phi().mid() * binary_entropy(x * x); }

double scaled_entropy(double x) { return x * binary_entropy(x); }

double golden_gap(double x) { return entropy_of_square(x) - scaled_entropy(x); }

double golden_gap_derivative(double x) {
  const double f = phi().mid();
  return 2.0 * x * f * std::log((1.0 - x * x) / (x * x)) + 2.0 * x * std::log(x) +
         (1.0 - 2.0 * x) * std::log(1.0 - x);
}

double convexity_numerator(double x) {
  const double f = phi().mid();
  const double sq = x * x;
  return 2.0 * f * (1.0 - sq) * std::log(1.0 / sq - 1.0) - 4.0 * f - 2.0 * sq * std::log(x) +
         2.0 * (sq - 1.0) * std::log(1.0 - x) + x + 2.0 * std::log(x) + 1.0;
}

double evaluate(FnId id, double x) {
  switch (id) {
    case FnId::entropy: return binary_entropy(x);
    case FnId::entropy_derivative: return binary_entropy_derivative(x);
    case FnId::golden_gap: return golden_gap(x);
    case FnId::golden_gap_derivative: return golden_gap_derivative(x);
    case FnId::convexity_numerator: return convexity_numerator(x);
    case FnId::entropy_of_square: return entropy_of_square(x);
    case FnId::scaled_entropy: return scaled_entropy(x);
  }
  return std::nan("");
}

}  // namespace scalar

TwoPointContext::TwoPointContext(double p, double x, double y) : p_(p), x_(x), y_(y) {
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("two-point weight must lie in (0,1)");
  if (!(y > 0.0 && y < x && x <= 1.0)) {
    throw ValidationError("two-point support must satisfy 0 < y < x <= 1");
  }
}

Interval two_point_potential(const TwoPointContext& ctx, const Interval& w) {
  require_closed_unit(w, "f");
  const Interval p(ctx.p());
  const Interval one(1.0);
  return 2.0 * (p * binary_entropy(ctx.x() * w) + (one - p) * binary_entropy(ctx.y() * w)) -
         binary_entropy(w);
}

Interval two_point_potential_second(const TwoPointContext& ctx, const Interval& z) {
  require_open_unit(z, "f''");
  const Interval p(ctx.p());
  const Interval x(ctx.x());
  const Interval y(ctx.y());
  const Interval one(1.0);
  return -2.0 * (p * x / (z * (one - x * z)) + (one - p) * y / (z * (one - y * z))) +
         one / (z * (one - z));
}

Interval two_point_cleared_curvature(const TwoPointContext& ctx, const Interval& z) {
  require_closed_unit(z, "g");
  const Interval p(ctx.p());
  const Interval x(ctx.x());
  const Interval y(ctx.y());
  const Interval one(1.0);
  const Interval one_minus_z = one - z;
  const Interval one_minus_xz = one - x * z;
  const Interval one_minus_yz = one - y * z;
  return -2.0 * (p * x * one_minus_z * one_minus_yz + (one - p) * y * one_minus_z * one_minus_xz) +
         one_minus_xz * one_minus_yz;
}

}  // namespace phicert
