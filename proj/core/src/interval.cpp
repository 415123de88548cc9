#include "phicert/interval.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "phicert/errors.hpp"

namespace phicert {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude the residual of an error-free transformation may
// underflow, so exactness is not inferred.
constexpr double kTiny = 0x1p-969;

double step_down(double v, int steps) {
  for (int i = 0; i < steps; ++i) v = std::nextafter(v, -kInf);
  return v;
}

double step_up(double v, int steps) {
  for (int i = 0; i < steps; ++i) v = std::nextafter(v, kInf);
  return v;
}

void require_finite(double v, const char* op) {
  if (!std::isfinite(v)) {
    throw RangeError(std::string("non-finite endpoint produced by ") + op);
  }
}

// Rounded value together with its outward bounds.
struct Bounded {
  double down;
  double up;
};

Bounded widen(double v, bool exact, int steps, const char* op) {
  require_finite(v, op);
  if (exact) return {v, v};
  return {step_down(v, steps), step_up(v, steps)};
}

bool sum_exact(double a, double b, double s) {
  // Knuth two-sum; the error term is exact in the absence of overflow.
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err == 0.0;
}

Bounded add_bounds(double a, double b) {
  const double s = a + b;
  return widen(s, std::isfinite(s) && sum_exact(a, b, s), 1, "addition");
}

Bounded mul_bounds(double a, double b) {
  const double p = a * b;
  bool exact = a == 0.0 || b == 0.0;
  if (!exact && std::isfinite(p) && std::fabs(p) >= kTiny) exact = std::fma(a, b, -p) == 0.0;
  return widen(p, exact, 1, "multiplication");
}

Bounded div_bounds(double a, double b) {
  const double q = a / b;
  bool exact = a == 0.0;
  if (!exact && std::isfinite(q) && std::fabs(q) >= kTiny && std::fabs(a) >= kTiny) {
    exact = std::fma(-q, b, a) == 0.0;
  }
  return widen(q, exact, 1, "division");
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

Interval::Interval(double v) : lo_(v), hi_(v) {
  if (!std::isfinite(v)) throw RangeError("interval endpoint must be finite");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval endpoint is NaN");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw RangeError("interval endpoint must be finite");
  if (lo > hi) throw DomainError("interval with lo > hi: [" + shortest(lo) + ", " + shortest(hi) + "]");
}

double Interval::mid() const {
  if (lo_ == hi_) return lo_;
  return 0.5 * lo_ + 0.5 * hi_;
}

double Interval::mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

std::string Interval::str() const { return "[" + shortest(lo_) + ", " + shortest(hi_) + "]"; }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add_bounds(a.lo_, b.lo_).down, add_bounds(a.hi_, b.hi_).up);
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<Bounded, 4> p = {mul_bounds(a.lo_, b.lo_), mul_bounds(a.lo_, b.hi_),
                                    mul_bounds(a.hi_, b.lo_), mul_bounds(a.hi_, b.hi_)};
  double lo = p[0].down;
  double hi = p[0].up;
  for (const auto& c : p) {
    lo = std::min(lo, c.down);
    hi = std::max(hi, c.up);
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by interval containing 0: " + b.str());
  const std::array<Bounded, 4> q = {div_bounds(a.lo_, b.lo_), div_bounds(a.lo_, b.hi_),
                                    div_bounds(a.hi_, b.lo_), div_bounds(a.hi_, b.hi_)};
  double lo = q[0].down;
  double hi = q[0].up;
  for (const auto& c : q) {
    lo = std::min(lo, c.down);
    hi = std::max(hi, c.up);
  }
  return Interval(lo, hi);
}

Interval ln(const Interval& x) {
  if (x.hi() <= 0.0) throw DomainError("ln of non-positive interval " + x.str());
  if (x.lo() <= 0.0) throw DomainError("ln unbounded below on " + x.str());
  auto endpoint = [](double t) {
    if (t == 1.0) return Bounded{0.0, 0.0};
    return widen(std::log(t), false, 2, "ln");
  };
  return Interval(endpoint(x.lo()).down, endpoint(x.hi()).up);
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0.0) throw DomainError("sqrt of negative interval " + x.str());
  auto endpoint = [](double t) {
    const double r = std::sqrt(t);
    const bool exact = t == 0.0 || (t >= kTiny && std::fma(-r, r, t) == 0.0);
    return widen(r, exact, 1, "sqrt");
  };
  const double lo = std::max(x.lo(), 0.0);
  return Interval(std::max(endpoint(lo).down, 0.0), endpoint(x.hi()).up);
}

Interval powi(const Interval& x, unsigned k) {
  if (k == 0) return Interval(1.0);
  if (k == 1) return x;
  if (k % 2 == 0) {
    const double a = std::fabs(x.lo());
    const double b = std::fabs(x.hi());
    const Interval base = x.contains_zero() ? Interval(0.0, std::max(a, b))
                                            : Interval(std::min(a, b), std::max(a, b));
    Interval r = base;
    for (unsigned i = 1; i < k; ++i) r = r * base;
    return Interval(std::max(r.lo(), 0.0), r.hi());
  }
  auto point_power = [k](double t) {
    const Interval base(t);
    Interval r = base;
    for (unsigned i = 1; i < k; ++i) r = r * base;
    return r;
  };
  return Interval(point_power(x.lo()).lo(), point_power(x.hi()).hi());
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw DomainError("empty intersection of " + a.str() + " and " + b.str());
  return Interval(lo, hi);
}

std::pair<Interval, Interval> bisect(const Interval& x) {
  const double m = x.mid();
  return {Interval(x.lo(), m), Interval(m, x.hi())};
}

double ulp_distance(double a, double b) {
  auto ordered = [](double v) {
    const auto bits = std::bit_cast<std::int64_t>(v);
    return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
  };
  auto lo = ordered(a);
  auto hi = ordered(b);
  if (lo > hi) std::swap(lo, hi);
  // The difference of two ordered int64 values always fits in uint64.
  return static_cast<double>(static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo));
}

const LnSelfCheck& ln_self_check() {
  static const LnSelfCheck result = [] {
    using Big = boost::multiprecision::cpp_bin_float_50;
    constexpr int kTerms = 30;
    // ln t = 2 atanh((t - 1) / (t + 1)), summed to kTerms terms.
    auto atanh_series = [](const Big& z) {
      const Big z2 = z * z;
      Big term = z;
      Big sum = 0;
      for (int k = 0; k < kTerms; ++k) {
        sum += term / (2 * k + 1);
        term *= z2;
      }
      return sum;
    };
    const Big ln2 = 2 * atanh_series(Big(1) / 3);
    auto oracle = [&](double x) {
      int e = 0;
      double m = std::frexp(x, &e);
      if (m < 0.70710678118654752) {
        m *= 2.0;
        e -= 1;
      }
      const Big mb = m;
      return 2 * atanh_series((mb - 1) / (mb + 1)) + Big(e) * ln2;
    };

    LnSelfCheck check;
    auto probe = [&](double x) {
      const double r = std::log(x);
      const Big exact = oracle(x);
      double err_ulps = 0.0;
      if (r == 0.0) {
        err_ulps = exact == 0 ? 0.0 : kInf;
      } else {
        const double spacing = std::nextafter(std::fabs(r), kInf) - std::fabs(r);
        err_ulps = static_cast<double>(abs(Big(r) - exact) / Big(spacing));
      }
      check.max_error_ulps = std::max(check.max_error_ulps, err_ulps);
      ++check.samples;
    };
    for (int k = 0; k < 80; ++k) probe((k + 0.5) / 80.0);
    for (int k = 0; k < 20; ++k) probe(1.0 + k * (99.0 / 19.0));
    check.passed = check.max_error_ulps < 1.0;
    return check;
  }();
  return result;
}

void require_faithful_ln() {
  const auto& check = ln_self_check();
  if (!check.passed) {
    throw SelfCheckError("std::log exceeds 1 ulp against the series oracle (" +
                         shortest(check.max_error_ulps) + " ulp); refusing to certify");
  }
}

}  // namespace phicert
