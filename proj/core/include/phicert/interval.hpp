#pragma once

#include <string>
#include <utility>

namespace phicert {

// Closed interval [lo, hi] of finite doubles.
//
// Every operation returns an enclosure of the exact real image. Endpoints are
// computed in round-to-nearest and then pushed outward by a fixed number of
// representable steps (one for + - * / sqrt, two for ln). When an
// error-free transformation proves an endpoint exact no widening is applied.
// The global rounding mode is never touched.
class Interval {
 public:
  // [0, 0]
  constexpr Interval() = default;
  // Degenerate interval [v, v]; the canonical lift of a scalar.
  explicit Interval(double v);
  Interval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const { return hi_ - lo_; }
  double mag() const;  // max |t| over the interval
  bool is_point() const { return lo_ == hi_; }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  // Certainly-less-than etc. compare every element of both operands.
  bool certainly_lt(const Interval& other) const { return hi_ < other.lo_; }
  bool certainly_le(const Interval& other) const { return hi_ <= other.lo_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) = default;

  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  std::string str() const;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

// Natural logarithm. Throws DomainError unless lo > 0.
Interval ln(const Interval& x);
// Throws DomainError if hi < 0; a slightly negative lo is clamped to 0.
Interval sqrt(const Interval& x);
// t^k, with correct handling of even powers across 0.
Interval powi(const Interval& x, unsigned k);

Interval hull(const Interval& a, const Interval& b);
// Throws DomainError when the intersection is empty.
Interval intersect(const Interval& a, const Interval& b);

// Splits at the midpoint.
std::pair<Interval, Interval> bisect(const Interval& x);

// Number of representable doubles strictly between a and b, plus one
// (0 when a == b). Used to express widths in ulps.
double ulp_distance(double a, double b);

struct LnSelfCheck {
  bool passed = false;
  int samples = 0;
  double max_error_ulps = 0.0;  // worst |std::log(x) - oracle| in ulps of the result
};

// Compares std::log against a 30-term atanh series evaluated in 50-digit
// arithmetic at 100 fixed sample points. Computed once per process.
const LnSelfCheck& ln_self_check();

// Throws SelfCheckError if ln_self_check() did not pass.
void require_faithful_ln();

}  // namespace phicert
