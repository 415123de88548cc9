#pragma once

#include <optional>
#include <string_view>

#include "phicert/interval.hpp"

namespace phicert {

// Named one-variable functions. The short names ("H", "G", "L", ...) are the
// identifiers accepted on the command line.
enum class FnId {
  entropy,                  // H(x) = -x ln x - (1-x) ln(1-x)
  entropy_derivative,       // H'(x) = ln((1-x)/x)
  golden_gap,               // G(x) = phi H(x^2) - x H(x)
  golden_gap_derivative,    // G'(x)
  convexity_numerator,      // L(x) = (1 - x^2) G''(x)
  entropy_of_square,        // g1(x) = phi H(x^2)
  scaled_entropy,           // g2(x) = x H(x)
};

std::string_view short_name(FnId id);
std::optional<FnId> parse_fn_id(std::string_view name);

// Enclosures. Each throws DomainError when the argument leaves the
// function's domain: [0,1] for H, G, g1, g2 and the open (0,1) for the
// derivatives and L.
Interval binary_entropy(const Interval& x);
Interval binary_entropy_derivative(const Interval& w);
Interval golden_gap(const Interval& x);
Interval golden_gap_derivative(const Interval& x);
Interval convexity_numerator(const Interval& x);
Interval convexity_numerator_derivative(const Interval& x);
Interval entropy_of_square(const Interval& x);
Interval entropy_of_square_derivative(const Interval& x);
Interval scaled_entropy(const Interval& x);
Interval scaled_entropy_derivative(const Interval& x);

// weight * H(x^2) - x H(x): the golden gap with phi replaced by an arbitrary
// weight. Its nonnegativity on [weight, 1] decides membership of the weight
// in the set whose minimum is phi*.
Interval weighted_gap(const Interval& weight, const Interval& x);
Interval weighted_gap_derivative(const Interval& weight, const Interval& x);

Interval evaluate(FnId id, const Interval& x);

// Plain round-to-nearest evaluations, for sampling and measure arithmetic.
namespace scalar {
double binary_entropy(double x);
double binary_entropy_derivative(double w);
double golden_gap(double x);
double golden_gap_derivative(double x);
double convexity_numerator(double x);
double entropy_of_square(double x);
double scaled_entropy(double x);
double evaluate(FnId id, double x);
}  // namespace scalar

// The two-point measure p delta_x + (1-p) delta_y with 0 < y < x <= 1 and
// 0 < p < 1, and the first-variation potential of F around it.
class TwoPointContext {
 public:
  TwoPointContext(double p, double x, double y);

  double p() const { return p_; }
  double x() const { return x_; }
  double y() const { return y_; }

 private:
  double p_;
  double x_;
  double y_;
};

// f(w) = 2[p H(x w) + (1-p) H(y w)] - H(w), for w in [0,1].
Interval two_point_potential(const TwoPointContext& ctx, const Interval& w);
// f''(z), for z in (0,1).
Interval two_point_potential_second(const TwoPointContext& ctx, const Interval& z);
// z(1-z)(1-xz)(1-yz) f''(z), evaluated from its cleared-denominator
// quadratic form; z in [0,1].
Interval two_point_cleared_curvature(const TwoPointContext& ctx, const Interval& z);

}  // namespace phicert
