#include "phicert/golden.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace phicert {

int compare_with_phi(double v) {
  if (v <= 0.0) return -1;
  if (v >= 1.0) return 1;
  // t^2 + t - 1 is increasing on (0, 1) and vanishes at phi. 168 bits hold
  // the square of a double exactly, so the sign below is exact.
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big t = v;
  const Big p = t * t + t - 1;
  return p < 0 ? -1 : 1;
}

const GoldenRatio& golden_ratio() {
  static const GoldenRatio golden = [] {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    double lo = (std::sqrt(5.0) - 1.0) / 2.0;
    while (compare_with_phi(lo) > 0) lo = std::nextafter(lo, -kInf);
    while (compare_with_phi(std::nextafter(lo, kInf)) < 0) lo = std::nextafter(lo, kInf);
    return GoldenRatio{Interval(lo, std::nextafter(lo, kInf))};
  }();
  return golden;
}

Interval union_closed_constant() { return Interval(1.0) - phi(); }

}  // namespace phicert
