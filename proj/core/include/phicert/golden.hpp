#pragma once

#include "phicert/interval.hpp"

namespace phicert {

// Enclosure of the golden-ratio conjugate (sqrt(5) - 1) / 2.
//
// The endpoints are the two adjacent doubles that bracket the exact value;
// the bracketing is decided by the exact sign of t^2 + t - 1 at each
// endpoint, so the enclosure is one ulp wide.
struct GoldenRatio {
  Interval enclosure;
};

const GoldenRatio& golden_ratio();

inline const Interval& phi() { return golden_ratio().enclosure; }

// (3 - sqrt(5)) / 2 = 1 - phi, the union-closed constant.
Interval union_closed_constant();

// Exact comparison of a double with the irrational phi: -1 if v < phi,
// +1 if v > phi.
int compare_with_phi(double v);

}  // namespace phicert
