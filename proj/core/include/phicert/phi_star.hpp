#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "phicert/certificate.hpp"
#include "phicert/interval.hpp"

namespace phicert {

enum class Membership { member, non_member, undecided };

std::string_view to_string(Membership m);

// Whether a weight w belongs to S = { w : w H(x^2) >= x H(x) for all x in [w, 1] }.
struct SMembershipVerdict {
  double phi = 0.0;
  Membership verdict = Membership::undecided;
  // member: the certificate proving the inequality on [phi, 1];
  // undecided: the inconclusive certificate.
  std::optional<Certificate> certificate;
  // non_member: the point x = golden ratio conjugate, where
  // phi H(x^2) - x H(x) = (phi - x) H(x) < 0. The sign of phi - x is decided
  // exactly; `witness_gap` is an interval enclosure of the gap for reference.
  std::optional<Interval> witness_x;
  std::optional<Interval> witness_gap;
};

// phi below the golden ratio conjugate: non_member (decided exactly).
// phi equal to the upper end of its enclosure: member iff the full
// four-piece certificate for the golden ratio certifies.
// phi above: the adaptive prover on [phi, 1 - delta_tail] plus the Taylor
// tail conditions with weight phi on [1 - delta_tail, 1].
// Throws ParameterError unless 0 < phi < 1 and 0 < delta_tail <= 0.02.
SMembershipVerdict member_of_S(double phi, double delta_tail = 0.02, int max_depth = 30);

struct Probe {
  double phi = 0.0;
  Membership verdict = Membership::undecided;
};

struct PhiStarBracket {
  double lo = 0.0;  // certified non-member
  double hi = 0.0;  // certified member
  bool partial = false;  // an undecided probe stopped the bisection early
  std::vector<Probe> probes;
};

// Bisection for min S on [0.01, 0.99] until hi - lo <= tol. An undecided
// probe is retried at +tol/10 and -tol/10 before giving up with a partial
// bracket. Throws ParameterError if tol < 1e-6.
PhiStarBracket find_phi_star(double tol, double delta_tail = 0.02, int max_depth = 30);

}  // namespace phicert
