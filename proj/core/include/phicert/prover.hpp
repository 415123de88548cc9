#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "phicert/certificate.hpp"
#include "phicert/entropy.hpp"
#include "phicert/interval.hpp"

namespace phicert {

// A one-variable function with an interval extension and, optionally, an
// interval extension of its derivative (enables the centred form).
struct Function {
  std::string spec;  // replayable description, see make_function()
  std::function<Interval(const Interval&)> value;
  std::function<Interval(const Interval&)> derivative;
  std::function<double(double)> scalar;
};

// Grammar: ["-"] NAME [("+" | "-") CONSTANT], where NAME is a short function
// name ("G", "L", "g1", ...) or "Gw(WEIGHT)" for WEIGHT*H(x^2) - x H(x).
// Examples: "G", "-G", "G-0.01", "Gw(0.7)".
Function make_function(std::string_view spec);

// Enclosure of f over `box`: the natural extension intersected with the
// mean-value form when a derivative is available.
Interval enclose(const Function& f, const Interval& box);

// Adaptive bisection proof that f >= strict_margin on `domain`.
//
// A box is accepted when the lower bound of its enclosure is >= strict_margin
// and split otherwise. The search stops with `undecided` as soon as a box at
// max_depth cannot be accepted or a box is found whose upper bound is below
// the margin; the offending box becomes the witness. The verdict is never
// `failed`: interval bounds can only confirm, not refute, in this direction.
Certificate prove_nonneg(const Function& f, const Interval& domain, int max_depth,
                         double strict_margin = 0.0);

}  // namespace phicert
