#pragma once

#include <vector>

#include "phicert/certificate.hpp"
#include "phicert/interval.hpp"
#include "phicert/rational.hpp"

namespace phicert {

// The three pieces [phi, 0.77], [0.76, 0.98] and [0.98, 1] on which
// phi H(x^2) >= x H(x) is verified.
enum class PieceName { I1, I2, I3 };

struct PieceSpec {
  PieceName name;
  Rational lo;  // I1's lower end is phi itself; lo holds the grid start 3/5
  Rational hi;
};

const PieceSpec& piece(PieceName name);

// Convexity piece. L(x) = (1 - x^2) G''(x) is evaluated on the multiples of
// grid_step in [0.6, 0.77]; with |L'| <= lipschitz, a lower bound
// threshold >= lipschitz * grid_step / 2 at every grid point makes L positive
// on the whole piece, so G is convex there, and G(phi) = G'(phi) = 0.
struct ConvexityOptions {
  Rational grid_step{1, 200};
  double threshold = 0.04;
  double lipschitz = 15.5;
};

// Throws ParameterError when threshold < lipschitz * grid_step / 2.
Certificate verify_convexity_piece(const ConvexityOptions& options = {});

// Sandwich-chain piece. An empty `abscissae` selects the shipped table.
struct ChainOptions {
  std::vector<Rational> abscissae;
  double margin = 1e-3;
};

Certificate verify_chain_piece(const ChainOptions& options = {});

// Integer and rational side conditions: the monotonicity of x H(x) from 5/7
// on, and log2(50) >= 5.5 >= 3 + sqrt(5).
Certificate verify_exact_facts();

// Tail piece [1 - eps_max, 1] by the Taylor sandwich of H near 0.
// Throws ParameterError unless 0 < eps_max <= 1/50.
Certificate verify_tail_piece(const Rational& eps_max = Rational(1, 50));

// Conditions under which the Taylor-sandwich argument proves
// weight H(x^2) >= x H(x) for all x in [1 - eps, 1], eps <= eps_max:
// 2 weight - 1 > 0, weight (1-eps)(2-eps) >= 1 throughout, and
// (2 weight - 1) ln(1/eps_max) >= 2 weight ln 2.
std::vector<Step> tail_conditions(const Interval& weight, const Interval& eps_max);

struct Claim1Options {
  ConvexityOptions convexity;
  ChainOptions chain;
  bool synthesize_chain = false;  // greedy chain instead of the shipped table
  Rational eps_max{1, 50};
};

// Runs every piece, the exact facts and the coverage check
// [phi, 0.77] u [x_1, x_n] u [1 - eps_max, 1] = [phi, 1].
Certificate verify_claim1(const Claim1Options& options = {});

// Re-runs the pipeline recorded in `cert` from its parameters.
Certificate rerun(const Certificate& cert);

}  // namespace phicert
