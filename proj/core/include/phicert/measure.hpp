#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace phicert {

struct Atom {
  double point = 0.0;
  double weight = 0.0;
};

// A finitely supported probability measure on [0,1] with a declared mean.
//
// Invariants, checked on construction (ValidationError otherwise): points lie
// in [0,1] and are pairwise distinct, weights lie in (0,1] and sum to 1
// within 1e-12, and sum(point * weight) equals the declared mean within 1e-10.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Atom> atoms, double declared_mean);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double declared_mean() const { return declared_mean_; }
  double mean() const;

 private:
  std::vector<Atom> atoms_;
  double declared_mean_;
};

DiscreteMeasure dirac(double x);

// (mean / x) delta_x + (1 - mean / x) delta_0, for 0 < mean <= x <= 1.
// Collapses to delta_x when x == mean.
DiscreteMeasure two_point_with_zero(double mean, double x);

// F(mu) = sum_ij w_i w_j H(x_i x_j) - sum_i w_i H(x_i).
double eval_F(const DiscreteMeasure& mu);

// p mu1 + (1 - p) mu2 with coincident atoms merged and zero weights dropped.
DiscreteMeasure mixture(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double p);

// F(p mu1 + (1-p) mu2) - p F(mu1) - (1-p) F(mu2). Concavity of F on the
// measures with a fixed mean says this is >= 0. ValidationError when the
// declared means differ by more than 1e-10 or p is outside [0,1].
double concavity_gap(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double p);

// Random measure with the given mean: `atoms` uniform points (2..6 chosen
// uniformly when atoms == 0), normalized exponential weights, and the last
// point moved to hit the mean. Draws are rejected until that point lands in
// [0,1] away from the others.
DiscreteMeasure random_measure(double mean, std::mt19937_64& rng, int atoms = 0);

// Drops atoms lighter than weight_tol and merges atoms closer than
// merge_tol (weight-averaged position). The declared mean is kept; the
// result is compared to it only loosely since pruning moves mass.
std::vector<Atom> prune(const DiscreteMeasure& mu, double weight_tol = 1e-6, double merge_tol = 1e-4);

struct MinimizeResult {
  std::vector<Atom> atoms;  // best measure found (mean = phi)
  double value = 0.0;
  bool converged = false;
  int best_restart = 0;
};

// Local minimization of F over measures with k atoms and mean phi.
//
// Each restart draws a random k-atom measure, then removes atoms with
// mean-preserving transfers among three atoms (F is quadratic and concave
// along each such line, so an endpoint is always at least as good) until at
// most two remain, then runs coordinate descent on the positions of the two
// atoms. Restart r uses a seed derived from (seed, r); the lowest value wins,
// ties going to the lowest restart index. Restarts run on up to `jobs`
// threads (0 = hardware concurrency); the result does not depend on jobs.
MinimizeResult minimize_F(double phi, int k, int restarts, std::uint64_t seed, unsigned jobs = 1);

// min over x in [phi, 1] on a grid of `step` of F((phi/x) delta_x + ...).
double two_point_family_min(double phi, double step = 1e-3);

// Smallest F found over `samples` random measures with mean phi and the
// two-point family on a 1e-3 grid. Requires phi >= phi's enclosure upper
// bound (ParameterError otherwise).
double sampled_F_minimum(double phi, int samples, std::uint64_t seed);

// "# declared_mean <v>" line, "point\tweight" header, then one atom per line.
std::string to_tsv(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_tsv(std::string_view text);

}  // namespace phicert
