#include "phicert/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phicert/certificate.hpp"
#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"
#include "phicert/golden.hpp"

namespace phicert {
namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kMeanTol = 1e-10;

double H(double t) { return scalar::binary_entropy(t); }

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, double declared_mean)
    : atoms_(std::move(atoms)), declared_mean_(declared_mean) {
  if (atoms_.empty()) throw ValidationError("measure has no atoms");
  if (!(declared_mean >= 0.0 && declared_mean <= 1.0)) {
    throw ValidationError("declared mean " + shortest_decimal(declared_mean) + " outside [0,1]");
  }
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.point >= 0.0 && a.point <= 1.0)) {
      throw ValidationError("atom at " + shortest_decimal(a.point) + " outside [0,1]");
    }
    if (!(a.weight > 0.0 && a.weight <= 1.0)) {
      throw ValidationError("atom weight " + shortest_decimal(a.weight) + " outside (0,1]");
    }
    total += a.weight;
  }
  if (std::fabs(total - 1.0) > kWeightSumTol) {
    throw ValidationError("weights sum to " + shortest_decimal(total) + ", not 1");
  }
  std::vector<double> points;
  for (const auto& a : atoms_) points.push_back(a.point);
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw ValidationError("measure has two atoms at the same point");
  }
  if (std::fabs(mean() - declared_mean) > kMeanTol) {
    throw ValidationError("mean " + shortest_decimal(mean()) + " differs from declared " +
                          shortest_decimal(declared_mean));
  }
}

double DiscreteMeasure::mean() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.point * a.weight;
  return m;
}

DiscreteMeasure dirac(double x) { return DiscreteMeasure({{x, 1.0}}, x); }

DiscreteMeasure two_point_with_zero(double mean, double x) {
  if (!(mean > 0.0 && mean <= x && x <= 1.0)) {
    throw ValidationError("two-point family needs 0 < mean <= x <= 1");
  }
  if (x == mean) return dirac(x);
  const double p = mean / x;
  return DiscreteMeasure({{0.0, 1.0 - p}, {x, p}}, mean);
}

double eval_F(const DiscreteMeasure& mu) {
  double pairs = 0.0;
  double singles = 0.0;
  for (const auto& a : mu.atoms()) {
    for (const auto& b : mu.atoms()) pairs += a.weight * b.weight * H(a.point * b.point);
    singles += a.weight * H(a.point);
  }
  return pairs - singles;
}

DiscreteMeasure mixture(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("mixture weight outside [0,1]");
  std::vector<Atom> merged;
  auto add = [&merged](double point, double weight) {
    if (weight == 0.0) return;
    for (auto& a : merged) {
      if (a.point == point) {
        a.weight += weight;
        return;
      }
    }
    merged.push_back({point, weight});
  };
  for (const auto& a : mu1.atoms()) add(a.point, p * a.weight);
  for (const auto& a : mu2.atoms()) add(a.point, (1.0 - p) * a.weight);
  const double mean = p * mu1.declared_mean() + (1.0 - p) * mu2.declared_mean();
  return DiscreteMeasure(std::move(merged), mean);
}

double concavity_gap(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double p) {
  if (std::fabs(mu1.declared_mean() - mu2.declared_mean()) > kMeanTol) {
    throw ValidationError("concavity check needs measures with the same mean");
  }
  if (p == 0.0) return eval_F(mu2) - eval_F(mu2);
  if (p == 1.0) return eval_F(mu1) - eval_F(mu1);
  return eval_F(mixture(mu1, mu2, p)) - p * eval_F(mu1) - (1.0 - p) * eval_F(mu2);
}

DiscreteMeasure random_measure(double mean, std::mt19937_64& rng, int atoms) {
  if (!(mean > 0.0 && mean < 1.0)) throw ValidationError("random measure needs a mean in (0,1)");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_int_distribution<int> count(2, 6);
  for (;;) {
    const int n = atoms > 0 ? atoms : count(rng);
    std::vector<Atom> a(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& atom : a) {
      atom.point = unit(rng);
      atom.weight = expo(rng) + 1e-9;
      total += atom.weight;
    }
    for (auto& atom : a) atom.weight /= total;
    double rest = 0.0;
    for (int i = 0; i + 1 < n; ++i) rest += a[i].point * a[i].weight;
    Atom& last = a.back();
    last.point = (mean - rest) / last.weight;
    if (!(last.point >= 0.0 && last.point <= 1.0)) continue;
    bool distinct = true;
    for (int i = 0; i + 1 < n; ++i) distinct = distinct && std::fabs(a[i].point - last.point) > 1e-9;
    if (!distinct) continue;
    try {
      return DiscreteMeasure(std::move(a), mean);
    } catch (const ValidationError&) {
      continue;
    }
  }
}

std::vector<Atom> prune(const DiscreteMeasure& mu, double weight_tol, double merge_tol) {
  std::vector<Atom> kept;
  for (const auto& a : mu.atoms()) {
    if (a.weight >= weight_tol) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end(), [](const Atom& x, const Atom& y) { return x.point < y.point; });
  std::vector<Atom> merged;
  for (const auto& a : kept) {
    if (!merged.empty() && a.point - merged.back().point < merge_tol) {
      Atom& m = merged.back();
      const double w = m.weight + a.weight;
      m.point = (m.point * m.weight + a.point * a.weight) / w;
      m.weight = w;
    } else {
      merged.push_back(a);
    }
  }
  return merged;
}

double two_point_family_min(double phi, double step) {
  double best = eval_F(dirac(phi));
  const int n = static_cast<int>(std::ceil((1.0 - phi) / step));
  for (int i = 1; i <= n; ++i) {
    const double x = std::min(1.0, phi + i * step);
    best = std::min(best, eval_F(two_point_with_zero(phi, x)));
  }
  return best;
}

double sampled_F_minimum(double phi, int samples, std::uint64_t seed) {
  if (!(phi >= golden_ratio().enclosure.hi() && phi <= 1.0)) {
    throw ParameterError("phi " + shortest_decimal(phi) +
                         " is not certified >= the golden ratio conjugate; the inequality may fail");
  }
  if (phi == 1.0) return eval_F(dirac(1.0));
  double worst = two_point_family_min(phi, 1e-3);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) worst = std::min(worst, eval_F(random_measure(phi, rng)));
  return worst;
}

std::string to_tsv(const DiscreteMeasure& mu) {
  std::string out = "# declared_mean " + shortest_decimal(mu.declared_mean()) + "\npoint\tweight\n";
  for (const auto& a : mu.atoms()) {
    out += shortest_decimal(a.point) + "\t" + shortest_decimal(a.weight) + "\n";
  }
  return out;
}

DiscreteMeasure measure_from_tsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  double mean = -1.0;
  bool header = false;
  std::vector<Atom> atoms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# declared_mean ", 0) == 0) {
      mean = parse_double(line.substr(16));
      continue;
    }
    if (line[0] == '#') continue;
    if (!header) {
      if (line != "point\tweight") throw ValidationError("measure TSV lacks the point/weight header");
      header = true;
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ValidationError("malformed measure row: " + line);
    atoms.push_back({parse_double(line.substr(0, tab)), parse_double(line.substr(tab + 1))});
  }
  if (mean < 0.0) throw ValidationError("measure TSV lacks '# declared_mean'");
  return DiscreteMeasure(std::move(atoms), mean);
}

}  // namespace phicert
