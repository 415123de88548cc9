#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"
#include "phicert/measure.hpp"

namespace phicert {
namespace {

constexpr int kGridPoints = 64;
constexpr int kGoldenIterations = 80;
constexpr int kMaxSweeps = 200;
constexpr double kSweepTol = 1e-15;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double H(double t) { return scalar::binary_entropy(t); }

double F_of(const std::vector<Atom>& atoms) {
  double pairs = 0.0;
  double singles = 0.0;
  for (const auto& a : atoms) {
    for (const auto& b : atoms) pairs += a.weight * b.weight * H(a.point * b.point);
    singles += a.weight * H(a.point);
  }
  return pairs - singles;
}

// The measure with mean phi supported on {a, b}, a <= phi <= b.
std::vector<Atom> two_point(double phi, double a, double b) {
  if (a == b || a == phi || b == phi) return {{phi, 1.0}};
  const double wb = (phi - a) / (b - a);
  return {{a, 1.0 - wb}, {b, wb}};
}

// Removes atoms by moving mass along (a_l - a_j, -(a_l - a_i), a_j - a_i)
// for i < j < l, which keeps total mass and mean. F restricted to such a
// line is a concave quadratic, so the better endpoint is no worse than the
// start, and each endpoint empties one atom.
std::vector<Atom> reduce_support(std::vector<Atom> atoms, std::mt19937_64& rng) {
  while (atoms.size() > 2) {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.point < y.point; });
    std::vector<std::size_t> pick(atoms.size());
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    std::shuffle(pick.begin(), pick.end(), rng);
    std::sort(pick.begin(), pick.begin() + 3);
    const std::size_t i = pick[0];
    const std::size_t j = pick[1];
    const std::size_t l = pick[2];
    const double di = atoms[l].point - atoms[j].point;
    const double dj = -(atoms[l].point - atoms[i].point);
    const double dl = atoms[j].point - atoms[i].point;

    auto moved = [&](double t, std::size_t emptied) {
      std::vector<Atom> next = atoms;
      next[i].weight += t * di;
      next[j].weight += t * dj;
      next[l].weight += t * dl;
      next[emptied].weight = 0.0;
      std::vector<Atom> kept;
      for (const auto& a : next) {
        if (a.weight > 0.0) kept.push_back(a);
      }
      return kept;
    };

    const auto forward = moved(atoms[j].weight / -dj, j);
    const double ti = atoms[i].weight / di;
    const double tl = atoms[l].weight / dl;
    const auto backward = ti <= tl ? moved(-ti, i) : moved(-tl, l);
    atoms = F_of(forward) <= F_of(backward) ? forward : backward;
  }
  return atoms;
}

// Minimizes h on [lo, hi]: a uniform grid that includes both endpoints, then
// golden-section search around the best grid point. A grid point (in
// particular an exact endpoint) is kept unless the refinement is strictly
// better.
template <class Fn>
double line_minimize(Fn&& h, double lo, double hi) {
  if (lo == hi) return lo;
  double best_x = lo;
  double best = h(lo);
  int best_k = 0;
  for (int k = 1; k <= kGridPoints; ++k) {
    const double x = k == kGridPoints ? hi : lo + (hi - lo) * k / kGridPoints;
    const double v = h(x);
    if (v < best) {
      best = v;
      best_x = x;
      best_k = k;
    }
  }
  const double step = (hi - lo) / kGridPoints;
  double a = std::max(lo, lo + step * (best_k - 1));
  double b = std::min(hi, lo + step * (best_k + 1));
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = h(c);
  double fd = h(d);
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = h(d);
    }
  }
  const double x = fc < fd ? c : d;
  const double v = std::min(fc, fd);
  return v < best ? x : best_x;
}

struct Candidate {
  std::vector<Atom> atoms;
  double value;
  bool converged;
};

Candidate run_restart(double phi, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const DiscreteMeasure start = random_measure(phi, rng, k);
  std::vector<Atom> reduced = reduce_support(start.atoms(), rng);

  double a = 0.0;
  double b = 1.0;
  if (reduced.size() == 2) {
    a = std::min(std::min(reduced[0].point, reduced[1].point), phi);
    b = std::max(std::max(reduced[0].point, reduced[1].point), phi);
  }
  if (reduced.size() < 2 || a == phi || b == phi) {
    a = phi * unit(rng);
    b = phi + (1.0 - phi) * (1.0 - unit(rng));
  }

  auto value = [phi](double x, double y) { return F_of(two_point(phi, x, y)); };
  double current = value(a, b);
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    a = line_minimize([&](double t) { return value(t, b); }, 0.0, phi);
    b = line_minimize([&](double t) { return value(a, t); }, phi, 1.0);
    const double next = value(a, b);
    const bool settled = current - next <= kSweepTol;
    current = std::min(current, next);
    if (settled) {
      converged = true;
      break;
    }
  }
  Candidate best{two_point(phi, a, b), current, converged};

  // The descent can stall at delta_phi, where the other coordinate has no
  // effect; compare against it and against the family with an atom at 0.
  const Candidate point_mass{{{phi, 1.0}}, F_of({{phi, 1.0}}), true};
  if (point_mass.value < best.value) best = point_mass;
  const double x0 = line_minimize([&](double t) { return value(0.0, t); }, phi, 1.0);
  const Candidate at_zero{two_point(phi, 0.0, x0), value(0.0, x0), true};
  if (at_zero.value < best.value) best = at_zero;
  return best;
}

}  // namespace

MinimizeResult minimize_F(double phi, int k, int restarts, std::uint64_t seed, unsigned jobs) {
  if (!(phi > 0.0 && phi < 1.0)) throw ValidationError("minimize_F needs 0 < phi < 1");
  if (k < 2) throw ValidationError("minimize_F needs k >= 2 atoms");
  if (restarts < 1) throw ValidationError("minimize_F needs at least one restart");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<Candidate> results(static_cast<std::size_t>(restarts));
  for (int first = 0; first < restarts; first += static_cast<int>(jobs)) {
    const int last = std::min(restarts, first + static_cast<int>(jobs));
    std::vector<std::future<Candidate>> batch;
    for (int r = first; r < last; ++r) {
      const std::uint64_t s = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(r)));
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_restart, phi, k, s));
    }
    for (int r = first; r < last; ++r) results[static_cast<std::size_t>(r)] = batch[r - first].get();
  }

  MinimizeResult out;
  out.best_restart = 0;
  for (int r = 1; r < restarts; ++r) {
    if (results[r].value < results[out.best_restart].value) out.best_restart = r;
  }
  const Candidate& best = results[out.best_restart];
  out.atoms = best.atoms;
  out.value = best.value;
  out.converged = best.converged;
  return out;
}

}  // namespace phicert
