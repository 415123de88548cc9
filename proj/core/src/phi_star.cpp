#include "phicert/phi_star.hpp"

#include <algorithm>

#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"
#include "phicert/golden.hpp"
#include "phicert/pipelines.hpp"
#include "phicert/prover.hpp"

namespace phicert {
namespace {

constexpr double kSearchLo = 0.01;
constexpr double kSearchHi = 0.99;

Membership from(Verdict v) {
  switch (v) {
    case Verdict::certified: return Membership::member;
    case Verdict::failed: return Membership::non_member;
    case Verdict::undecided: return Membership::undecided;
  }
  return Membership::undecided;
}

}  // namespace

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::undecided: return "undecided";
  }
  return "?";
}

SMembershipVerdict member_of_S(double phi, double delta_tail, int max_depth) {
  if (!(phi > 0.0 && phi < 1.0)) throw ParameterError("membership needs 0 < phi < 1");
  if (!(delta_tail > 0.0 && delta_tail <= 0.02)) throw ParameterError("delta_tail must lie in (0, 0.02]");

  SMembershipVerdict out;
  out.phi = phi;
  const Interval golden = golden_ratio().enclosure;

  if (compare_with_phi(phi) < 0) {
    // H(x^2) = H(x) at the golden point, so the gap there is (phi - x) H(x).
    const Interval h = binary_entropy(golden);
    if (!(h.lo() > 0.0)) throw Error("H at the golden point not certified positive");
    out.verdict = Membership::non_member;
    out.witness_x = golden;
    out.witness_gap = weighted_gap(Interval(phi), golden);
    return out;
  }

  if (phi == golden.hi()) {
    Certificate cert = verify_claim1();
    out.verdict = from(cert.verdict);
    if (out.verdict == Membership::non_member) out.verdict = Membership::undecided;
    out.certificate = std::move(cert);
    return out;
  }

  // 1 - split is exact for split in [1/2, 1]. When phi is already inside
  // the tail, the tail argument alone covers [phi, 1].
  const double split = std::max(1.0 - delta_tail, phi);
  const Interval tail(1.0 - split);

  Certificate cert;
  cert.pipeline = Pipeline::generic;
  cert.toolinfo = current_toolinfo();
  cert.parameters = {{"weight", shortest_decimal(phi)},
                     {"delta_tail", shortest_decimal(delta_tail)},
                     {"max_depth", std::to_string(max_depth)}};
  if (phi < split) {
    cert.children.push_back(
        prove_nonneg(make_function("Gw(" + shortest_decimal(phi) + ")"), Interval(phi, split), max_depth, 0.0));
  }
  for (auto& s : tail_conditions(Interval(phi), tail)) cert.steps.push_back(std::move(s));
  cert.finalize();

  // Interval bounds can only confirm; a failed tail condition means the
  // method does not apply, not that phi is outside S.
  out.verdict = cert.verdict == Verdict::certified ? Membership::member : Membership::undecided;
  out.certificate = std::move(cert);
  return out;
}

PhiStarBracket find_phi_star(double tol, double delta_tail, int max_depth) {
  if (!(tol >= 1e-6)) throw ParameterError("tolerance must be >= 1e-6");
  PhiStarBracket b;
  auto probe = [&](double x) {
    const Membership m = member_of_S(x, delta_tail, max_depth).verdict;
    b.probes.push_back({x, m});
    return m;
  };

  if (probe(kSearchLo) != Membership::non_member || probe(kSearchHi) != Membership::member) {
    throw Error("search interval endpoints do not bracket the minimum of S");
  }
  b.lo = kSearchLo;
  b.hi = kSearchHi;

  while (b.hi - b.lo > tol) {
    const double mid = b.lo + (b.hi - b.lo) / 2.0;
    double at = mid;
    Membership m = probe(at);
    for (const double shift : {tol / 10.0, -tol / 10.0}) {
      if (m != Membership::undecided) break;
      at = mid + shift;
      if (at <= b.lo || at >= b.hi) continue;
      m = probe(at);
    }
    if (m == Membership::undecided) {
      b.partial = true;
      break;
    }
    (m == Membership::member ? b.hi : b.lo) = at;
  }
  return b;
}

}  // namespace phicert
