#include "phicert/frankl.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "phicert/entropy.hpp"
#include "phicert/errors.hpp"
#include "phicert/golden.hpp"

namespace phicert {
namespace {

std::uint32_t universe_size(int n) { return std::uint32_t{1} << n; }

void merge(FranklSummary& into, const FranklSummary& part, std::uint64_t& best_mask, std::uint64_t part_mask) {
  into.candidates += part.candidates;
  into.union_closed += part.union_closed;
  into.evaluated += part.evaluated;
  into.skipped_trivial += part.skipped_trivial;
  into.bound_violations += part.bound_violations;
  into.below_half += part.below_half;
  if (part.evaluated == 0) return;
  if (part.min_fraction < into.min_fraction || (part.min_fraction == into.min_fraction && part_mask < best_mask)) {
    into.min_fraction = part.min_fraction;
    into.argmin = part.argmin;
    best_mask = part_mask;
  }
}

// Accounts one union-closed family into `s`; returns true if it became the
// new minimum.
bool account(FranklSummary& s, const SetFamily& fam) {
  ++s.union_closed;
  if (fam.size() == 1 && fam.contains(0)) {
    ++s.skipped_trivial;
    return false;
  }
  const FrequencyReport r = check_family(fam);
  ++s.evaluated;
  if (!r.meets_bound) ++s.bound_violations;
  if (r.best_fraction < Rational(1, 2)) ++s.below_half;
  if (s.evaluated == 1 || r.best_fraction < s.min_fraction) {
    s.min_fraction = r.best_fraction;
    s.argmin = fam;
    return true;
  }
  return false;
}

struct RangeResult {
  FranklSummary summary;
  std::uint64_t argmin_mask = 0;
};

RangeResult scan(int n, std::uint64_t first, std::uint64_t last) {
  RangeResult out;
  out.summary.n = n;
  out.summary.argmin = SetFamily(n);
  for (std::uint64_t mask = first; mask < last; ++mask) {
    ++out.summary.candidates;
    const SetFamily fam(n, SetFamily::Members(mask));
    if (!fam.is_union_closed()) continue;
    if (account(out.summary, fam)) out.argmin_mask = mask;
  }
  return out;
}

}  // namespace

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw ValidationError("ground set size must lie in 1..5");
}

SetFamily::SetFamily(int n, std::initializer_list<std::initializer_list<int>> sets) : SetFamily(n) {
  for (const auto& s : sets) {
    std::uint32_t mask = 0;
    for (int e : s) {
      if (e < 1 || e > n) throw ValidationError("element " + std::to_string(e) + " outside [n]");
      mask |= std::uint32_t{1} << (e - 1);
    }
    insert(mask);
  }
}

SetFamily::SetFamily(int n, Members members) : SetFamily(n) {
  for (std::size_t s = universe_size(n); s < members.size(); ++s) {
    if (members.test(s)) throw ValidationError("family member outside the power set of [n]");
  }
  members_ = members;
}

void SetFamily::insert(std::uint32_t set) {
  if (set >= universe_size(n_)) throw ValidationError("set outside the power set of [n]");
  members_.set(set);
}

std::vector<std::uint32_t> SetFamily::sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < universe_size(n_); ++s) {
    if (members_.test(s)) out.push_back(s);
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> SetFamily::union_violation() const {
  const auto list = sets();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!members_.test(list[i] | list[j])) return std::make_pair(list[i], list[j]);
    }
  }
  return std::nullopt;
}

SetFamily SetFamily::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ValidationError("permutation has the wrong length");
  SetFamily out(n_);
  for (std::uint32_t s : sets()) {
    std::uint32_t t = 0;
    for (int i = 0; i < n_; ++i) {
      if (s >> i & 1U) t |= std::uint32_t{1} << (perm[i] - 1);
    }
    out.insert(t);
  }
  return out;
}

std::string set_str(std::uint32_t set, int n) {
  std::string out = "{";
  for (int i = 0; i < n; ++i) {
    if (set >> i & 1U) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i + 1);
    }
  }
  return out + "}";
}

std::string SetFamily::str() const {
  std::string out;
  for (std::uint32_t s : sets()) out += set_str(s, n_) + "\n";
  return out;
}

SetFamily parse_family(std::string_view text, int n) {
  SetFamily fam(n);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\r'; }),
               line.end());
    if (line.empty()) continue;
    if (line.front() != '{' || line.back() != '}') throw ValidationError("malformed set line: " + line);
    std::uint32_t mask = 0;
    std::istringstream cells(line.substr(1, line.size() - 2));
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      int e = 0;
      try {
        e = std::stoi(cell);
      } catch (const std::exception&) {
        throw ValidationError("malformed element '" + cell + "'");
      }
      if (e < 1 || e > n) throw ValidationError("element " + cell + " outside [n]");
      mask |= std::uint32_t{1} << (e - 1);
    }
    fam.insert(mask);
  }
  return fam;
}

SetFamily union_closure(const SetFamily& generators) {
  if (generators.empty()) throw ValidationError("union closure of an empty family");
  SetFamily out = generators;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto list = out.sets();
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const std::uint32_t u = list[i] | list[j];
        if (!out.contains(u)) {
          out.insert(u);
          grew = true;
        }
      }
    }
  }
  return out;
}

bool meets_union_closed_bound(std::int64_t count, std::int64_t size) {
  const std::int64_t d = 3 * size - 2 * count;
  if (d <= 0) return true;
  return d * d <= 5 * size * size;
}

FrequencyReport check_family(const SetFamily& family) {
  if (family.empty()) throw ValidationError("family is empty");
  if (const auto v = family.union_violation()) {
    throw ValidationError("family is not union-closed: " + set_str(v->first, family.n()) + " u " +
                          set_str(v->second, family.n()) + " is missing");
  }
  if (family.size() == 1 && family.contains(0)) {
    throw ValidationError("family {{}} has no element of positive frequency");
  }
  FrequencyReport r;
  r.family_size = static_cast<std::int64_t>(family.size());
  for (int i = 0; i < family.n(); ++i) {
    std::int64_t c = 0;
    for (std::uint32_t s : family.sets()) c += s >> i & 1U;
    if (c > r.best_count) {
      r.best_count = c;
      r.best_element = i + 1;
    }
  }
  r.best_fraction = Rational(r.best_count, r.family_size);
  r.meets_bound = meets_union_closed_bound(r.best_count, r.family_size);
  return r;
}

FranklSummary exhaustive_check(int n, unsigned jobs) {
  if (n < 1 || n > 4) throw ParameterError("exhaustive check supports n in 1..4");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t end = std::uint64_t{1} << universe_size(n);
  const std::uint64_t chunk = (end - 1 + jobs - 1) / jobs;

  std::vector<std::future<RangeResult>> parts;
  for (std::uint64_t first = 1; first < end; first += chunk) {
    const std::uint64_t last = std::min(end, first + chunk);
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, scan, n, first, last));
  }
  FranklSummary total;
  total.n = n;
  total.argmin = SetFamily(n);
  std::uint64_t best_mask = end;
  for (auto& p : parts) {
    const RangeResult r = p.get();
    merge(total, r.summary, best_mask, r.argmin_mask);
  }
  return total;
}

FranklSummary sampled_check(int n, int samples, std::uint64_t seed, int max_generators) {
  if (n < 1 || n > SetFamily::kMaxN) throw ParameterError("sampled check supports n in 1..5");
  if (max_generators < 1) throw ParameterError("need at least one generator");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> subset(0, universe_size(n) - 1);
  std::uniform_int_distribution<int> count(1, max_generators);
  FranklSummary s;
  s.n = n;
  s.argmin = SetFamily(n);
  for (int i = 0; i < samples; ++i) {
    SetFamily gen(n);
    const int g = count(rng);
    for (int k = 0; k < g; ++k) gen.insert(subset(rng));
    ++s.candidates;
    account(s, union_closure(gen));
  }
  return s;
}

std::string summary_str(const FranklSummary& s) {
  std::ostringstream out;
  out << "n = " << s.n << "\n"
      << "candidates = " << s.candidates << "\n"
      << "union_closed = " << s.union_closed << "\n"
      << "evaluated = " << s.evaluated << "\n"
      << "skipped_trivial = " << s.skipped_trivial << "\n"
      << "min_best_fraction = " << s.min_fraction.str() << "\n"
      << "bound_violations = " << s.bound_violations << "\n"
      << "below_half = " << s.below_half << "\n"
      << "argmin_family =\n"
      << s.argmin.str();
  return out.str();
}

double gilmer_tight_check(const std::vector<double>& p, const std::vector<double>& weights) {
  if (p.empty() || p.size() != weights.size()) {
    throw ValidationError("p and weights must be nonempty and of equal length");
  }
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 1.0)) throw ValidationError("p value outside [0,1]");
    if (!(weights[i] >= 0.0)) throw ValidationError("negative weight");
    total += weights[i];
    mean += weights[i] * p[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("weights do not sum to 1");
  if (mean > union_closed_constant().hi()) {
    throw ValidationError("E[p] exceeds (3 - sqrt 5) / 2; the inequality need not hold");
  }
  double pairs = 0.0;
  double singles = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      pairs += weights[i] * weights[j] * scalar::binary_entropy(1.0 - (1.0 - p[i]) * (1.0 - p[j]));
    }
    singles += weights[i] * scalar::binary_entropy(p[i]);
  }
  return pairs - singles;
}

}  // namespace phicert
