#pragma once

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phicert/rational.hpp"

namespace phicert {

// A family of subsets of {1..n}, n <= 5. Subsets are bit masks over the
// ground set (bit i-1 for element i); the family is a bitset over the 2^n
// masks.
class SetFamily {
 public:
  static constexpr int kMaxN = 5;
  using Members = std::bitset<32>;

  explicit SetFamily(int n);
  // Sets given by their (1-based) elements; {} is the empty set.
  SetFamily(int n, std::initializer_list<std::initializer_list<int>> sets);
  SetFamily(int n, Members members);

  int n() const { return n_; }
  const Members& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }
  bool contains(std::uint32_t set) const { return members_.test(set); }
  void insert(std::uint32_t set);

  std::vector<std::uint32_t> sets() const;

  // A pair (A, B) of members whose union is missing, if any.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> union_violation() const;
  bool is_union_closed() const { return !union_violation().has_value(); }

  // Relabels element i as perm[i-1] (a permutation of 1..n).
  SetFamily relabeled(const std::vector<int>& perm) const;

  // One set per line, elements sorted: "{}", "{1}", "{1,2}".
  std::string str() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  Members members_;
};

std::string set_str(std::uint32_t set, int n);
SetFamily parse_family(std::string_view text, int n);

// Smallest union-closed family containing the generators.
SetFamily union_closure(const SetFamily& generators);

// c / m >= (3 - sqrt 5) / 2, decided in integers:
// true when 3m - 2c <= 0, otherwise iff (3m - 2c)^2 <= 5 m^2.
bool meets_union_closed_bound(std::int64_t count, std::int64_t size);

struct FrequencyReport {
  int best_element = 0;  // 1-based
  std::int64_t best_count = 0;
  std::int64_t family_size = 0;
  Rational best_fraction;
  bool meets_bound = false;
};

// Exact maximum element frequency. ValidationError if the family is empty,
// is {empty set} (no element occurs at all), or is not union-closed (the
// message names a violating pair).
FrequencyReport check_family(const SetFamily& family);

struct FranklSummary {
  int n = 0;
  std::int64_t candidates = 0;     // nonempty families of subsets of [n]
  std::int64_t union_closed = 0;   // of which union-closed
  std::int64_t evaluated = 0;      // union-closed families passed to check_family
  std::int64_t skipped_trivial = 0;  // the family {empty set}
  Rational min_fraction{1};
  SetFamily argmin{1};
  std::int64_t bound_violations = 0;  // below (3 - sqrt 5) / 2
  std::int64_t below_half = 0;
};

// Every nonempty union-closed family over [n], n in 1..4. The candidate
// masks are split into `jobs` contiguous ranges (0 = hardware concurrency);
// ties for the minimum go to the smallest family mask, so the summary does
// not depend on jobs.
FranklSummary exhaustive_check(int n, unsigned jobs = 0);

// Union closures of random generator families (1..max_generators random
// subsets of [n]), n <= 5.
FranklSummary sampled_check(int n, int samples, std::uint64_t seed, int max_generators = 6);

std::string summary_str(const FranklSummary& s);

// E_{c,c'}[H(p_c + p_c' - p_c p_c')] - E_c[H(p_c)] for independent c, c'
// drawn with the given weights. ValidationError on mismatched sizes, values
// outside [0,1], weights not summing to 1 within 1e-12, or a mean E[p] that
// certainly exceeds (3 - sqrt 5) / 2.
double gilmer_tight_check(const std::vector<double>& p, const std::vector<double>& weights);

}  // namespace phicert
