#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phicert/interval.hpp"

namespace phicert {

enum class Verdict { certified, failed, undecided };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

// failed dominates undecided, which dominates certified.
Verdict conjoin(Verdict a, Verdict b);

enum class Pipeline { I1, I2, I3, exact_facts, generic, claim1 };

std::string_view to_string(Pipeline p);
Pipeline parse_pipeline(std::string_view text);

struct Step {
  std::string description;
  std::vector<Interval> inputs;
  Interval output;
  Verdict verdict = Verdict::certified;
};

struct ToolInfo {
  std::string version;
  bool ln_check_passed = false;
  int ln_check_samples = 0;
  double ln_check_max_ulps = 0.0;
};

ToolInfo current_toolinfo();

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Machine-readable record of one verification run. The parameters are
// sufficient to re-run the pipeline; `results` holds observed figures such as
// the smallest certified lower bound.
struct Certificate {
  Pipeline pipeline = Pipeline::generic;
  KeyValues parameters;
  std::vector<Step> steps;
  Verdict verdict = Verdict::undecided;
  ToolInfo toolinfo;
  std::optional<Step> witness;
  KeyValues results;
  std::vector<Certificate> children;

  std::optional<std::string> parameter(std::string_view key) const;
  std::optional<std::string> result(std::string_view key) const;

  Step& add_step(std::string description, std::vector<Interval> inputs, Interval output,
                 Verdict verdict);

  // Sets verdict to the conjunction of all steps and children.
  void finalize();

  // First non-certified step, searching children depth-first.
  const Step* first_unsuccessful_step() const;
};

std::string to_json(const Certificate& cert, int indent = 2);
Certificate certificate_from_json(std::string_view text);

// True when both certificates carry identical verdicts and step endpoints,
// recursively. Tool info is ignored.
bool same_outcome(const Certificate& a, const Certificate& b);

// Shortest decimal string that round-trips to v.
std::string shortest_decimal(double v);
double parse_double(std::string_view text);

}  // namespace phicert
