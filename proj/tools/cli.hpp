#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "phicert/rational.hpp"
#include "phicert/tables.hpp"

namespace phicert::cli {

enum ExitCode : int {
  kCertified = 0,
  kFailed = 1,
  kUndecided = 2,
  kUsage = 3,
};

// Options shared by every subcommand. Each flag may also be supplied through
// an environment variable (PHICERT_GRID_STEP, PHICERT_THRESHOLD, ...); an
// explicit flag wins.
struct RunConfig {
  std::string subcommand;
  Rational grid_step{1, 200};
  double threshold = 0.04;
  double margin = 1e-3;
  int max_depth = 30;
  Rational eps_max{1, 50};
  double tol = 1e-6;
  std::uint64_t seed = 0;
  Format format = Format::csv;
  std::optional<std::string> out_path;
  unsigned jobs = 0;  // 0 = available parallelism
};

// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace phicert::cli
