#include "cli.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "phicert/certificate.hpp"
#include "phicert/chain.hpp"
#include "phicert/errors.hpp"
#include "phicert/frankl.hpp"
#include "phicert/golden.hpp"
#include "phicert/measure.hpp"
#include "phicert/phi_star.hpp"
#include "phicert/pipelines.hpp"
#include "phicert/prover.hpp"

namespace phicert::cli {
namespace {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::certified: return kCertified;
    case Verdict::failed: return kFailed;
    case Verdict::undecided: return kUndecided;
  }
  return kFailed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Sends the main payload to --out when given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (!cfg.out_path) {
    out << payload;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot write '" + *cfg.out_path + "'");
  file << payload;
}

void report_failure(const Certificate& cert, std::ostream& err) {
  if (cert.verdict == Verdict::certified) return;
  for (const auto& child : cert.children) {
    if (child.verdict != Verdict::certified) {
      err << "piece " << to_string(child.pipeline) << ": " << to_string(child.verdict) << "\n";
    }
  }
  if (const Step* s = cert.first_unsuccessful_step()) {
    err << "first unsuccessful step: " << s->description << " -> " << s->output.str() << "\n";
  }
}

struct CertifyArgs {
  std::string replay;
  std::string chain;
  bool synthesize = false;
};

int cmd_certify(const RunConfig& cfg, const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.replay.empty()) {
    const Certificate recorded = certificate_from_json(read_file(a.replay));
    const Certificate again = rerun(recorded);
    const bool same = same_outcome(recorded, again);
    err << "replay: " << (same ? "identical" : "differs") << "\n";
    emit(cfg, out, to_json(again) + "\n");
    report_failure(again, err);
    return same ? exit_code(again.verdict) : kFailed;
  }
  Claim1Options o;
  o.convexity.grid_step = cfg.grid_step;
  o.convexity.threshold = cfg.threshold;
  o.chain.margin = cfg.margin;
  o.eps_max = cfg.eps_max;
  o.synthesize_chain = a.synthesize;
  if (!a.chain.empty()) {
    for (const auto& row : parse_chain_tsv(read_file(a.chain))) o.chain.abscissae.push_back(row.x);
  }
  const Certificate cert = verify_claim1(o);
  emit(cfg, out, to_json(cert) + "\n");
  err << "verdict: " << to_string(cert.verdict) << "\n";
  report_failure(cert, err);
  return exit_code(cert.verdict);
}

int cmd_tables(const RunConfig& cfg, const std::string& which, std::ostream& out) {
  std::string payload;
  if (which == "1" || which == "all") payload += render(table1_text(), cfg.format);
  if (which == "all") payload += "\n";
  if (which == "2" || which == "all") payload += render(table2_text(), cfg.format);
  emit(cfg, out, payload);
  return kCertified;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, out, render(figure1_text(), cfg.format));
  return kCertified;
}

int cmd_phi_star(const RunConfig& cfg, double delta_tail, std::ostream& out) {
  const PhiStarBracket b = find_phi_star(cfg.tol, delta_tail, cfg.max_depth);
  const Interval& g = golden_ratio().enclosure;
  std::ostringstream s;
  s << "lo = " << shortest_decimal(b.lo) << "\n"
    << "hi = " << shortest_decimal(b.hi) << "\n"
    << "width = " << shortest_decimal(b.hi - b.lo) << "\n"
    << "contains_golden = " << (b.lo <= g.lo() && g.hi() <= b.hi ? "true" : "false") << "\n"
    << "partial = " << (b.partial ? "true" : "false") << "\n"
    << "probes = " << b.probes.size() << "\n";
  emit(cfg, out, s.str());
  return b.partial ? kUndecided : kCertified;
}

struct MinimizeArgs {
  double phi = 0.0;
  int k = 5;
  int restarts = 20;
};

int cmd_minimize(const RunConfig& cfg, const MinimizeArgs& a, std::ostream& out) {
  const MinimizeResult r = minimize_F(a.phi, a.k, a.restarts, cfg.seed, cfg.jobs);
  const DiscreteMeasure mu(r.atoms, a.phi);
  std::string payload = to_tsv(mu);
  payload += "# F = " + shortest_decimal(r.value) + "\n";
  payload += "# converged = " + std::string(r.converged ? "true" : "false") + "\n";
  payload += "# best_restart = " + std::to_string(r.best_restart) + "\n";
  emit(cfg, out, payload);
  return r.converged ? kCertified : kUndecided;
}

struct FranklArgs {
  int exhaustive = 0;
  int sample = 0;
  int n = 5;
  int max_generators = 6;
};

int cmd_frankl(const RunConfig& cfg, const FranklArgs& a, std::ostream& out) {
  if ((a.exhaustive > 0) == (a.sample > 0)) throw ParameterError("give exactly one of --exhaustive N or --sample S");
  const FranklSummary s =
      a.exhaustive > 0 ? exhaustive_check(a.exhaustive, cfg.jobs) : sampled_check(a.n, a.sample, cfg.seed, a.max_generators);
  emit(cfg, out, summary_str(s));
  return s.bound_violations == 0 ? kCertified : kFailed;
}

struct ProveArgs {
  std::string fn;
  double lo = 0.0;
  double hi = 0.0;
  double strict_margin = 0.0;
};

int cmd_prove(const RunConfig& cfg, const ProveArgs& a, std::ostream& out, std::ostream& err) {
  const Certificate cert = prove_nonneg(make_function(a.fn), Interval(a.lo, a.hi), cfg.max_depth, a.strict_margin);
  emit(cfg, out, to_json(cert) + "\n");
  err << "verdict: " << to_string(cert.verdict) << "\n";
  if (cert.witness) err << "witness box: " << cert.witness->inputs.front().str() << "\n";
  return exit_code(cert.verdict);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validated-numerics certification of the golden-ratio bound for union-closed families", "phicert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PHICERT_VERSION);

  RunConfig cfg;
  std::string grid_step = "1/200";
  std::string eps_max = "0.02";
  std::string format = "csv";
  std::string out_path;
  app.add_option("--grid-step", grid_step, "grid spacing for the convexity piece (rational)")
      ->envname("PHICERT_GRID_STEP")
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "required lower bound of L at grid points")
      ->envname("PHICERT_THRESHOLD")
      ->capture_default_str();
  app.add_option("--margin", cfg.margin, "required chain gap")->envname("PHICERT_MARGIN")->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "bisection depth for the prover")
      ->envname("PHICERT_MAX_DEPTH")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--eps-max", eps_max, "length of the tail piece (rational, <= 0.02)")
      ->envname("PHICERT_EPS_MAX")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "bracket width for phi-star")->envname("PHICERT_TOL")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->envname("PHICERT_SEED")->capture_default_str();
  app.add_option("--format", format, "table format")
      ->envname("PHICERT_FORMAT")
      ->check(CLI::IsMember({"csv", "tsv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write the main output to this file")->envname("PHICERT_OUT");
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = available parallelism)")
      ->envname("PHICERT_JOBS")
      ->capture_default_str();

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "certify phi H(x^2) >= x H(x) on [phi, 1]");
  certify->add_option("--replay", certify_args.replay, "re-run a recorded certificate and compare");
  certify->add_option("--chain", certify_args.chain, "chain table TSV (x, g1, g2) to use instead of the shipped one");
  certify->add_flag("--synthesize", certify_args.synthesize, "build the chain greedily instead");

  std::string which_table = "all";
  auto* tables = app.add_subcommand("tables", "reproduce the L and g1/g2 tables");
  tables->add_option("--table", which_table, "1, 2 or all")->check(CLI::IsMember({"1", "2", "all"}));

  auto* plot = app.add_subcommand("plot", "G(x) on [0.6, 1] at step 0.001");

  double delta_tail = 0.02;
  auto* phi_star = app.add_subcommand("phi-star", "bracket the minimum of S by certified bisection");
  phi_star->add_option("--delta-tail", delta_tail, "tail length handled analytically")->capture_default_str();

  MinimizeArgs minimize_args;
  auto* minimize = app.add_subcommand("minimize", "minimize F over k-atom measures with a given mean");
  minimize->add_option("--phi", minimize_args.phi, "mean of the measures")->required();
  minimize->add_option("--k", minimize_args.k, "atoms per starting measure")->capture_default_str();
  minimize->add_option("--restarts", minimize_args.restarts, "random restarts")->capture_default_str();

  FranklArgs frankl_args;
  auto* frankl = app.add_subcommand("frankl", "check element frequencies of union-closed families");
  frankl->add_option("--exhaustive", frankl_args.exhaustive, "enumerate every family over [N], N <= 4");
  frankl->add_option("--sample", frankl_args.sample, "number of random generator families");
  frankl->add_option("--n", frankl_args.n, "ground set size for --sample (<= 5)")->capture_default_str();
  frankl->add_option("--max-generators", frankl_args.max_generators, "generators per sample")->capture_default_str();

  ProveArgs prove_args;
  auto* prove = app.add_subcommand("prove", "adaptive interval proof of f >= margin on [lo, hi]");
  prove->add_option("--fn", prove_args.fn, "function, e.g. G, -G, G-0.01, Gw(0.7)")->required();
  prove->add_option("--lo", prove_args.lo, "domain lower end")->required();
  prove->add_option("--hi", prove_args.hi, "domain upper end")->required();
  prove->add_option("--strict-margin", prove_args.strict_margin, "required lower bound")->capture_default_str();

  for (auto* sub : {certify, tables, plot, phi_star, minimize, frankl, prove}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    cfg.grid_step = Rational::parse(grid_step);
    cfg.eps_max = Rational::parse(eps_max);
    cfg.format = parse_format(format);
    if (!out_path.empty()) cfg.out_path = out_path;

    if (*certify) return cmd_certify(cfg, certify_args, out, err);
    if (*tables) return cmd_tables(cfg, which_table, out);
    if (*plot) return cmd_plot(cfg, out);
    if (*phi_star) return cmd_phi_star(cfg, delta_tail, out);
    if (*minimize) return cmd_minimize(cfg, minimize_args, out);
    if (*frankl) return cmd_frankl(cfg, frankl_args, out);
    if (*prove) return cmd_prove(cfg, prove_args, out, err);
  } catch (const SelfCheckError& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace phicert::cli
