#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = phicert::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("phicert_cli_" + std::to_string(::getpid()) + "_" + name);
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~EnvGuard() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, CertifyDefaultsExitZero) {
  const auto r = run({"certify"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"verdict\": \"certified\""), std::string::npos);
  EXPECT_NE(r.err.find("verdict: certified"), std::string::npos);
}

TEST(Cli, HighThresholdFailsAndNamesTheStep) {
  const auto r = run({"certify", "--threshold", "0.12"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("first unsuccessful step: L(x) >= threshold at x = 0.600"), std::string::npos) << r.err;
}

TEST(Cli, InvalidParametersExitThree) {
  EXPECT_EQ(run({"certify", "--grid-step", "0.02"}).code, 3);
  EXPECT_EQ(run({"certify", "--eps-max", "0.05"}).code, 3);
  EXPECT_EQ(run({"tables", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"nonsense"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"frankl"}).code, 3);
  EXPECT_EQ(run({"minimize"}).code, 3);
}

TEST(Cli, ProveUndecidedExitsTwo) {
  const auto r = run({"prove", "--fn", "-G", "--lo", "0.65", "--hi", "0.7", "--max-depth", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("witness box"), std::string::npos);
  EXPECT_EQ(run({"prove", "--fn", "G", "--lo", "0.619", "--hi", "0.98"}).code, 0);
}

TEST(Cli, EnvironmentSuppliesDefaultsAndFlagsWin) {
  EnvGuard guard("PHICERT_THRESHOLD", "0.12");
  EXPECT_EQ(run({"certify"}).code, 1);
  EXPECT_EQ(run({"certify", "--threshold", "0.04"}).code, 0);
}

TEST(Cli, TablesAreByteIdenticalAcrossRuns) {
  const auto a = run({"tables", "--table", "1"});
  const auto b = run({"tables", "--table", "1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 17), "x,L\n0.600,0.1020\n");
  const auto tsv = run({"--format", "tsv", "tables", "--table", "2"});
  EXPECT_EQ(tsv.out.substr(0, 9), "x\tg1\tg2\n0");
}

TEST(Cli, OutWritesToAFileAndReplayIsIdentical) {
  const auto path = scratch("cert.json");
  ASSERT_EQ(run({"certify", "--out", path.string()}).code, 0);
  const auto r = run({"certify", "--replay", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("replay: identical"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, CustomChainFile) {
  const auto path = scratch("chain.tsv");
  {
    std::ofstream f(path);
    f << "x\tg1\tg2\n0.8\t0\t0\n0.98\t0\t0\n";
  }
  const auto r = run({"certify", "--chain", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("piece I2: failed"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, MinimizeIsSeedDeterministic) {
  const auto a = run({"--seed", "5", "minimize", "--phi", "0.8", "--restarts", "6"});
  const auto b = run({"minimize", "--phi", "0.8", "--restarts", "6", "--seed", "5", "--jobs", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# F = 0"), std::string::npos) << a.out;
}

TEST(Cli, FranklAndPhiStar) {
  const auto f = run({"frankl", "--exhaustive", "3"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("bound_violations = 0"), std::string::npos) << f.out;
  const auto p = run({"phi-star", "--tol", "1e-5"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("contains_golden = true"), std::string::npos) << p.out;
}

TEST(Cli, PlotHas402Lines) {
  const auto r = run({"plot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 402);
}
