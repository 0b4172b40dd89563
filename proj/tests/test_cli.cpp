#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sgsta/cli.hpp"
#include "sgsta/table.hpp"

using namespace sgsta;

namespace {

struct Result {
  int code;
  std::string diag;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sgsta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream diag;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), diag);
  return {code, diag.str()};
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sgsta_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("design emits the endpoint fields") {
  const std::string out = temp("design.csv");
  const Result r = run_cli({"design", "--T", "2e-6", "--bzi", "0.1", "--bxf", "-0.1", "--out", out});
  REQUIRE(r.code == cli::kExitOk);
  const Table t = read_csv_table(out);
  CHECK(t.columns == std::vector<std::string>{"t_s", "Bx_G", "By_G", "Bz_G", "Bnorm_G"});
  CHECK(t.rows.size() == 10001);
  CHECK(t.rows.front() == std::vector<double>{0.0, 0.0, 0.0, 0.1, 0.1});
  CHECK(t.rows.back() == std::vector<double>{2e-6, -0.1, 0.0, 0.0, 0.1});
  std::filesystem::remove(out);
}

TEST_CASE("validate reports divergence with exit code 2") {
  const std::string out = temp("validate.csv");
  Result r = run_cli({"validate", "--T", "4e-7", "--bzi", "0.1", "--bxf", "-0.1", "--out", out});
  CHECK(r.code == cli::kExitDivergence);
  Table t = read_csv_table(out);
  CHECK(t.rows[0][2] == 0.0);

  r = run_cli({"validate", "--min-time", "--out", out});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.diag.find("min feasible T") != std::string::npos);
  t = read_csv_table(out);
  CHECK(t.rows[0][2] == 1.0);
  CHECK(t.rows[0][3] == doctest::Approx(0.2233).epsilon(1e-3));
  std::filesystem::remove(out);
}

TEST_CASE("simulate a zero-field profile file") {
  const std::string profile = temp("zero_profile.csv");
  const std::string out = temp("zero_traj.csv");
  std::ofstream(profile) << "t_s,Bx_G,By_G,Bz_G,Bnorm_G\n0,0,0,0,0\n1e-06,0,0,0,0\n";
  const Result r = run_cli({"simulate", "--profile", profile, "--steps", "50", "--target", "x+", "--out", out});
  REQUIRE(r.code == cli::kExitOk);
  const Table t = read_csv_table(out);
  CHECK(t.columns == std::vector<std::string>{"t_s", "Jx", "Jy", "Jz", "fidelity"});
  CHECK(t.rows.size() == 51);
  for (const auto& row : t.rows) CHECK(row[4] == t.rows.front()[4]);
  CHECK(t.rows.front()[4] == 0.25);
  std::filesystem::remove(profile);
  std::filesystem::remove(out);
}

TEST_CASE("design -> simulate round trip through a field table") {
  const std::string profile = temp("rt_profile.csv");
  const std::string replay = temp("rt_replay.csv");
  const std::string analytic = temp("rt_analytic.csv");
  REQUIRE(run_cli({"design", "--samples", "10001", "--out", profile}).code == 0);
  REQUIRE(run_cli({"simulate", "--profile", profile, "--out", replay}).code == 0);
  REQUIRE(run_cli({"simulate", "--device", "sta", "--out", analytic}).code == 0);
  const double f_replay = read_csv_table(replay).rows.back()[4];
  const double f_analytic = read_csv_table(analytic).rows.back()[4];
  CHECK(f_analytic >= 1 - 1e-8);
  CHECK(std::abs(f_replay - f_analytic) < 1e-6);
  for (const auto& p : {profile, replay, analytic}) std::filesystem::remove(p);
}

TEST_CASE("identical configuration gives byte-identical output") {
  const std::string a = temp("det_a.csv");
  const std::string b = temp("det_b.csv");
  REQUIRE(run_cli({"resources", "--points", "12", "--out", a}).code == 0);
  REQUIRE(run_cli({"resources", "--points", "12", "--serial", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("T_s,B_max_G,B_av_G,B_st0_G,diverged\n", 0) == 0);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("config file sits between defaults and flags") {
  const std::string cfg = temp("run.cfg");
  const std::string out = temp("cfg_design.csv");
  std::ofstream(cfg) << "T=1e-6\nbzi=0.2\nsamples=101\n";
  REQUIRE(run_cli({"design", "--config", cfg, "--out", out}).code == 0);
  Table t = read_csv_table(out);
  CHECK(t.rows.size() == 101);
  CHECK(t.rows.back()[0] == 1e-6);
  CHECK(t.rows.front()[3] == 0.2);
  REQUIRE(run_cli({"design", "--config", cfg, "--T", "3e-6", "--out", out}).code == 0);
  t = read_csv_table(out);
  CHECK(t.rows.back()[0] == 3e-6);
  CHECK(t.rows.front()[3] == 0.2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

TEST_CASE("every subcommand produces its table") {
  const std::string out = temp("sub.json");
  struct Case {
    std::vector<std::string> args;
    std::string first_key;
  };
  const std::vector<Case> cases{
      {{"sweep-standard", "--points", "5", "--steps", "500"}, "T_over_TL"},
      {{"compare", "--steps", "200"}, "t_s"},
      {{"resilience", "--points", "5", "--steps", "500"}, "dt_over_T"},
      {{"resources", "--points", "5"}, "T_s"},
      {{"speedup", "--points", "5"}, "T_s"},
      {{"simulate", "--device", "helicoidal", "--b0", "0.1", "--T", "7.14e-6", "--steps", "200"}, "t_s"},
  };
  for (const auto& c : cases) {
    auto args = c.args;
    args.insert(args.end(), {"--format", "json", "--out", out});
    const Result r = run_cli(args);
    INFO(c.args[0], " ", r.diag);
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    REQUIRE(doc.is_array());
    REQUIRE(!doc.empty());
    CHECK(doc[0].contains(c.first_key));
  }
  std::filesystem::remove(out);
}

TEST_CASE("input errors exit with code 1") {
  CHECK(run_cli({}).code == cli::kExitInput);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitInput);
  CHECK(run_cli({"design", "--no-such-flag"}).code == cli::kExitInput);
  const Result pos = run_cli({"design", "--bxf", "0.1", "--out", temp("never.csv")});
  CHECK(pos.code == cli::kExitInput);
  CHECK(pos.diag.find("negative") != std::string::npos);
  CHECK(run_cli({"design", "--T", "nan"}).code == cli::kExitInput);
  CHECK(run_cli({"design", "--format", "xml"}).code == cli::kExitInput);
  CHECK(run_cli({"simulate", "--device", "coil"}).code == cli::kExitInput);
  CHECK(run_cli({"design", "--out", "/nonexistent-dir/x.csv"}).code == cli::kExitInput);
  CHECK(run_cli({"resilience", "--offset-max", "0.5"}).code == cli::kExitInput);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("divergent designs exit with code 2") {
  CHECK(run_cli({"compare", "--T", "4e-7", "--out", temp("never.csv")}).code == cli::kExitDivergence);
  CHECK(run_cli({"resilience", "--T", "4e-7", "--out", temp("never.csv")}).code == cli::kExitDivergence);
}
