#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "anacont/catalog.hpp"
#include "anacont/continuation.hpp"
#include "oracles.hpp"

#ifndef ANACONT_CLI_PATH
#error "ANACONT_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ANACONT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("eval emits JSON that matches the library") {
  const RunResult r =
      run_cli("eval --series builtin:geometric --re -2 --im 0.5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const anacont::Cx z(-2.0, 0.5);
  const anacont::Series s =
      anacont::to_series(anacont::find_builtin("geometric").spec);
  const anacont::ContinuationResult lib = anacont::continue_at(s, z);
  CHECK(std::abs(j["value"][0].get<double>() - lib.value.real()) < 1e-12);
  CHECK(std::abs(j["value"][1].get<double>() - lib.value.imag()) < 1e-12);
  CHECK(j["mode"] == "contour");
  CHECK(j["m"].get<int>() == lib.m);
  CHECK(j["err_estimate"].get<double>() < 1e-6);
}

TEST_CASE("eval output is deterministic") {
  const std::string args =
      "eval --series builtin:log --re 0.3 --im 1.7 --dump-contour";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j.contains("contour"));
  CHECK(j["contour"]["pieces"].size() == 3);
}

TEST_CASE("constants subcommand prints the closed-form values") {
  const RunResult r = run_cli("constants --r-exclusion 0.3");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const double pi2 = 2.0 * oracle::kPi;
  CHECK(std::abs(j["c_far"].get<double>() - 1.0 / (1.0 - std::exp(-pi2))) <
        1e-8);
  CHECK(std::abs(j["c_near"].get<double>() -
                 1.0 / (1.0 - std::exp(-pi2 * 0.3))) < 1e-8);
}

TEST_CASE("grid writes one CSV row per node and nan for excluded points") {
  const RunResult r = run_cli(
      "grid --series builtin:geometric --re0 -1 --re1 2 --nre 4 "
      "--im0 0 --im1 1 --nim 2");
  REQUIRE(r.exit_code == 0);
  int lines = 0;
  int nans = 0;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    const std::size_t e = r.out.find('\n', pos);
    const std::string line = r.out.substr(pos, e - pos);
    if (!line.empty()) {
      ++lines;
      if (line.find("nan") != std::string::npos) ++nans;
    }
    if (e == std::string::npos) break;
    pos = e + 1;
  }
  CHECK(lines == 1 + 4 * 2);  // header + 8 nodes
  // The nodes at z = 2 + 0i (on the cut) and z = 1 + 0i must be nan rows.
  CHECK(nans == 2);
  CHECK(r.out.rfind("re,im,F_re,F_im,err", 0) == 0);
}

TEST_CASE("verify passes for builtins") {
  const RunResult r = run_cli("verify --series builtin:dilog --tol 1e-6");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ok"].get<bool>());
  CHECK(j["worst_dev"].get<double>() < 1e-6);
  // An absurd tolerance makes the same checks fail with exit code 2.
  const RunResult bad = run_cli("verify --series builtin:dilog --tol 1e-30");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("interp evaluates interpolants from the command line") {
  const RunResult r = run_cli("interp --g 'exp(-z)' --eta 0.45 --M 2 --re 3");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"][0].get<double>() - (-1.0 / 6.0)) < 1e-9);
  CHECK(std::abs(j["value"][1].get<double>()) < 1e-9);

  const RunResult d = run_cli(
      "interp --g 'exp(-pow(1 - z, 0.5, -pi))' --delta 0.3 --eta 0.25 "
      "--re 2");
  REQUIRE(d.exit_code == 0);
  const nlohmann::json jd = nlohmann::json::parse(d.out);
  CHECK(jd["method"] == "deformed_boundary");
  CHECK(std::abs(jd["value"][0].get<double>() - std::exp(-1.0) / 4.0) < 1e-8);
}

TEST_CASE("interp-check confirms radius independence") {
  const RunResult r = run_cli(
      "interp-check --g 'exp(-z)' --eta 0.45 --M 2 --re 1.5 --im 0.5 "
      "--r-list 0.3,0.5,0.7 --tol 1e-6");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ok"].get<bool>());
  CHECK(j["max_dev"].get<double>() < 1e-7);
}

TEST_CASE("growth reports sensible scales for exp(z)") {
  const RunResult r = run_cli(
      "growth --expr 'exp(z)' --angles 0,1.5707963267948966");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["et_estimate"].get<double>() - 1.0) < 0.02);
  CHECK(std::abs(j["order_estimate"].get<double>() - 1.0) < 0.05);
  CHECK(std::abs(j["indicator_samples"][0]["value"].get<double>() - 1.0) <
        0.02);
  CHECK(std::abs(j["indicator_samples"][1]["value"].get<double>()) < 0.02);
}

TEST_CASE("usage and domain problems exit with code 3") {
  CHECK(run_cli("eval --re 1.0 --im 0").exit_code == 3);   // on the cut
  CHECK(run_cli("eval --no-such-flag").exit_code == 3);    // parse error
  CHECK(run_cli("nonsense").exit_code == 3);               // bad subcommand
  CHECK(run_cli("growth --expr '1/(1 - z)'").exit_code == 3);  // not entire
  CHECK(run_cli("growth --expr 'z +'").exit_code == 3);    // syntax error
  CHECK(run_cli("eval --series builtin:nope --re -1").exit_code == 3);
}

TEST_CASE("accuracy failures exit with code 2") {
  const RunResult r = run_cli(
      "eval --series builtin:geometric --re -2 --im 0 --budget 60 "
      "--quad-tol 1e-12");
  CHECK(r.exit_code == 2);
}
