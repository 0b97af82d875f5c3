// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "symlat/cli.hpp"

using namespace symlat;
using namespace symlat::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "symlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "symlat_test_cli";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli({"validate", fixture_path("fig1")}).code == 0);
  CHECK(cli({"check", "all", fixture_path("fig4")}).code == 0);
  CHECK(cli({"check", "constancy", fixture_path("fig2c")}).code == 0);
  CHECK(cli({"validate", fixture_path("missing")}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check", "nonsense", fixture_path("fig2")}).code == 2);
  CHECK(cli({"spectrum", "--map", "nope", fixture_path("fig2")}).code == 2);
  CHECK(cli({"--version"}).code == 0);
}

TEST_CASE("hypothesis failures are not check failures") {
  // Tolerances below rounding error make the eigen hypothesis fail, which
  // turns the verdict into not_applicable rather than fails.
  ::setenv("SYMLAT_TOLERANCE_SCALE", "1e-12", 1);
  const Run r = cli({"check", "constancy", fixture_path("fig2")});
  ::setenv("SYMLAT_TOLERANCE_SCALE", "zero", 1);
  const Run bad = cli({"validate", fixture_path("fig2")});
  ::unsetenv("SYMLAT_TOLERANCE_SCALE");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"not_applicable\"") != std::string::npos);
  CHECK(bad.code == 2);
}

TEST_CASE("input errors name the file and location") {
  const auto dir = scratch_dir();
  const auto bad = dir / "bad.lat";
  write(bad, "lattice t\nsite 1 x=0 y=0 v=0\nhop 1 2 h=1\n");
  const Run r = cli({"validate", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.lat") != std::string::npos);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("empty document creates no output file") {
  const auto dir = scratch_dir();
  const auto empty = dir / "empty.lat";
  write(empty, "");
  const auto out = dir / "report.json";
  CHECK(cli({"validate", empty.string(), "-o", out.string()}).code == 2);
  CHECK_FALSE(std::filesystem::exists(out));
}

TEST_CASE("csv is only offered for currents and evolve") {
  CHECK(cli({"spectrum", "--format", "csv", fixture_path("fig2")}).code == 2);
  const Run c = cli({"currents", "--format", "csv", fixture_path("fig2")});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("n,m,q_re,q_im\n", 0) == 0);
  const Run e = cli({"evolve", "--format", "csv", "--steps", "2", fixture_path("fig2")});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("t,site,psi_re,psi_im,sigma_re,sigma_im,residual\n", 0) == 0);
}

TEST_CASE("currents csv writes a site sidecar") {
  const auto dir = scratch_dir();
  const auto out = dir / "q.csv";
  CHECK(cli({"currents", "--format", "csv", "--state", "1", fixture_path("fig2"), "-o", out.string()}).code == 0);
  CHECK(std::filesystem::exists(out));
  const auto side = dir / "q.sites.csv";
  REQUIRE(std::filesystem::exists(side));
  CHECK(read_text_file(side).rfind("site,sigma_re", 0) == 0);
}

TEST_CASE("currents needs a single mapping") {
  CHECK(cli({"currents", fixture_path("fig1")}).code == 2);
  CHECK(cli({"currents", "--map", "diag", fixture_path("fig1")}).code == 0);
  CHECK(cli({"currents", "--map", "identity", fixture_path("fig1")}).code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  const auto dir = scratch_dir();
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  REQUIRE(cli({"check", "all", fixture_path("fig1"), "-o", a.string()}).code == 0);
  REQUIRE(cli({"check", "all", fixture_path("fig1"), "-o", b.string()}).code == 0);
  CHECK(read_text_file(a) == read_text_file(b));
  CHECK(cli({"check", "all", fixture_path("fig1")}).out == read_text_file(a));
}

TEST_CASE("evolve with an initial state file") {
  const auto dir = scratch_dir();
  const auto init = dir / "psi.txt";
  write(init, "1 1\n6 0 1\n");
  const Run r = cli({"evolve", "--t", "3", "--steps", "6", "--initial", init.string(), fixture_path("fig2")});
  CHECK(r.code == 0);
  write(init, "99 1\n");
  CHECK(cli({"evolve", "--initial", init.string(), fixture_path("fig2")}).code == 2);
  CHECK(cli({"evolve", "--steps", "0", fixture_path("fig2")}).code == 2);
}

TEST_CASE("acceptance subcommand runs one criterion") {
  const Run r = cli({"acceptance", "--criterion", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS 10", 0) == 0);
  CHECK(cli({"acceptance", "--criterion", "12"}).code == 2);
}
