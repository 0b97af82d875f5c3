// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "symlat/analysis.hpp"
#include "symlat/error.hpp"
#include "symlat/report.hpp"

using namespace symlat;
using namespace symlat::testing;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "symlat_test_report";
  std::filesystem::create_directories(dir);
  return dir / name;
}

AnalysisReport analyse(const std::string& fixture_name, Command cmd, CheckKind kind = CheckKind::all) {
  const std::string text = read_text_file(fixture_path(fixture_name));
  AnalysisOptions opt;
  opt.command = cmd;
  opt.check = kind;
  return run_analysis(document(text), text, opt);
}

}  // namespace

TEST_CASE("sha-256 test vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("numbers keep 17 significant digits") {
  const std::string s = dump_json(Json{{"x", 0.1}, {"y", 1.0 / 3.0}});
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("spectrum of the 3-chain") {
  const ResolvedDocument doc = fixture("chain3");
  AnalysisOptions opt;
  opt.command = Command::spectrum;
  const AnalysisReport rep = run_analysis(doc, read_text_file(fixture_path("chain3")), opt);
  const Json& energies = rep.json.at("spectrum").at("energies");
  REQUIRE(energies.size() == 3);
  const double expected[] = {-std::sqrt(2.0), 0.0, std::sqrt(2.0)};
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(energies[i].get<double>() - expected[i]) < 1e-10);
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("constancy check on the 6-chain") {
  const AnalysisReport rep = analyse("fig2", Command::check, CheckKind::constancy);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].verdict.holds());
  const Json& th = rep.json.at("theorems");
  REQUIRE(th.is_array());
  REQUIRE(th.size() == 1);
  CHECK(th[0].contains("id"));
  CHECK(th[0].at("outcome") == "holds");
  CHECK(rep.json.at("summary").at("holds") == 1);
}

TEST_CASE("not-applicable verdicts do not fail the run") {
  const AnalysisReport rep = analyse("fig2c", Command::check);
  CHECK(rep.ok);
  CHECK(rep.json.at("summary").at("not_applicable").get<int>() >= 1);
}

TEST_CASE("exit code follows the summary") {
  AnalysisReport rep;
  CHECK(rep.exit_code() == 0);
  rep.ok = false;
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("reports are deterministic") {
  for (const auto* name : {"fig1", "fig3", "fig5"}) {
    const std::string a = dump_json(analyse(name, Command::check).json);
    const std::string b = dump_json(analyse(name, Command::check).json);
    CHECK(a == b);
  }
  const AnalysisReport rep = analyse("fig2", Command::validate);
  CHECK(rep.json.at("input").at("sha256") == sha256_hex(read_text_file(fixture_path("fig2"))));
}

TEST_CASE("key order is stable") {
  const Json j = analyse("fig2", Command::validate).json;
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 3);
  CHECK(keys[0] == "tool");
  CHECK(keys[1] == "version");
}

TEST_CASE("csv headers") {
  const ResolvedDocument doc = fixture("fig2");
  const Spectrum s = eigenstates(doc.lattice);
  const CurrentField f = current_field(s.states[0].amplitudes, doc.lattice, doc.map("r"));
  const std::string c = current_csv(f);
  CHECK(c.substr(0, c.find('\n')) == "n,m,q_re,q_im");
  CHECK(static_cast<std::size_t>(std::count(c.begin(), c.end(), '\n')) == f.entries.size() + 1);
  const std::string k = site_csv(kirchhoff_residual(s.states[0], doc.lattice, doc.map("r")));
  CHECK(k.substr(0, k.find('\n')) == "site,sigma_re,sigma_im,beta_re,beta_im,residual,green,red");
  const std::string t = trajectory_csv({TrajectoryRow{0.5, sid(3), Complex(0.1, 0.2), Complex(0.3, 0), 0}});
  CHECK(t == "t,site,psi_re,psi_im,sigma_re,sigma_im,residual\n0.5,3,0.10000000000000001,0.20000000000000001,"
             "0.29999999999999999,0,0\n");
}

TEST_CASE("atomic writes") {
  const auto p = scratch("out.json");
  write_atomic(p, "first");
  write_atomic(p, "second");
  CHECK(read_text_file(p) == "second");
  std::size_t leftovers = 0;
  for (const auto& e : std::filesystem::directory_iterator(p.parent_path())) {
    if (e.path() != p) ++leftovers;
  }
  CHECK(leftovers == 0);
  std::filesystem::remove(p);
  CHECK_THROWS_AS(write_atomic(scratch("no/such/dir/x.json"), "x"), Error);
}

TEST_CASE("currents report") {
  const std::string text = read_text_file(fixture_path("fig2"));
  AnalysisOptions opt;
  opt.command = Command::currents;
  opt.state = 2;
  const AnalysisReport rep = run_analysis(document(text), text, opt);
  REQUIRE(rep.currents);
  REQUIRE(rep.kirchhoff);
  CHECK(rep.kirchhoff->ok());
  opt.state = 6;
  CHECK_THROWS_AS(run_analysis(document(text), text, opt), Error);
}

TEST_CASE("evolve report") {
  const std::string text = read_text_file(fixture_path("fig2"));
  AnalysisOptions opt;
  opt.command = Command::evolve;
  opt.t = 2.0;
  opt.steps = 4;
  const AnalysisReport rep = run_analysis(document(text), text, opt);
  CHECK(rep.ok);
  CHECK(rep.trajectory.size() == 5 * 6);
  CHECK(rep.json.at("evolve").at("max_continuity_residual").get<double>() <= 1e-9);
}

TEST_CASE("initial state files") {
  const ResolvedDocument doc = fixture("fig2");
  const Eigen::VectorXcd psi = parse_initial_state("# comment\n2 1\n3 0 1\n", doc.lattice);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-15);
  CHECK(std::abs(psi(1) - Complex(1 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK_THROWS_AS(parse_initial_state("9 1\n", doc.lattice), Error);
  CHECK_THROWS_AS(parse_initial_state("2 0\n", doc.lattice), Error);
  CHECK_THROWS_AS(parse_initial_state("2 one\n", doc.lattice), Error);
}
