// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/cli.hpp"

#include <filesystem>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "symlat/acceptance.hpp"
#include "symlat/analysis.hpp"
#include "symlat/document.hpp"
#include "symlat/error.hpp"
#include "symlat/lat_format.hpp"
#include "symlat/report.hpp"

#ifndef SYMLAT_VERSION
#define SYMLAT_VERSION "0.0.0"
#endif
#ifndef SYMLAT_FIXTURE_DIR
#define SYMLAT_FIXTURE_DIR "fixtures"
#endif

namespace symlat {

namespace {

struct Args {
  std::string file;
  std::string out;
  std::string format = "json";
  std::string map;
  std::string kind = "all";
  std::string initial;
  std::size_t state = 0;
  double t = 1.0;
  int steps = 10;
  int criterion = 0;
  std::string fixtures = SYMLAT_FIXTURE_DIR;
  std::uint64_t seed = AcceptanceOptions{}.seed;
};

void add_output(CLI::App* sub, Args& a, bool csv) {
  sub->add_option("file", a.file, "lattice description (.lat)")->required();
  sub->add_option("-o,--out", a.out, "write the report here instead of stdout");
  auto* f = sub->add_option("--format", a.format, csv ? "json or csv" : "json");
  f->check(CLI::IsMember(csv ? std::vector<std::string>{"json", "csv"} : std::vector<std::string>{"json"}));
}

void add_map(CLI::App* sub, Args& a) { sub->add_option("--map", a.map, "mapping name (\"identity\" always exists)"); }

std::filesystem::path sidecar(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension();
  p += ".sites.csv";
  return p;
}

int run_acceptance(const Args& a, std::ostream& out) {
  AcceptanceOptions opt;
  opt.fixtures = a.fixtures;
  opt.seed = a.seed;
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (a.criterion != 0 && a.criterion != id) continue;
    const CriterionResult r = run_criterion(id, opt);
    out << format_result(r) << '\n' << std::flush;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

int run_verb(Command cmd, const Args& a, std::ostream& out) {
  const std::string text = read_text_file(a.file);
  const ResolvedDocument doc = resolve_document(parse_lattice_spec(text));

  AnalysisOptions opt;
  opt.command = cmd;
  if (!a.map.empty()) opt.map = a.map;
  opt.state = a.state;
  opt.t = a.t;
  opt.steps = a.steps;
  opt.tol = Tolerances::from_environment();
  if (cmd == Command::check) {
    const auto kind = parse_check_kind(a.kind);
    if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown check '" + a.kind + "'");
    opt.check = *kind;
  }
  if (!a.initial.empty()) opt.initial = parse_initial_state(read_text_file(a.initial), doc.lattice);

  const AnalysisReport rep = run_analysis(doc, text, opt);

  // Render everything before touching the filesystem.
  std::string main_text;
  std::string sites_text;
  if (a.format == "csv") {
    if (cmd == Command::currents) {
      main_text = current_csv(*rep.currents);
      sites_text = site_csv(*rep.kirchhoff);
    } else if (cmd == Command::evolve) {
      main_text = trajectory_csv(rep.trajectory);
    } else {
      throw Error(ErrorCode::InvalidArgument, "csv output is only available for currents and evolve");
    }
  } else {
    main_text = dump_json(rep.json);
  }

  if (a.out.empty()) {
    out << main_text;
  } else {
    if (!sites_text.empty()) write_atomic(sidecar(a.out), sites_text);
    write_atomic(a.out, main_text);
  }
  return rep.exit_code();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local symmetries, non-local currents and theorem checks on tight-binding lattices", "symlat"};
  app.set_version_flag("--version", SYMLAT_VERSION);
  app.require_subcommand(1);

  Args a;
  auto* validate = app.add_subcommand("validate", "parse and validate a lattice description");
  add_output(validate, a, false);
  auto* spectrum = app.add_subcommand("spectrum", "eigenstates, symmetry-adapted with --map");
  add_output(spectrum, a, false);
  add_map(spectrum, a);
  auto* domains = app.add_subcommand("domains", "domains of local symmetry and site flags");
  add_output(domains, a, false);
  add_map(domains, a);
  auto* currents = app.add_subcommand("currents", "non-local current field and Kirchhoff residuals of one eigenstate");
  add_output(currents, a, true);
  add_map(currents, a);
  currents->add_option("--state", a.state, "eigenstate index, ascending energy");
  auto* check = app.add_subcommand("check", "run theorem checkers on the declarations");
  check->add_option("kind", a.kind, "all, constancy, summed, open-chain, loop-reflect or loop-translate")
      ->required()
      ->check(CLI::IsMember({"all", "constancy", "summed", "open-chain", "loop-reflect", "loop-translate"}));
  add_output(check, a, false);
  add_map(check, a);
  auto* evolve = app.add_subcommand("evolve", "time evolution and the continuity equation");
  add_output(evolve, a, true);
  add_map(evolve, a);
  evolve->add_option("--t", a.t, "final time");
  evolve->add_option("--steps", a.steps, "number of intervals")->check(CLI::PositiveNumber);
  evolve->add_option("--initial", a.initial, "initial state, lines of '<site> <re> [<im>]'");
  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");
  acceptance->add_option("--criterion", a.criterion, "run only this criterion")->check(CLI::Range(1, kCriterionCount));
  acceptance->add_option("--fixtures", a.fixtures, "fixture directory");
  acceptance->add_option("--seed", a.seed, "seed for the randomized criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (acceptance->parsed()) return run_acceptance(a, out);
    Command cmd = Command::validate;
    if (spectrum->parsed()) cmd = Command::spectrum;
    if (domains->parsed()) cmd = Command::domains;
    if (currents->parsed()) cmd = Command::currents;
    if (check->parsed()) cmd = Command::check;
    if (evolve->parsed()) cmd = Command::evolve;
    return run_verb(cmd, a, out);
  } catch (const Error& e) {
    err << "symlat: " << a.file << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "symlat: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace symlat
