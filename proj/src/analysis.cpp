// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "symlat/dynamics.hpp"
#include "symlat/error.hpp"
#include "symlat/spectral.hpp"
#include "symlat/symmetry.hpp"

#ifndef SYMLAT_VERSION
#define SYMLAT_VERSION "0.0.0"
#endif

namespace symlat {

namespace {

Json tolerances_json(const Tolerances& t) {
  Json j;
  j["symmetry"] = t.symmetry;
  j["eigen"] = t.eigen;
  j["degeneracy"] = t.degeneracy;
  j["hermitian"] = t.hermitian;
  j["commutator"] = t.commutator;
  j["kirchhoff"] = t.kirchhoff;
  j["amplitude"] = t.amplitude;
  j["attachment"] = t.attachment;
  j["norm"] = t.norm;
  return j;
}

// Maps a declaration runs against: its own binding, filtered by --map.
std::vector<SiteMapping> maps_for(const ResolvedDocument& doc, const std::optional<std::string>& binding,
                                  const std::optional<std::string>& filter) {
  if (binding) {
    if (filter && *filter != *binding) return {};
    return select_maps(doc, binding);
  }
  return select_maps(doc, filter);
}

const SiteMapping* single_map(const std::vector<SiteMapping>& maps, const char* verb) {
  if (maps.size() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(verb) + " needs one mapping; the document declares several, choose one with --map");
  }
  return &maps.front();
}

CheckResult result(std::string decl, const SiteMapping& m, TheoremVerdict v) {
  return CheckResult{std::move(decl), m.name(), std::move(v), {}};
}

Json check_json(const CheckResult& c) {
  Json j = to_json(c.verdict);
  Json out;
  out["id"] = j["id"];
  out["declaration"] = c.declaration;
  out["mapping"] = c.mapping;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "id") out[it.key()] = it.value();
  }
  if (!c.constants.empty()) {
    Json cs = Json::array();
    for (const auto& k : c.constants) cs.push_back(to_json(k));
    out["similarity_constants"] = std::move(cs);
  }
  return out;
}

Json summary_json(const std::vector<CheckResult>& checks) {
  std::size_t holds = 0, fails = 0, na = 0;
  for (const auto& c : checks) {
    switch (c.verdict.outcome) {
      case Outcome::holds: ++holds; break;
      case Outcome::fails: ++fails; break;
      case Outcome::not_applicable: ++na; break;
    }
  }
  Json j;
  j["verdicts"] = checks.size();
  j["holds"] = holds;
  j["fails"] = fails;
  j["not_applicable"] = na;
  j["ok"] = fails == 0;
  return j;
}

Json site_flags_json(const Lattice& lat, const SiteMapping& m, const Tolerances& tol) {
  Json sites = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const Complex beta = lat.site(m.image(i)).v - std::conj(lat.site(i).v);
    const bool green = std::abs(beta) > tol.symmetry;
    const bool red = !keeps_connectivity_at(lat, m, i);
    Json row;
    row["site"] = lat.id_at(i).value;
    row["image"] = lat.id_at(m.image(i)).value;
    row["beta"] = to_json(beta);
    row["keeps_connectivity"] = !red;
    Json flags = Json::array();
    if (!green && !red) flags.push_back("white");
    if (green) flags.push_back("green");
    if (red) flags.push_back("red");
    row["flags"] = std::move(flags);
    sites.push_back(std::move(row));
  }
  return sites;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::spectrum: return "spectrum";
    case Command::domains: return "domains";
    case Command::currents: return "currents";
    case Command::check: return "check";
    case Command::evolve: return "evolve";
  }
  return "unknown";
}

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::all: return "all";
    case CheckKind::constancy: return "constancy";
    case CheckKind::summed: return "summed";
    case CheckKind::open_chain: return "open-chain";
    case CheckKind::loop_reflect: return "loop-reflect";
    case CheckKind::loop_translate: return "loop-translate";
  }
  return "unknown";
}

std::optional<CheckKind> parse_check_kind(std::string_view text) {
  for (CheckKind k : {CheckKind::all, CheckKind::constancy, CheckKind::summed, CheckKind::open_chain,
                      CheckKind::loop_reflect, CheckKind::loop_translate}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::vector<SiteMapping> select_maps(const ResolvedDocument& doc, const std::optional<std::string>& name) {
  if (name) {
    for (const auto& m : doc.maps) {
      if (m.name() == *name) return {m};
    }
    if (*name == "identity") return {SiteMapping::identity(doc.lattice.size())};
    throw Error(ErrorCode::UnknownReference, "map '" + *name + "' is not declared");
  }
  if (doc.maps.empty()) return {SiteMapping::identity(doc.lattice.size())};
  return doc.maps;
}

std::vector<CheckResult> run_checks(const ResolvedDocument& doc, CheckKind kind,
                                    const std::optional<std::string>& map, const Tolerances& tol) {
  const Lattice& lat = doc.lattice;
  const LatticeSpecDocument& spec = doc.spec;
  const Spectrum spectrum = eigenstates(lat, tol);
  const auto wants = [&](CheckKind k) { return kind == CheckKind::all || kind == k; };
  std::vector<CheckResult> out;

  if (wants(CheckKind::constancy)) {
    if (!spec.domains.empty()) {
      for (const auto& d : spec.domains) {
        for (const auto& m : maps_for(doc, d.map, map)) {
          out.push_back(result(d.name, m, check_domainwise_constancy(lat, m, d.sites, spectrum, tol)));
        }
      }
    } else {
      // No declared domains: use every detected one with at least one edge.
      for (const auto& m : select_maps(doc, map)) {
        if (m.is_identity() && map != std::optional<std::string>("identity")) continue;
        for (const auto& d : detect_maximal_domains(lat, m, tol.symmetry)) {
          if (d.sites.size() < 2) continue;
          std::string label = "detected";
          for (SiteId id : d.sites) label += ":" + std::to_string(id.value);
          out.push_back(result(label, m, check_domainwise_constancy(lat, m, d.sites, spectrum, tol)));
        }
      }
    }
  }
  if (wants(CheckKind::summed)) {
    for (std::size_t i = 0; i < spec.regions.size(); ++i) {
      for (const auto& m : maps_for(doc, spec.regions[i].map, map)) {
        out.push_back(result(spec.regions[i].name, m, check_summed_constancy(lat, m, doc.regions[i], spectrum, tol)));
      }
    }
  }
  if (wants(CheckKind::open_chain)) {
    for (const auto& c : spec.chains) {
      for (const auto& m : maps_for(doc, c.map, map)) {
        OpenChainResult r = open_chain_similarity(lat, m, c.sites, spectrum, tol);
        CheckResult cr = result(c.name, m, std::move(r.verdict));
        cr.constants = std::move(r.constants);
        out.push_back(std::move(cr));
      }
    }
  }
  for (const auto& l : spec.loops) {
    const bool translation = l.shift.has_value();
    if (translation && !wants(CheckKind::loop_translate)) continue;
    if (!translation && !wants(CheckKind::loop_reflect)) continue;
    for (const auto& m : maps_for(doc, l.map, map)) {
      if (translation) {
        if (!l.b) {
          throw Error(ErrorCode::ValidationError, "translation loop '" + l.name + "' needs an exterior site",
                      l.where);
        }
        TranslationLoop t{l.sites, l.a, *l.b, *l.shift, std::nullopt};
        out.push_back(result(l.name, m, closed_loop_translation(lat, m, t, spectrum, tol)));
      } else {
        out.push_back(result(l.name, m, closed_loop_reflection(lat, m, l.sites, l.a, spectrum, tol)));
      }
    }
  }
  return out;
}

Eigen::VectorXcd parse_initial_state(std::string_view text, const Lattice& lat) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(lat.size()));
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::string_view, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
    }
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw Error(ErrorCode::SyntaxError, "expected '<site id> <re> [<im>]'", SourceLocation{line_no, 1});
    }
    std::uint32_t id = 0;
    double re = 0.0, im = 0.0;
    const auto parse = [&](auto& value, std::size_t k, const char* what) {
      const auto t = tokens[k].first;
      const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc{} || p != t.data() + t.size()) {
        throw Error(ErrorCode::SyntaxError, std::string("expected ") + what + ", found '" + std::string(t) + "'",
                    SourceLocation{line_no, tokens[k].second});
      }
    };
    parse(id, 0, "site id");
    parse(re, 1, "real part");
    if (tokens.size() == 3) parse(im, 2, "imaginary part");
    const auto idx = lat.find(SiteId{id});
    if (!idx) {
      throw Error(ErrorCode::UnknownReference, "site " + std::to_string(id) + " is not in the lattice",
                  SourceLocation{line_no, tokens[0].second});
    }
    psi(static_cast<Eigen::Index>(*idx)) = Complex(re, im);
  }
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw Error(ErrorCode::ValidationError, "initial state is zero");
  return psi / norm;
}

AnalysisReport run_analysis(const ResolvedDocument& doc, std::string_view input_text,
                            const AnalysisOptions& opt) {
  const Lattice& lat = doc.lattice;
  const Tolerances& tol = opt.tol;
  AnalysisReport rep;
  Json& j = rep.json;
  j["tool"] = "symlat";
  j["version"] = SYMLAT_VERSION;
  j["command"] = std::string(to_string(opt.command));
  Json input;
  input["lattice"] = lat.name();
  input["sha256"] = sha256_hex(input_text);
  input["sites"] = lat.size();
  input["hoppings"] = lat.hoppings().size();
  input["grid"] = lat.grid_mode();
  j["input"] = std::move(input);
  j["tolerances"] = tolerances_json(tol);

  switch (opt.command) {
    case Command::validate: {
      Json maps = Json::array();
      for (const auto& m : doc.maps) {
        Json row;
        row["name"] = m.name();
        row["provenance"] = describe(m.provenance());
        row["identity"] = m.is_identity();
        row["involution"] = m.is_involution();
        row["commutator_norm"] = commutator_norm(lat, m);
        maps.push_back(std::move(row));
      }
      j["maps"] = std::move(maps);
      Json regions = Json::array();
      for (const auto& r : doc.regions) {
        Json row;
        row["name"] = r.name;
        row["x_min"] = r.x_min();
        row["x_max"] = r.x_max();
        Json sites = Json::array();
        for (SiteId id : r.sites) sites.push_back(id.value);
        row["sites"] = std::move(sites);
        regions.push_back(std::move(row));
      }
      j["regions"] = std::move(regions);
      Json decl;
      decl["domains"] = doc.spec.domains.size();
      decl["chains"] = doc.spec.chains.size();
      decl["loops"] = doc.spec.loops.size();
      j["declarations"] = std::move(decl);
      j["hermitian"] = lat.max_imag_potential() <= tol.hermitian;
      j["real"] = lat.is_real(tol.hermitian);
      break;
    }
    case Command::spectrum: {
      Spectrum s = eigenstates(lat, tol);
      if (opt.map) s = symmetry_adapt(s, lat, select_maps(doc, opt.map).front(), tol);
      j["spectrum"] = to_json(s, lat);
      break;
    }
    case Command::domains: {
      Json all = Json::array();
      for (const auto& m : select_maps(doc, opt.map)) {
        Json row;
        row["mapping"] = m.name();
        Json found = Json::array();
        for (const auto& d : detect_maximal_domains(lat, m, tol.symmetry)) found.push_back(to_json(d));
        row["detected"] = std::move(found);
        Json declared = Json::array();
        for (const auto& d : doc.spec.domains) {
          if (d.map && *d.map != m.name()) continue;
          const DomainCheck dc = verify_domain(lat, m, d.sites, tol.symmetry);
          Json e;
          e["name"] = d.name;
          e["valid"] = dc.valid;
          e["connected"] = dc.connected;
          Json viol = Json::array();
          for (const auto& v : dc.violations) {
            Json p;
            p["m"] = v.m.value;
            p["n"] = v.n.value;
            p["entry"] = to_json(v.entry);
            p["mapped_entry"] = to_json(v.mapped_entry);
            viol.push_back(std::move(p));
          }
          e["violations"] = std::move(viol);
          declared.push_back(std::move(e));
        }
        row["declared"] = std::move(declared);
        row["sites"] = site_flags_json(lat, m, tol);
        all.push_back(std::move(row));
      }
      j["domains"] = std::move(all);
      break;
    }
    case Command::currents: {
      const auto maps = select_maps(doc, opt.map);
      const SiteMapping& m = *single_map(maps, "currents");
      const Spectrum s = eigenstates(lat, tol);
      if (opt.state >= s.states.size()) {
        throw Error(ErrorCode::InvalidArgument, "state " + std::to_string(opt.state) + " out of range (lattice has " +
                                                    std::to_string(s.states.size()) + " states)");
      }
      const EigenState& st = s.states[opt.state];
      rep.currents = current_field(st.amplitudes, lat, m);
      rep.kirchhoff = kirchhoff_residual(st, lat, m, tol);
      Json state;
      state["index"] = st.index;
      state["energy"] = st.energy;
      j["state"] = std::move(state);
      j["currents"] = to_json(*rep.currents);
      j["kirchhoff"] = to_json(*rep.kirchhoff);
      rep.ok = rep.kirchhoff->ok();
      break;
    }
    case Command::check: {
      rep.checks = run_checks(doc, opt.check, opt.map, tol);
      Json theorems = Json::array();
      for (const auto& c : rep.checks) theorems.push_back(check_json(c));
      j["check"] = std::string(to_string(opt.check));
      j["theorems"] = std::move(theorems);
      const Json summary = summary_json(rep.checks);
      rep.ok = summary["ok"].get<bool>();
      j["summary"] = summary;
      break;
    }
    case Command::evolve: {
      if (opt.steps < 1) throw Error(ErrorCode::InvalidArgument, "--steps must be at least 1");
      const auto maps = select_maps(doc, opt.map);
      const SiteMapping& m = *single_map(maps, "evolve");
      Eigen::VectorXcd psi0;
      if (opt.initial) {
        psi0 = *opt.initial;
      } else {
        psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(lat.size()));
        psi0(0) = 1.0;
      }
      const Propagator prop(lat, tol);
      const WaveState start{0.0, psi0};
      const double bound = tol.kirchhoff_for(lat.max_abs_entry());
      double max_residual = 0.0;
      double max_drift = 0.0;
      Json samples = Json::array();
      WaveState last = start;
      for (int k = 0; k <= opt.steps; ++k) {
        const double t = opt.t * k / opt.steps;
        const WaveState w = prop.evolve(start, t);
        const Eigen::VectorXcd sigma = nonlocal_density(w.psi, m);
        const Eigen::VectorXd r = continuity_residual(lat, m, w);
        const double drift = std::abs(w.psi.norm() - psi0.norm());
        max_residual = std::max(max_residual, r.maxCoeff());
        max_drift = std::max(max_drift, drift);
        for (std::size_t i = 0; i < lat.size(); ++i) {
          const auto ii = static_cast<Eigen::Index>(i);
          rep.trajectory.push_back({t, lat.id_at(i), w.psi(ii), sigma(ii), r(ii)});
        }
        Json row;
        row["t"] = t;
        row["norm"] = w.psi.norm();
        row["max_residual"] = r.maxCoeff();
        samples.push_back(std::move(row));
        last = w;
      }
      Json ev;
      ev["mapping"] = m.name();
      ev["t"] = opt.t;
      ev["steps"] = opt.steps;
      ev["max_continuity_residual"] = max_residual;
      ev["continuity_tolerance"] = bound;
      ev["max_norm_drift"] = max_drift;
      ev["norm_tolerance"] = tol.norm;
      ev["samples"] = std::move(samples);
      Json fin = Json::array();
      for (Eigen::Index i = 0; i < last.psi.size(); ++i) fin.push_back(to_json(last.psi(i)));
      ev["final_state"] = std::move(fin);
      rep.ok = max_residual <= bound && max_drift <= tol.norm;
      ev["ok"] = rep.ok;
      j["evolve"] = std::move(ev);
      break;
    }
  }
  return rep;
}

}  // namespace symlat
