// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "symlat/error.hpp"

namespace symlat {

namespace {

std::string number17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write_json(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays ([re, im] pairs and the like) stay on one line.
      const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const Json& e) {
                          return e.is_number() || e.is_null();
                        });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write_json(j[i], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_json(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float:
      out += number17(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string csv_number(double v) { return number17(v); }

Json ids(const std::vector<SiteId>& list) {
  Json a = Json::array();
  for (SiteId id : list) a.push_back(id.value);
  return a;
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  write_json(j, out, 0);
  out += "\n";
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw Error(ErrorCode::IoError, "short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw Error(ErrorCode::IoError, "cannot move output into '" + path.string() + "': " + ec.message());
  }
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const EigenState& s, const Lattice& lat) {
  Json j;
  j["index"] = s.index;
  j["energy"] = s.energy;
  j["gauge"] = s.gauge == Gauge::real ? "real" : "complex";
  if (s.symmetry_expectation) j["symmetry_expectation"] = to_json(*s.symmetry_expectation);
  Json amps = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    amps.push_back(to_json(s.amplitudes(static_cast<Eigen::Index>(i))));
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

Json to_json(const Spectrum& s, const Lattice& lat) {
  Json j;
  Json sites = Json::array();
  for (const auto& site : lat.sites()) sites.push_back(site.id.value);
  j["sites"] = std::move(sites);
  Json energies = Json::array();
  for (const auto& st : s.states) energies.push_back(st.energy);
  j["energies"] = std::move(energies);
  j["degeneracy_groups"] = s.degeneracy_groups;
  if (!s.adapted_to.empty() || !s.commutes) {
    j["adapted_to"] = s.adapted_to;
    j["commutes"] = s.commutes;
  }
  Json states = Json::array();
  for (const auto& st : s.states) states.push_back(to_json(st, lat));
  j["states"] = std::move(states);
  return j;
}

Json to_json(const SymmetryDomain& d) {
  Json j;
  j["mapping"] = d.mapping_name;
  j["sites"] = ids(d.sites);
  j["connected"] = d.connected;
  return j;
}

Json to_json(const CurrentField& f) {
  Json j;
  j["mapping"] = f.mapping_name;
  Json entries = Json::array();
  for (const auto& e : f.entries) {
    Json row;
    row["n"] = e.n.value;
    row["m"] = e.m.value;
    row["q"] = to_json(e.q);
    if (e.j) row["j"] = to_json(*e.j);
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const KirchhoffReport& k) {
  Json j;
  j["max_residual"] = k.max_residual;
  j["tolerance"] = k.tolerance;
  j["ok"] = k.ok();
  Json sites = Json::array();
  for (const auto& s : k.sites) {
    Json row;
    row["site"] = s.id.value;
    row["residual"] = s.residual;
    row["outflow"] = to_json(s.outflow);
    row["q"] = to_json(s.source.q);
    row["beta"] = to_json(s.source.beta);
    row["sigma"] = to_json(s.source.sigma);
    row["source"] = to_json(s.source.product);
    Json flags = Json::array();
    if (s.white()) flags.push_back("white");
    if (s.green) flags.push_back("green");
    if (s.red) flags.push_back("red");
    row["flags"] = std::move(flags);
    sites.push_back(std::move(row));
  }
  j["sites"] = std::move(sites);
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["id"] = v.theorem;
  j["outcome"] = std::string(to_string(v.outcome));
  j["holds"] = v.holds();
  j["hypotheses_satisfied"] = v.hypotheses_satisfied();
  Json hyps = Json::array();
  for (const auto& h : v.hypotheses) {
    Json row;
    row["name"] = h.name;
    row["satisfied"] = h.satisfied;
    if (!h.detail.empty()) row["detail"] = h.detail;
    hyps.push_back(std::move(row));
  }
  j["hypotheses"] = std::move(hyps);
  j["max_residual"] = v.max_residual;
  j["tolerance"] = v.tolerance;
  if (!v.notes.empty()) j["notes"] = v.notes;
  Json wits = Json::array();
  for (const auto& w : v.witnesses) {
    Json row;
    row["kind"] = w.kind;
    if (w.state) row["state"] = *w.state;
    if (w.index) row["index"] = *w.index;
    if (!w.sites.empty()) row["sites"] = ids(w.sites);
    if (!w.values.empty()) {
      Json vals = Json::array();
      for (Complex z : w.values) vals.push_back(to_json(z));
      row["values"] = std::move(vals);
    }
    row["residual"] = w.residual;
    row["ok"] = w.ok;
    if (!w.gating) row["informational"] = true;
    wits.push_back(std::move(row));
  }
  j["witnesses"] = std::move(wits);
  return j;
}

Json to_json(const SimilarityConstant& c) {
  Json j;
  j["state"] = c.state;
  j["defined"] = c.defined;
  if (c.defined) j["c"] = to_json(c.c);
  j["spread"] = c.spread;
  j["parallel_residual"] = c.parallel_residual;
  j["bridged"] = c.bridged;
  return j;
}

std::string current_csv(const CurrentField& f) {
  std::string out = "n,m,q_re,q_im\n";
  for (const auto& e : f.entries) {
    out += std::to_string(e.n.value) + "," + std::to_string(e.m.value) + "," + csv_number(e.q.real()) + "," +
           csv_number(e.q.imag()) + "\n";
  }
  return out;
}

std::string site_csv(const KirchhoffReport& k) {
  std::string out = "site,sigma_re,sigma_im,beta_re,beta_im,residual,green,red\n";
  for (const auto& s : k.sites) {
    out += std::to_string(s.id.value) + "," + csv_number(s.source.sigma.real()) + "," +
           csv_number(s.source.sigma.imag()) + "," + csv_number(s.source.beta.real()) + "," +
           csv_number(s.source.beta.imag()) + "," + csv_number(s.residual) + "," + (s.green ? "1" : "0") + "," +
           (s.red ? "1" : "0") + "\n";
  }
  return out;
}

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows) {
  std::string out = "t,site,psi_re,psi_im,sigma_re,sigma_im,residual\n";
  for (const auto& r : rows) {
    out += csv_number(r.t) + "," + std::to_string(r.site.value) + "," + csv_number(r.psi.real()) + "," +
           csv_number(r.psi.imag()) + "," + csv_number(r.sigma.real()) + "," + csv_number(r.sigma.imag()) + "," +
           csv_number(r.residual) + "\n";
  }
  return out;
}

}  // namespace symlat
