// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "symlat/analysis.hpp"
#include "symlat/cli.hpp"
#include "symlat/currents.hpp"
#include "symlat/document.hpp"
#include "symlat/dynamics.hpp"
#include "symlat/error.hpp"
#include "symlat/lat_format.hpp"
#include "symlat/spectral.hpp"
#include "symlat/symmetry.hpp"
#include "symlat/theorems.hpp"

namespace symlat {

namespace {

using Rng = std::mt19937_64;

// Thresholds of the criteria, independent of SYMLAT_TOLERANCE_SCALE.
constexpr double kKirchhoff = 1e-9;
constexpr double kContinuity = 1e-9;
constexpr double kFiniteDifference = 1e-6;
constexpr double kSameFormula = 1e-15;
constexpr double kAntisymmetry = 1e-12;
constexpr double kDefect = 1e-12;
constexpr double kCurrentEquality = 1e-10;
constexpr double kAmplitude = 1e-9;
constexpr double kCommutator = 1e-10;
constexpr double kNonCommuting = 1e-6;
constexpr double kAttachment = 1e-8;
constexpr double kEnergy = 1e-10;
constexpr double kOrthonormal = 1e-10;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

struct Tally {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << why;
    }
  }
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Connected random lattice: a random tree plus extra edges. Potentials are
// real, hoppings complex unless `real` is set.
Lattice random_lattice(Rng& rng, std::size_t n, bool real) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < n; ++i) {
    sites.push_back(Site{SiteId{static_cast<std::uint32_t>(i + 1)}, static_cast<int>(i), 0,
                         Complex(uniform(rng, -2, 2), 0.0)});
  }
  const auto amplitude = [&] {
    return real ? Complex(uniform(rng, -2, 2), 0.0)
                : Complex(uniform(rng, -2, 2), uniform(rng, -2, 2));
  };
  std::vector<Hopping> hops;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    hops.push_back(Hopping{sites[parent].id, sites[i].id, amplitude()});
    used[parent][i] = used[i][parent] = true;
  }
  const std::size_t extra = n / 3;
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (a == b || used[a][b]) continue;
    hops.push_back(Hopping{sites[a].id, sites[b].id, amplitude()});
    used[a][b] = used[b][a] = true;
  }
  return Lattice::build("random", std::move(sites), std::move(hops), false);
}

SiteMapping random_mapping(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::shuffle(images.begin(), images.end(), rng);
  return SiteMapping("random", ExplicitPermutation{}, std::move(images));
}

Eigen::VectorXcd random_state(Rng& rng, std::size_t n) {
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(n));
  for (auto& z : psi) z = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return psi / psi.norm();
}

std::filesystem::path fixture(const AcceptanceOptions& opt, const std::string& name) {
  return opt.fixtures / (name + ".lat");
}

Complex amp(const EigenState& s, const Lattice& lat, SiteId id) {
  return s.amplitudes(static_cast<Eigen::Index>(lat.index_of(id)));
}

void kirchhoff_identity(const AcceptanceOptions& opt, Tally& o) {
  Rng rng(opt.seed);
  double worst = 0.0;
  std::size_t states = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 32)(rng);
    const Lattice lat = random_lattice(rng, n, trial % 2 == 0);
    const SiteMapping m = random_mapping(rng, n);
    for (const auto& s : eigenstates(lat).states) {
      const double r = kirchhoff_residual(s, lat, m).max_residual;
      worst = std::max(worst, r);
      ++states;
      o.require(r <= kKirchhoff, "lattice " + std::to_string(trial) + " state " + std::to_string(s.index) +
                                     ": residual " + sci(r));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds <= 60.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) o.detail << "max residual " << sci(worst) << " over 200 lattices, " << states << " states";
}

void continuity_identity(const AcceptanceOptions& opt, Tally& o) {
  Rng rng(opt.seed + 2);
  double worst = 0.0;
  double worst_fd = 0.0;
  const double step = 1e-5;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 24)(rng);
    const Lattice lat = random_lattice(rng, n, trial % 2 == 0);
    const SiteMapping m = random_mapping(rng, n);
    const Propagator prop(lat);
    const WaveState start{0.0, random_state(rng, n)};
    for (int k = 0; k < 10; ++k) {
      const double t = uniform(rng, 0.0, 20.0);
      const WaveState w = prop.evolve(start, t);
      const double r = continuity_residual(lat, m, w).maxCoeff();
      const Eigen::VectorXcd plus = nonlocal_density(prop.evolve(start, t + step).psi, m);
      const Eigen::VectorXcd minus = nonlocal_density(prop.evolve(start, t - step).psi, m);
      const Eigen::VectorXcd fd = (plus - minus) / (2 * step);
      const double d = (fd - sigma_time_derivative(lat, m, w.psi)).cwiseAbs().maxCoeff();
      worst = std::max(worst, r);
      worst_fd = std::max(worst_fd, d);
      o.require(r <= kContinuity, "lattice " + std::to_string(trial) + ": continuity residual " + sci(r));
      o.require(d <= kFiniteDifference, "lattice " + std::to_string(trial) + ": finite difference off by " + sci(d));
    }
  }
  if (o.pass) o.detail << "max residual " << sci(worst) << ", finite difference " << sci(worst_fd);
}

std::vector<std::filesystem::path> all_fixtures(const AcceptanceOptions& opt) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(opt.fixtures)) {
    if (e.path().extension() == ".lat") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw Error(ErrorCode::IoError, "no fixtures in " + opt.fixtures.string());
  return out;
}

void identity_reduction(const AcceptanceOptions& opt, Tally& o) {
  Rng rng(opt.seed + 3);
  double worst_same = 0.0;
  double worst_anti = 0.0;
  const auto files = all_fixtures(opt);
  for (const auto& path : files) {
    const ResolvedDocument doc = load_document(path);
    const Lattice& lat = doc.lattice;
    const SiteMapping id = SiteMapping::identity(lat.size());
    std::vector<Eigen::VectorXcd> states;
    for (const auto& s : eigenstates(lat).states) states.push_back(s.amplitudes);
    states.push_back(random_state(rng, lat.size()));
    for (const auto& psi : states) {
      for (std::size_t n = 0; n < lat.size(); ++n) {
        for (std::size_t m : lat.neighbor_indices(n)) {
          const Complex q = nonlocal_current_at(psi, lat, id, n, m);
          const Complex j = probability_current_at(psi, lat, n, m);
          const Complex back = probability_current_at(psi, lat, m, n);
          worst_same = std::max(worst_same, std::abs(q - j));
          worst_anti = std::max(worst_anti, std::abs(j + back));
        }
      }
    }
    o.require(worst_same <= kSameFormula, path.filename().string() + ": |q - j| = " + sci(worst_same));
    o.require(worst_anti <= kAntisymmetry, path.filename().string() + ": |j_nm + j_mn| = " + sci(worst_anti));
  }
  if (o.pass) {
    o.detail << files.size() << " fixtures, max |q - j| " << sci(worst_same) << ", max |j_nm + j_mn| "
             << sci(worst_anti);
  }
}

void direction_inversion(const AcceptanceOptions& opt, Tally& o) {
  Rng rng(opt.seed + 4);
  double worst = 0.0;
  double printed = 0.0;
  std::size_t pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
    const Lattice lat = random_lattice(rng, n, trial % 2 == 0);
    const SiteMapping m = random_mapping(rng, n);
    std::vector<Eigen::VectorXcd> states{random_state(rng, n)};
    states.push_back(eigenstates(lat).states.front().amplitudes);
    for (const auto& psi : states) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a == b || !in_current_support(lat, m, a, b)) continue;
          const std::size_t a2 = m.image(a);
          const std::size_t b2 = m.image(b);
          const Complex delta = lat.entry(a, b) - lat.entry(a2, b2);
          const Complex sum = nonlocal_current_at(psi, lat, m, a, b) + nonlocal_current_at(psi, lat, m, b, a);
          const Complex derived = Complex(0, 1) * (delta * std::conj(psi(a)) * psi(b2) +
                                                  std::conj(delta) * std::conj(psi(b)) * psi(a2));
          const Complex as_printed = Complex(0, -1) * (delta * std::conj(psi(b)) * psi(a2) +
                                                      std::conj(delta) * psi(b2) * std::conj(psi(a)));
          worst = std::max(worst, std::abs(sum - derived));
          printed = std::max(printed, std::abs(sum - as_printed));
          ++pairs;
        }
      }
    }
  }
  o.require(worst <= kDefect, "termwise residual " + sci(worst));
  if (o.pass) {
    o.detail << "max residual " << sci(worst) << " over " << pairs << " ordered pairs; the opposite-sign form"
             << " deviates by up to " << sci(printed);
  }
}

void domainwise_constancy(const AcceptanceOptions& opt, Tally& o) {
  const ResolvedDocument doc = load_document(fixture(opt, "fig2"));
  const Lattice& lat = doc.lattice;
  const SiteMapping& r = doc.map("r");
  std::vector<SiteId> domain;
  for (const auto& d : detect_maximal_domains(lat, r, 1e-12)) {
    if (d.sites.size() > domain.size()) domain = d.sites;
  }
  o.require(domain.size() >= 3, "no domain with an interior found");
  if (!o.pass) return;
  const Spectrum spectrum = eigenstates(lat);
  double spread = 0.0;
  for (const auto& s : spectrum.states) {
    std::vector<Complex> q;
    for (std::size_t k = 0; k + 1 < domain.size(); ++k) {
      q.push_back(nonlocal_current(s.amplitudes, lat, r, domain[k], domain[k + 1]));
    }
    for (const Complex a : q) {
      for (const Complex b : q) spread = std::max(spread, std::abs(a - b));
    }
  }
  o.require(spread <= kCurrentEquality, "currents differ by " + sci(spread));
  const TheoremVerdict v = check_domainwise_constancy(lat, r, domain, spectrum);
  o.require(v.outcome == Outcome::holds, "checker: " + std::string(to_string(v.outcome)));

  const ResolvedDocument stub = load_document(fixture(opt, "fig2c"));
  const TheoremVerdict w = check_domainwise_constancy(stub.lattice, stub.map("r"), domain, eigenstates(stub.lattice));
  o.require(w.outcome == Outcome::not_applicable,
            "with a 3-connected site the checker returned " + std::string(to_string(w.outcome)));
  if (o.pass) {
    o.detail << "domain of " << domain.size() << " sites, " << spectrum.states.size()
             << " states, max spread " << sci(spread) << "; stub variant not applicable";
  }
}

void summed_constancy(const AcceptanceOptions& opt, Tally& o) {
  const ResolvedDocument doc = load_document(fixture(opt, "fig3"));
  const Lattice& lat = doc.lattice;
  const SiteMapping& r = doc.map("r");
  const Region& region = doc.regions.front();
  const Spectrum spectrum = eigenstates(lat);
  double worst_in = 0.0;
  double worst_ex = 0.0;
  for (const auto& s : spectrum.states) {
    for (int x = region.x_min() + 1; x < region.x_max(); ++x) {
      for (RowRange rows : {RowRange::inclusive, RowRange::exclusive}) {
        const Complex left = summed_current(s.amplitudes, lat, r, region, x - 1, +1, rows);
        const Complex right = summed_current(s.amplitudes, lat, r, region, x, +1, rows);
        double& worst = rows == RowRange::inclusive ? worst_in : worst_ex;
        worst = std::max(worst, std::abs(left - right));
      }
    }
  }
  o.require(worst_in <= kCurrentEquality, "inclusive sums differ by " + sci(worst_in));
  o.require(worst_ex <= kCurrentEquality, "exclusive sums differ by " + sci(worst_ex));
  const TheoremVerdict v = check_summed_constancy(lat, r, region, spectrum);
  o.require(v.outcome == Outcome::holds, "checker: " + std::string(to_string(v.outcome)));

  // Break the reflection at one interior site of the outer column.
  LatticeSpecDocument spec = doc.spec;
  const auto target = lat.index_at(region.x_min(), (region.columns.front().y_min + region.columns.front().y_max) / 2);
  o.require(target.has_value(), "no site to perturb");
  if (!o.pass) return;
  spec.sites[*target].v += 1e-3;
  const ResolvedDocument bent = resolve_document(std::move(spec));
  const TheoremVerdict w =
      check_summed_constancy(bent.lattice, bent.map("r"), bent.regions.front(), eigenstates(bent.lattice));
  o.require(w.outcome == Outcome::not_applicable,
            "perturbed lattice gave " + std::string(to_string(w.outcome)));
  if (o.pass) {
    o.detail << spectrum.states.size() << " states, max |dQ| inclusive " << sci(worst_in) << ", exclusive "
             << sci(worst_ex) << "; perturbed: not applicable";
  }
}

void open_chain(const AcceptanceOptions& opt, Tally& o) {
  const ResolvedDocument doc = load_document(fixture(opt, "fig4"));
  const Lattice& lat = doc.lattice;
  const Spectrum spectrum = eigenstates(lat);
  std::size_t tested = 0;
  std::size_t bridged = 0;
  double worst = 0.0;
  for (const auto& decl : doc.spec.chains) {
    const SiteMapping& m = doc.map(decl.map.value_or("t"));
    for (const auto& s : spectrum.states) {
      // Ratio conj(a_n) / a_n' over chain sites whose image amplitude is nonzero.
      std::vector<Complex> ratios;
      bool zero_inside = false;
      for (std::size_t k = 0; k < decl.sites.size(); ++k) {
        const Complex a = amp(s, lat, decl.sites[k]);
        const Complex b = amp(s, lat, apply(lat, m, decl.sites[k], 1));
        if (std::abs(b) > kAttachment) {
          ratios.push_back(std::conj(a) / b);
        } else if (k > 0 && k + 1 < decl.sites.size()) {
          zero_inside = true;
        }
      }
      if (ratios.size() < 2) continue;
      double spread = 0.0;
      for (const Complex c : ratios) spread = std::max(spread, std::abs(c - ratios.front()));
      worst = std::max(worst, spread);
      ++tested;
      if (zero_inside) ++bridged;
      o.require(spread <= kAmplitude, decl.name + " state " + std::to_string(s.index) + ": spread " + sci(spread));
    }
    const OpenChainResult r = open_chain_similarity(lat, m, decl.sites, spectrum);
    o.require(r.verdict.outcome == Outcome::holds,
              "checker on " + decl.name + ": " + std::string(to_string(r.verdict.outcome)));
    const bool branch = std::any_of(r.constants.begin(), r.constants.end(), [](const SimilarityConstant& c) {
      return c.bridged && c.defined && c.spread <= kAmplitude;
    });
    o.require(branch, "no state crossed an isolated zero on " + decl.name);
  }
  o.require(bridged > 0, "no state with an isolated zero on a tail");
  if (o.pass) {
    o.detail << tested << " state/tail pairs, max spread " << sci(worst) << ", " << bridged
             << " bridged across an isolated zero";
  }
}

// 5-site loop 0..4 reflected through site 0 with a random exterior at 0.
std::pair<Lattice, SiteMapping> loop_with_exterior(Rng& rng) {
  std::vector<Site> sites;
  const double v1 = uniform(rng, -1, 1);
  const double v2 = uniform(rng, -1, 1);
  const double pots[] = {uniform(rng, -1, 1), v1, v2, v2, v1};
  const int xs[] = {0, 1, 1, -1, -1};
  const int ys[] = {0, 1, 2, 2, 1};
  for (std::uint32_t i = 0; i < 5; ++i) sites.push_back(Site{SiteId{i}, xs[i], ys[i], Complex(pots[i], 0)});
  const double h1 = uniform(rng, 0.5, 1.5);
  const double h2 = uniform(rng, 0.5, 1.5);
  std::vector<Hopping> hops{{SiteId{0}, SiteId{1}, h1}, {SiteId{1}, SiteId{2}, h2},
                            {SiteId{2}, SiteId{3}, uniform(rng, 0.5, 1.5)},
                            {SiteId{3}, SiteId{4}, h2}, {SiteId{4}, SiteId{0}, h1}};
  const std::uint32_t outside = 3;
  for (std::uint32_t k = 0; k < outside; ++k) {
    sites.push_back(Site{SiteId{5 + k}, 0, -1 - static_cast<int>(k), Complex(uniform(rng, -2, 2), 0)});
    const std::uint32_t parent = k == 0 ? 0 : 5 + std::uniform_int_distribution<std::uint32_t>(0, k - 1)(rng);
    hops.push_back({SiteId{parent}, SiteId{5 + k}, Complex(uniform(rng, -2, 2), uniform(rng, -1, 1))});
  }
  Lattice lat = Lattice::build("loop", std::move(sites), std::move(hops), false);
  std::vector<std::size_t> images{0, 4, 3, 2, 1, 5, 6, 7};
  SiteMapping m("p", ExplicitPermutation{}, std::move(images));
  return {std::move(lat), std::move(m)};
}

void reflection_loop(const AcceptanceOptions& opt, Tally& o) {
  Rng rng(opt.seed + 8);
  const std::vector<SiteId> loop{SiteId{0}, SiteId{1}, SiteId{2}, SiteId{3}, SiteId{4}};
  double worst_comm = 0.0;
  double worst_parity = 0.0;
  std::size_t states = 0;
  for (int trial = 0; trial < 3; ++trial) {
    auto [lat, m] = loop_with_exterior(rng);
    const double comm = commutator_norm(lat, m);
    worst_comm = std::max(worst_comm, comm);
    o.require(comm <= kCommutator, "exterior " + std::to_string(trial) + ": commutator " + sci(comm));
    const Spectrum raw = eigenstates(lat);
    const Spectrum adapted = symmetry_adapt(raw, lat, m);
    for (const auto& s : adapted.states) {
      double best = 1e300;
      for (double sign : {1.0, -1.0}) {
        double r = 0.0;
        for (SiteId n : loop) r = std::max(r, std::abs(amp(s, lat, apply(lat, m, n, 1)) - sign * amp(s, lat, n)));
        best = std::min(best, r);
      }
      worst_parity = std::max(worst_parity, best);
      ++states;
      o.require(best <= kAmplitude, "exterior " + std::to_string(trial) + " state " + std::to_string(s.index) +
                                        ": no definite parity (" + sci(best) + ")");
    }
    const TheoremVerdict v = closed_loop_reflection(lat, m, loop, SiteId{0}, raw);
    o.require(v.outcome == Outcome::holds,
              "checker on exterior " + std::to_string(trial) + ": " + std::string(to_string(v.outcome)));
  }
  if (o.pass) {
    o.detail << "3 exteriors, max commutator " << sci(worst_comm) << ", " << states << " states, max parity residual "
             << sci(worst_parity);
  }
}

void translation_loop(const AcceptanceOptions& opt, Tally& o) {
  const ResolvedDocument doc = load_document(fixture(opt, "fig5"));
  const Lattice& lat = doc.lattice;
  const LoopDecl& decl = doc.spec.loops.front();
  const SiteMapping& m = doc.map(decl.map.value_or("t"));
  const Spectrum spectrum = eigenstates(lat);
  const SiteId a = decl.a;
  const SiteId b = decl.b.value_or(SiteId{});
  double worst = 0.0;
  double worst_pair = 0.0;
  std::size_t constrained = 0;
  for (const auto& s : spectrum.states) {
    const Complex ab = amp(s, lat, b);
    const Complex pair = std::conj(amp(s, lat, apply(lat, m, a, 1))) * ab - amp(s, lat, apply(lat, m, a, -1)) * std::conj(ab);
    worst_pair = std::max(worst_pair, std::abs(pair));
    if (std::abs(ab) <= kAttachment) continue;
    ++constrained;
    for (int k = 1; k <= 2; ++k) {
      const double d = std::abs(amp(s, lat, apply(lat, m, a, -k)) - amp(s, lat, apply(lat, m, a, k)));
      worst = std::max(worst, d);
      o.require(d <= kAmplitude, "state " + std::to_string(s.index) + " k=" + std::to_string(k) + ": " + sci(d));
    }
  }
  o.require(worst_pair <= kAmplitude, "two-site identity off by " + sci(worst_pair));
  const double comm = commutator_norm(lat, m);
  o.require(comm > kNonCommuting, "commutator only " + sci(comm));
  const TheoremVerdict v =
      closed_loop_translation(lat, m, TranslationLoop{decl.sites, a, b, *decl.shift, 2}, spectrum);
  o.require(v.outcome == Outcome::holds, "checker: " + std::string(to_string(v.outcome)));
  if (o.pass) {
    o.detail << constrained << " of " << spectrum.states.size() << " states constrained, max |dA| " << sci(worst)
             << ", two-site identity " << sci(worst_pair) << ", commutator " << sci(comm);
  }
}

double max_energy_error(const Spectrum& s, const std::vector<double>& expected) {
  if (s.states.size() != expected.size()) return 1e300;
  double e = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) e = std::max(e, std::abs(s.states[i].energy - expected[i]));
  return e;
}

void spectral_oracle(const AcceptanceOptions& opt, Tally& o) {
  const double r2 = std::sqrt(2.0);
  const double chain = max_energy_error(eigenstates(load_document(fixture(opt, "chain3")).lattice), {-r2, 0.0, r2});
  const double ring = max_energy_error(eigenstates(load_document(fixture(opt, "ring4")).lattice), {-2, 0, 0, 2});
  o.require(chain <= kEnergy, "3-chain energies off by " + sci(chain));
  o.require(ring <= kEnergy, "4-ring energies off by " + sci(ring));

  Rng rng(opt.seed + 10);
  double worst = 0.0;
  for (int n : {1, 2, 3, 5, 8, 13, 21, 32, 48, 64}) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i) {
      a(i, i) = uniform(rng, -2, 2);
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = Complex(uniform(rng, -2, 2), uniform(rng, -2, 2));
        a(j, i) = std::conj(a(i, j));
      }
    }
    const auto c = jacobi_eigensystem(a);
    const double oc = (c.vectors.adjoint() * c.vectors - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    const auto r = jacobi_eigensystem(Eigen::MatrixXd(a.real()));
    const double orr = (r.vectors.transpose() * r.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    worst = std::max({worst, oc, orr});
    o.require(oc <= kOrthonormal && orr <= kOrthonormal,
              "orthonormality at n=" + std::to_string(n) + ": " + sci(std::max(oc, orr)));
  }
  if (o.pass) {
    o.detail << "3-chain " << sci(chain) << ", 4-ring " << sci(ring) << ", orthonormality up to 64 sites "
             << sci(worst);
  }
}

void parser_corpus(const AcceptanceOptions& opt, Tally& o) {
  for (int k = 1; k <= 5; ++k) {
    const std::string name = "fig" + std::to_string(k);
    const std::filesystem::path path = fixture(opt, name);
    const std::string text = read_text_file(path);
    const LatticeSpecDocument spec = parse_lattice_spec(text);
    const std::string canonical = serialize_lattice_spec(spec);
    o.require(canonical == text, name + " does not round-trip byte-identically");
    o.require(serialize_lattice_spec(parse_lattice_spec(canonical)) == canonical, name + " is not a fixed point");
    const ResolvedDocument doc = resolve_document(spec);
    (void)doc;
    const std::string file = path.string();
    const char* argv[] = {"symlat", "check", "all", file.c_str()};
    std::ostringstream sink;
    std::ostringstream err;
    const int code = run_cli(4, argv, sink, err);
    o.require(code == 0, "check all on " + name + " exited " + std::to_string(code) + " " + err.str());
  }
  if (o.pass) o.detail << "fig1-fig5 parse, validate, round-trip and pass check all";
}

struct Criterion {
  const char* name;
  std::function<void(const AcceptanceOptions&, Tally&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"kirchhoff-identity", kirchhoff_identity},
      {"continuity-identity", continuity_identity},
      {"identity-reduction", identity_reduction},
      {"direction-inversion", direction_inversion},
      {"domainwise-constancy", domainwise_constancy},
      {"summed-constancy", summed_constancy},
      {"open-chain-similarity", open_chain},
      {"reflection-loop", reflection_loop},
      {"translation-loop", translation_loop},
      {"spectral-oracle", spectral_oracle},
      {"parser-corpus", parser_corpus},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::InvalidArgument, "criterion " + std::to_string(id) + " does not exist");
  }
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = c.name;
  Tally o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(options, o);
  } catch (const std::exception& e) {
    o.require(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.pass;
  r.detail = o.detail.str();
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %s (%.2f s): ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return head + r.detail;
}

}  // namespace symlat
