// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "symlat/error.hpp"

namespace symlat {

namespace {

Hypothesis hypothesis(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? std::string{} : std::move(detail)};
}

std::string id_list(const std::vector<SiteId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i].value;
  return out.str();
}

double current_tolerance(const Lattice& lat, const Tolerances& tol) {
  return tol.eigen * std::max(1.0, lat.max_abs_entry() / 10.0);
}

Complex amp(const EigenState& s, std::size_t i) { return s.amplitudes(static_cast<Eigen::Index>(i)); }

void finish(TheoremVerdict& v) {
  v.max_residual = 0.0;
  bool all_ok = true;
  for (const auto& w : v.witnesses) {
    if (!w.gating) continue;
    v.max_residual = std::max(v.max_residual, w.residual);
    all_ok = all_ok && w.ok;
  }
  if (!v.hypotheses_satisfied()) {
    v.outcome = Outcome::not_applicable;
  } else {
    v.outcome = all_ok ? Outcome::holds : Outcome::fails;
  }
}

Hypothesis eigen_hypothesis(const Lattice& lat, const EigenState& s, const Tolerances& tol) {
  const double r = eigen_residual(lat, s);
  const double bound = tol.eigen * std::max(1.0, lat.max_abs_entry() / 10.0);
  return hypothesis("eigenstate", r <= bound,
                    "state " + std::to_string(s.index) + " has residual " + std::to_string(r));
}

Hypothesis domain_hypothesis(const Lattice& lat, const SiteMapping& m, std::span<const SiteId> ids,
                             const Tolerances& tol, const std::string& what) {
  const DomainCheck dc = verify_domain(lat, m, ids, tol.symmetry);
  std::string detail;
  if (!dc.connected) {
    detail = what + " is not connected";
  } else if (!dc.violations.empty()) {
    const auto& p = dc.violations.front();
    detail = what + " breaks the local symmetry: " + std::to_string(dc.violations.size()) +
             " pair(s), first (" + std::to_string(p.m.value) + "," + std::to_string(p.n.value) + ")";
  }
  return hypothesis(what + "-in-domain", dc.valid, detail);
}

Hypothesis connectivity_hypothesis(const Lattice& lat, const SiteMapping& m,
                                   std::span<const std::size_t> idx) {
  std::vector<SiteId> bad;
  for (std::size_t i : idx) {
    if (!keeps_connectivity_at(lat, m, i)) bad.push_back(lat.id_at(i));
  }
  return hypothesis("keeps-connectivity", bad.empty(),
                    "mapping changes the connectivity of site(s) " + id_list(bad));
}

// Merges per-state verdicts: hypotheses of the same name are and-ed,
// witnesses concatenated.
TheoremVerdict aggregate(std::string theorem, const std::vector<TheoremVerdict>& parts) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  std::map<std::string, std::size_t> slot;
  for (const auto& p : parts) {
    v.tolerance = p.tolerance;
    for (const auto& h : p.hypotheses) {
      auto [it, fresh] = slot.emplace(h.name, v.hypotheses.size());
      if (fresh) {
        v.hypotheses.push_back(h);
      } else if (!h.satisfied && v.hypotheses[it->second].satisfied) {
        v.hypotheses[it->second] = h;
      }
    }
    v.witnesses.insert(v.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    for (const auto& n : p.notes) {
      if (std::find(v.notes.begin(), v.notes.end(), n) == v.notes.end()) v.notes.push_back(n);
    }
  }
  finish(v);
  return v;
}

// Orders the sites of a connected set whose induced subgraph has maximum
// degree two. Returns an empty vector when it is not a path or cycle.
std::vector<std::size_t> walk_order(const Lattice& lat, const std::vector<std::size_t>& idx,
                                    bool& cycle) {
  const std::set<std::size_t> members(idx.begin(), idx.end());
  std::map<std::size_t, std::vector<std::size_t>> inner;
  for (std::size_t i : idx) {
    for (std::size_t k : lat.neighbor_indices(i)) {
      if (members.count(k)) inner[i].push_back(k);
    }
    if (inner[i].size() > 2) return {};
  }
  const auto by_id = [&](std::size_t l, std::size_t r) { return lat.id_at(l) < lat.id_at(r); };
  std::vector<std::size_t> ends;
  for (std::size_t i : idx) {
    if (inner[i].size() <= 1) ends.push_back(i);
  }
  cycle = ends.empty();
  std::size_t start;
  if (cycle) {
    start = *std::min_element(idx.begin(), idx.end(), by_id);
  } else {
    start = *std::min_element(ends.begin(), ends.end(), by_id);
  }
  std::vector<std::size_t> order{start};
  std::set<std::size_t> seen{start};
  std::size_t cur = start;
  while (true) {
    std::vector<std::size_t> next;
    for (std::size_t k : inner[cur]) {
      if (!seen.count(k)) next.push_back(k);
    }
    if (next.empty()) break;
    cur = *std::min_element(next.begin(), next.end(), by_id);
    seen.insert(cur);
    order.push_back(cur);
  }
  if (order.size() != idx.size()) return {};
  return order;
}

struct LoopShape {
  std::vector<std::size_t> idx;
  Hypothesis cycle;
};

LoopShape loop_shape(const Lattice& lat, std::span<const SiteId> loop) {
  LoopShape s;
  s.idx = indices_of(lat, loop);
  const std::size_t n = s.idx.size();
  std::string why;
  if (n < 3) why = "a loop needs at least three sites";
  if (why.empty() && std::set<std::size_t>(s.idx.begin(), s.idx.end()).size() != n) {
    why = "loop lists a site twice";
  }
  for (std::size_t i = 0; why.empty() && i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (lat.adjacent(s.idx[i], s.idx[j]) != consecutive) {
        why = consecutive ? "sites " + std::to_string(loop[i].value) + " and " +
                                std::to_string(loop[j].value) + " are not adjacent"
                          : "chord between " + std::to_string(loop[i].value) + " and " +
                                std::to_string(loop[j].value);
        break;
      }
    }
  }
  s.cycle = hypothesis("cycle", why.empty(), why);
  return s;
}

Hypothesis identity_elsewhere(const Lattice& lat, const SiteMapping& m,
                              const std::vector<std::size_t>& loop) {
  const std::set<std::size_t> members(loop.begin(), loop.end());
  std::vector<SiteId> bad;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!members.count(i) && m.image(i) != i) bad.push_back(lat.id_at(i));
  }
  return hypothesis("identity-outside-loop", bad.empty(),
                    "mapping moves sites outside the loop: " + id_list(bad));
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool TheoremVerdict::hypotheses_satisfied() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.satisfied; });
}

double eigen_residual(const Lattice& lat, const EigenState& state) {
  if (static_cast<std::size_t>(state.amplitudes.size()) != lat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "state does not match the lattice");
  }
  return (lat.hamiltonian() * state.amplitudes - state.energy * state.amplitudes).norm();
}

// ---------------------------------------------------------------------------

TheoremVerdict check_domainwise_constancy(const Lattice& lat, const SiteMapping& m,
                                          std::span<const SiteId> domain, const EigenState& state,
                                          const Tolerances& tol) {
  TheoremVerdict v;
  v.theorem = "domainwise-constancy";
  v.tolerance = current_tolerance(lat, tol);
  if (domain.empty()) throw Error(ErrorCode::EmptySet, "domain has no sites");
  std::vector<SiteId> ids(domain.begin(), domain.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto idx = indices_of(lat, ids);

  v.hypotheses.push_back(domain_hypothesis(lat, m, ids, tol, "domain"));
  std::vector<SiteId> crowded;
  for (std::size_t i : idx) {
    if (lat.neighbor_indices(i).size() > 2) crowded.push_back(lat.id_at(i));
  }
  v.hypotheses.push_back(hypothesis("at-most-two-neighbours", crowded.empty(),
                                    "site(s) with three or more neighbours: " + id_list(crowded)));
  v.hypotheses.push_back(connectivity_hypothesis(lat, m, idx));
  v.hypotheses.push_back(eigen_hypothesis(lat, state, tol));

  if (v.hypotheses_satisfied()) {
    bool cycle = false;
    const auto order = walk_order(lat, idx, cycle);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.emplace_back(order[i], order[i + 1]);
    if (cycle && order.size() > 2) edges.emplace_back(order.back(), order.front());
    if (!edges.empty()) {
      const Complex ref = nonlocal_current_at(state.amplitudes, lat, m, edges[0].first, edges[0].second);
      for (const auto& [a, b] : edges) {
        Witness w;
        w.kind = "current";
        w.state = state.index;
        w.sites = {lat.id_at(a), lat.id_at(b)};
        const Complex q = nonlocal_current_at(state.amplitudes, lat, m, a, b);
        w.values = {q};
        w.residual = std::abs(q - ref);
        w.ok = w.residual <= v.tolerance;
        v.witnesses.push_back(std::move(w));
      }
    }
  }
  finish(v);
  return v;
}

TheoremVerdict check_domainwise_constancy(const Lattice& lat, const SiteMapping& m,
                                          std::span<const SiteId> domain, const Spectrum& spectrum,
                                          const Tolerances& tol) {
  std::vector<TheoremVerdict> parts;
  for (const auto& s : spectrum.states) parts.push_back(check_domainwise_constancy(lat, m, domain, s, tol));
  return aggregate("domainwise-constancy", parts);
}

// ---------------------------------------------------------------------------

TheoremVerdict check_summed_constancy(const Lattice& lat, const SiteMapping& m, const Region& r,
                                      const EigenState& state, const Tolerances& tol) {
  TheoremVerdict v;
  v.theorem = "summed-constancy";
  v.tolerance = current_tolerance(lat, tol);
  const auto idx = indices_of(lat, r.sites);

  v.hypotheses.push_back(domain_hypothesis(lat, m, r.sites, tol, "region"));
  v.hypotheses.push_back(connectivity_hypothesis(lat, m, idx));

  std::vector<SiteId> off_axis;
  for (std::size_t i : idx) {
    for (std::size_t k : lat.neighbor_indices(i)) {
      const int d = std::abs(lat.site(i).x - lat.site(k).x) + std::abs(lat.site(i).y - lat.site(k).y);
      if (d != 1) {
        off_axis.push_back(lat.id_at(i));
        break;
      }
    }
  }
  v.hypotheses.push_back(hypothesis("axis-couplings", off_axis.empty(),
                                    "site(s) with non-unit or diagonal couplings: " + id_list(off_axis)));

  std::string misaligned;
  for (std::size_t c = 0; c + 1 < r.columns.size() && misaligned.empty(); ++c) {
    const ColumnRange& left = r.columns[c];
    const ColumnRange& right = r.columns[c + 1];
    const int lo = std::min(left.y_min, right.y_min);
    const int hi = std::max(left.y_max, right.y_max);
    for (int y = lo; y <= hi; ++y) {
      const bool in_left = y >= left.y_min && y <= left.y_max;
      const bool in_right = y >= right.y_min && y <= right.y_max;
      if (in_left == in_right) continue;
      const auto a = lat.index_at(left.x, y);
      const auto b = lat.index_at(right.x, y);
      if (a && b && in_current_support(lat, m, *a, *b)) {
        misaligned = "row y=" + std::to_string(y) + " couples columns x=" + std::to_string(left.x) +
                     " and x=" + std::to_string(right.x) + " but lies in only one of them";
        break;
      }
    }
  }
  v.hypotheses.push_back(hypothesis("row-alignment", misaligned.empty(), misaligned));
  v.hypotheses.push_back(eigen_hypothesis(lat, state, tol));

  if (v.hypotheses_satisfied()) {
    for (int x = r.x_min() + 1; x < r.x_max(); ++x) {
      for (RowRange rows : {RowRange::inclusive, RowRange::exclusive}) {
        Witness w;
        w.kind = rows == RowRange::inclusive ? "inclusive" : "exclusive";
        w.state = state.index;
        w.index = x;
        const Complex before = summed_current(state.amplitudes, lat, m, r, x - 1, 1, rows);
        const Complex after = summed_current(state.amplitudes, lat, m, r, x, 1, rows);
        w.values = {before, after};
        w.residual = std::abs(before - after);
        w.ok = w.residual <= v.tolerance;
        w.gating = rows == RowRange::inclusive;
        v.witnesses.push_back(std::move(w));
      }
    }
    const bool exclusive_ok = std::all_of(v.witnesses.begin(), v.witnesses.end(), [](const Witness& w) {
      return w.gating || w.ok;
    });
    if (!exclusive_ok) {
      v.notes.push_back("boundary-exclusive column sums differ; only the inclusive sums telescope");
    }
  }
  finish(v);
  return v;
}

TheoremVerdict check_summed_constancy(const Lattice& lat, const SiteMapping& m, const Region& r,
                                      const Spectrum& spectrum, const Tolerances& tol) {
  std::vector<TheoremVerdict> parts;
  for (const auto& s : spectrum.states) parts.push_back(check_summed_constancy(lat, m, r, s, tol));
  return aggregate("summed-constancy", parts);
}

// ---------------------------------------------------------------------------

OpenChainResult open_chain_similarity(const Lattice& lat, const SiteMapping& m,
                                      std::span<const SiteId> chain, const Spectrum& spectrum,
                                      const Tolerances& tol) {
  OpenChainResult out;
  TheoremVerdict& v = out.verdict;
  v.theorem = "open-chain-similarity";
  v.tolerance = tol.amplitude;
  if (chain.empty()) throw Error(ErrorCode::EmptySet, "chain has no sites");
  const std::vector<SiteId> ids(chain.begin(), chain.end());
  const auto idx = indices_of(lat, ids);
  const std::size_t k = idx.size();

  std::string shape;
  if (std::set<std::size_t>(idx.begin(), idx.end()).size() != k) shape = "chain lists a site twice";
  for (std::size_t i = 0; shape.empty() && i + 1 < k; ++i) {
    if (!lat.adjacent(idx[i], idx[i + 1])) {
      shape = "sites " + std::to_string(ids[i].value) + " and " + std::to_string(ids[i + 1].value) +
              " are not adjacent";
    }
  }
  v.hypotheses.push_back(hypothesis("chain", shape.empty(), shape));
  v.hypotheses.push_back(hypothesis("open-end", lat.neighbor_indices(idx[0]).size() == 1,
                                    "site " + std::to_string(ids[0].value) + " has " +
                                        std::to_string(lat.neighbor_indices(idx[0]).size()) +
                                        " neighbours, an open end has one"));
  std::vector<SiteId> crowded;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (lat.neighbor_indices(idx[i]).size() != 2) crowded.push_back(ids[i]);
  }
  v.hypotheses.push_back(hypothesis("interior-two-neighbours", crowded.empty(),
                                    "interior site(s) with extra neighbours: " + id_list(crowded)));
  v.hypotheses.push_back(domain_hypothesis(lat, m, ids, tol, "chain"));
  v.hypotheses.push_back(
      connectivity_hypothesis(lat, m, std::span<const std::size_t>(idx.data(), k > 0 ? k - 1 : 0)));
  bool real = true;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    real = real && std::abs(lat.entry(idx[i], idx[i + 1]).imag()) <= tol.hermitian &&
           std::abs(lat.entry(m.image(idx[i]), m.image(idx[i + 1])).imag()) <= tol.hermitian;
  }
  v.hypotheses.push_back(hypothesis("real-hoppings", real, "chain hoppings must be real"));
  for (const auto& s : spectrum.states) {
    const Hypothesis h = eigen_hypothesis(lat, s, tol);
    if (!h.satisfied) {
      v.hypotheses.push_back(h);
      break;
    }
  }

  if (!v.hypotheses_satisfied()) {
    finish(v);
    return out;
  }

  const double zero = tol.attachment;
  for (const auto& s : spectrum.states) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      Witness w;
      w.kind = "vanishing-current";
      w.state = s.index;
      w.sites = {ids[i], ids[i + 1]};
      const Complex q = nonlocal_current_at(s.amplitudes, lat, m, idx[i], idx[i + 1]);
      w.values = {q};
      w.residual = std::abs(q);
      w.ok = w.residual <= tol.amplitude;
      v.witnesses.push_back(std::move(w));
    }

    SimilarityConstant sc;
    sc.state = s.index;
    sc.chain = ids;
    Eigen::VectorXcd u(static_cast<Eigen::Index>(k));
    Eigen::VectorXcd w(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) {
      u(static_cast<Eigen::Index>(i)) = std::conj(amp(s, idx[i]));
      w(static_cast<Eigen::Index>(i)) = amp(s, m.image(idx[i]));
    }
    for (Eigen::Index p = 0; p < u.size(); ++p) {
      for (Eigen::Index q = p + 1; q < u.size(); ++q) {
        sc.parallel_residual = std::max(sc.parallel_residual, std::abs(u(p) * w(q) - u(q) * w(p)));
      }
    }
    const double u_max = u.cwiseAbs().maxCoeff();
    const double w_max = w.cwiseAbs().maxCoeff();

    Witness sim;
    sim.state = s.index;
    sim.sites = ids;
    if (w_max <= zero) {
      sim.kind = u_max <= zero ? "exempt" : "image-vanishes";
      sim.gating = false;
      sim.residual = sc.parallel_residual;
    } else {
      sc.defined = true;
      sc.c = w.dot(u) / w.squaredNorm();
      for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::abs(w(i)) > zero) sc.spread = std::max(sc.spread, std::abs(u(i) / w(i) - sc.c));
      }
      sim.kind = "similarity";
      sim.values = {sc.c};
      sim.residual = sc.parallel_residual;
      sim.ok = sc.parallel_residual <= tol.amplitude;
    }
    v.witnesses.push_back(std::move(sim));

    // Interior zeros: the stationary equation at z forces the neighbouring
    // ratios to agree, so one constant spans the gap.
    for (std::size_t z = 1; z + 1 < k; ++z) {
      const auto zi = static_cast<Eigen::Index>(z);
      if (std::abs(u(zi)) > zero || std::abs(w(zi)) > zero) continue;
      if (std::abs(w(zi - 1)) <= zero || std::abs(w(zi + 1)) <= zero) continue;
      sc.bridged = true;
      Witness b;
      b.kind = "bridge";
      b.state = s.index;
      b.sites = {ids[z - 1], ids[z], ids[z + 1]};
      const Eigen::VectorXcd hpsi = lat.hamiltonian() * s.amplitudes;
      const double stationary =
          std::max(std::abs(hpsi(static_cast<Eigen::Index>(idx[z])) - s.energy * amp(s, idx[z])),
                   std::abs(hpsi(static_cast<Eigen::Index>(m.image(idx[z]))) -
                            s.energy * amp(s, m.image(idx[z]))));
      const Complex left = u(zi - 1) / w(zi - 1);
      const Complex right = u(zi + 1) / w(zi + 1);
      b.values = {left, right};
      b.residual = std::max(stationary, std::abs(left - right));
      b.ok = b.residual <= tol.amplitude;
      v.witnesses.push_back(std::move(b));
    }
    out.constants.push_back(std::move(sc));
  }
  finish(v);
  return out;
}

// ---------------------------------------------------------------------------

TheoremVerdict closed_loop_reflection(const Lattice& lat, const SiteMapping& m,
                                      std::span<const SiteId> loop, SiteId a,
                                      const Spectrum& spectrum, const Tolerances& tol) {
  TheoremVerdict v;
  v.theorem = "closed-loop-reflection";
  v.tolerance = tol.amplitude;
  const LoopShape shape = loop_shape(lat, loop);
  const auto& idx = shape.idx;
  const std::size_t n = idx.size();
  v.hypotheses.push_back(shape.cycle);

  const auto at = std::find(loop.begin(), loop.end(), a);
  const bool on_loop = at != loop.end();
  v.hypotheses.push_back(hypothesis("axis-site", on_loop && m.image(lat.index_of(a)) == lat.index_of(a),
                                    "site " + std::to_string(a.value) +
                                        (on_loop ? " is moved by the mapping" : " is not on the loop")));
  if (on_loop) {
    const auto start = static_cast<std::size_t>(at - loop.begin());
    std::string why;
    for (std::size_t i = 0; i < n && why.empty(); ++i) {
      const std::size_t from = idx[(start + i) % n];
      const std::size_t to = idx[(start + n - i) % n];
      if (m.image(from) != to) {
        why = "site " + std::to_string(lat.id_at(from).value) + " should map to " +
              std::to_string(lat.id_at(to).value);
      }
    }
    v.hypotheses.push_back(hypothesis("reflection-on-loop", why.empty(), why));
  }
  v.hypotheses.push_back(identity_elsewhere(lat, m, idx));

  const std::set<std::size_t> members(idx.begin(), idx.end());
  std::string attach;
  for (std::size_t i : idx) {
    std::size_t outside = 0;
    for (std::size_t k : lat.neighbor_indices(i)) outside += members.count(k) ? 0 : 1;
    const bool is_a = lat.id_at(i) == a;
    if ((is_a && outside > 1) || (!is_a && outside > 0)) {
      attach = "site " + std::to_string(lat.id_at(i).value) + " has " + std::to_string(outside) +
               " exterior neighbour(s)";
      break;
    }
  }
  v.hypotheses.push_back(hypothesis("single-attachment", attach.empty(), attach));
  v.hypotheses.push_back(domain_hypothesis(lat, m, loop, tol, "loop"));
  for (const auto& s : spectrum.states) {
    const Hypothesis h = eigen_hypothesis(lat, s, tol);
    if (!h.satisfied) {
      v.hypotheses.push_back(h);
      break;
    }
  }

  if (v.hypotheses_satisfied()) {
    Witness c;
    c.kind = "commutator";
    c.residual = commutator_norm(lat, m);
    c.values = {Complex(c.residual, 0.0)};
    c.ok = c.residual <= tol.commutator;
    const bool commutes = c.ok;
    v.witnesses.push_back(c);
    if (commutes) {
      const Spectrum adapted = symmetry_adapt(spectrum, lat, m, tol);
      for (const auto& s : adapted.states) {
        double even = 0.0;
        double odd = 0.0;
        for (std::size_t i : idx) {
          even = std::max(even, std::abs(amp(s, m.image(i)) - amp(s, i)));
          odd = std::max(odd, std::abs(amp(s, m.image(i)) + amp(s, i)));
        }
        Witness w;
        w.kind = "parity";
        w.state = s.index;
        w.values = {Complex(even <= odd ? 1.0 : -1.0, 0.0)};
        w.residual = std::min(even, odd);
        w.ok = w.residual <= tol.amplitude;
        v.witnesses.push_back(std::move(w));
      }
    } else {
      v.notes.push_back("permutation does not commute with the Hamiltonian");
    }
  }
  finish(v);
  return v;
}

// ---------------------------------------------------------------------------

TheoremVerdict closed_loop_translation(const Lattice& lat, const SiteMapping& m,
                                       const TranslationLoop& spec, const Spectrum& spectrum,
                                       const Tolerances& tol) {
  TheoremVerdict v;
  v.theorem = "closed-loop-translation";
  v.tolerance = tol.amplitude;
  const LoopShape shape = loop_shape(lat, spec.loop);
  const auto& idx = shape.idx;
  const auto n = static_cast<long>(idx.size());
  v.hypotheses.push_back(shape.cycle);

  const std::set<std::size_t> members(idx.begin(), idx.end());
  const std::size_t ia = lat.index_of(spec.a);
  const std::size_t ib = lat.index_of(spec.b);
  std::string attach;
  if (!members.count(ia)) {
    attach = "site " + std::to_string(spec.a.value) + " is not on the loop";
  } else if (members.count(ib)) {
    attach = "site " + std::to_string(spec.b.value) + " lies on the loop";
  } else if (!lat.adjacent(ia, ib)) {
    attach = "sites " + std::to_string(spec.a.value) + " and " + std::to_string(spec.b.value) +
             " are not adjacent";
  } else {
    for (std::size_t i : idx) {
      for (std::size_t k : lat.neighbor_indices(i)) {
        if (!members.count(k) && !(i == ia && k == ib)) {
          attach = "extra exterior coupling " + std::to_string(lat.id_at(i).value) + "-" +
                   std::to_string(lat.id_at(k).value);
        }
      }
    }
  }
  v.hypotheses.push_back(hypothesis("single-attachment", attach.empty(), attach));

  const long shift = n > 0 ? ((spec.shift % n) + n) % n : 0;
  std::string why;
  if (shift == 0) why = "shift is a multiple of the loop length";
  for (long i = 0; i < n && why.empty(); ++i) {
    const std::size_t from = idx[static_cast<std::size_t>(i)];
    const std::size_t to = idx[static_cast<std::size_t>((i + shift) % n)];
    if (m.image(from) != to) {
      why = "site " + std::to_string(lat.id_at(from).value) + " should map to " +
            std::to_string(lat.id_at(to).value);
    }
  }
  v.hypotheses.push_back(hypothesis("translation-on-loop", why.empty(), why));
  v.hypotheses.push_back(identity_elsewhere(lat, m, idx));
  v.hypotheses.push_back(domain_hypothesis(lat, m, spec.loop, tol, "loop"));
  v.hypotheses.push_back(hypothesis("real-hamiltonian", lat.is_real(tol.hermitian),
                                    "complex potentials or hoppings"));
  const int step = std::abs(spec.shift);
  const int k_max = spec.k_max.value_or(step > 0 ? static_cast<int>(n) / (2 * step) : 0);
  v.hypotheses.push_back(hypothesis("k-range", k_max >= 1, "no k with distinct site pairs"));
  for (const auto& s : spectrum.states) {
    const Hypothesis h = eigen_hypothesis(lat, s, tol);
    if (!h.satisfied) {
      v.hypotheses.push_back(h);
      break;
    }
  }

  if (v.hypotheses_satisfied()) {
    Witness c;
    c.kind = "commutator";
    c.residual = commutator_norm(lat, m);
    c.values = {Complex(c.residual, 0.0)};
    c.gating = false;
    v.witnesses.push_back(c);

    const std::size_t t_a = m.apply(ia, 1);
    const std::size_t c_site = m.apply(ia, -1);
    for (const auto& s : spectrum.states) {
      Witness pair;
      pair.kind = "kirchhoff-pair";
      pair.state = s.index;
      pair.sites = {lat.id_at(t_a), spec.b, lat.id_at(c_site)};
      const Complex lhs = std::conj(amp(s, t_a)) * amp(s, ib);
      const Complex rhs = amp(s, c_site) * std::conj(amp(s, ib));
      pair.values = {lhs, rhs};
      pair.residual = std::abs(lhs - rhs);
      pair.ok = pair.residual <= tol.amplitude;
      v.witnesses.push_back(std::move(pair));

      const double b_amp = std::abs(amp(s, ib));
      if (b_amp <= tol.attachment) {
        Witness e;
        e.kind = "exempt";
        e.state = s.index;
        e.sites = {spec.b};
        e.values = {amp(s, ib)};
        e.residual = b_amp;
        e.gating = false;
        v.witnesses.push_back(std::move(e));
        continue;
      }
      for (int kk = 1; kk <= k_max; ++kk) {
        const std::size_t back = m.apply(ia, -kk);
        const std::size_t fwd = m.apply(ia, kk);
        Witness w;
        w.kind = "conditional-symmetry";
        w.state = s.index;
        w.index = kk;
        w.sites = {lat.id_at(back), lat.id_at(fwd)};
        w.values = {amp(s, back), amp(s, fwd)};
        w.residual = std::abs(amp(s, back) - amp(s, fwd));
        w.ok = w.residual <= tol.amplitude;
        v.witnesses.push_back(std::move(w));
      }
    }
  }
  finish(v);
  return v;
}

}  // namespace symlat
