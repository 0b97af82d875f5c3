// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "symlat/error.hpp"

namespace symlat {

namespace {

bool pair_ok(const Lattice& lat, const SiteMapping& m, std::size_t a, std::size_t b, double tol) {
  return std::abs(lat.entry(a, b) - lat.entry(m.image(a), m.image(b))) <= tol &&
         std::abs(lat.entry(b, a) - lat.entry(m.image(b), m.image(a))) <= tol;
}

}  // namespace

DomainCheck verify_domain(const Lattice& lat, const SiteMapping& m, std::span<const SiteId> sites,
                          double tol) {
  if (sites.empty()) throw Error(ErrorCode::EmptySet, "domain has no sites");
  std::vector<SiteId> sorted(sites.begin(), sites.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto idx = indices_of(lat, sorted);

  DomainCheck check;
  check.connected = is_connected(lat, idx);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    for (std::size_t q = p; q < idx.size(); ++q) {
      const std::size_t a = idx[p];
      const std::size_t b = idx[q];
      if (!pair_ok(lat, m, a, b, tol)) {
        check.violations.push_back(
            {sorted[p], sorted[q], lat.entry(a, b), lat.entry(m.image(a), m.image(b))});
      }
    }
  }
  check.valid = check.connected && check.violations.empty();
  return check;
}

std::vector<SymmetryDomain> detect_maximal_domains(const Lattice& lat, const SiteMapping& m,
                                                   double tol) {
  std::vector<std::size_t> order(lat.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return lat.id_at(l) < lat.id_at(r); });

  std::set<std::vector<SiteId>> found;
  std::vector<SymmetryDomain> out;
  for (std::size_t seed : order) {
    if (!pair_ok(lat, m, seed, seed, tol)) continue;
    std::vector<std::size_t> members{seed};
    std::set<std::size_t> visited{seed};
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t cand : lat.neighbor_indices(cur)) {
        if (!visited.insert(cand).second) continue;
        // A candidate rejected now stays rejected: the set only grows.
        const bool fits = pair_ok(lat, m, cand, cand, tol) &&
                          std::all_of(members.begin(), members.end(), [&](std::size_t d) {
                            return pair_ok(lat, m, cand, d, tol);
                          });
        if (fits) {
          members.push_back(cand);
          queue.push_back(cand);
        }
      }
    }
    std::vector<SiteId> ids;
    for (std::size_t i : members) ids.push_back(lat.id_at(i));
    std::sort(ids.begin(), ids.end());
    if (found.insert(ids).second) out.push_back({m.name(), std::move(ids), true});
  }
  std::sort(out.begin(), out.end(),
            [](const SymmetryDomain& l, const SymmetryDomain& r) { return l.sites < r.sites; });
  return out;
}

}  // namespace symlat
