// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "symlat/error.hpp"

namespace symlat {

namespace {

std::string id_str(SiteId id) { return std::to_string(id.value); }

}  // namespace

Lattice Lattice::build(std::string name, std::vector<Site> sites,
                       std::vector<Hopping> hoppings, bool grid_mode) {
  Lattice lat;
  lat.name_ = std::move(name);
  lat.grid_mode_ = grid_mode;

  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Site& s = sites[i];
    if (!lat.index_.emplace(s.id, i).second) {
      throw Error(ErrorCode::DuplicateSiteId, "site " + id_str(s.id) + " declared twice",
                  std::nullopt, i);
    }
    if (!lat.by_position_.emplace(std::pair{s.x, s.y}, i).second) {
      throw Error(ErrorCode::DuplicateCoordinate,
                  "site " + id_str(s.id) + " reuses coordinate (" + std::to_string(s.x) + ", " +
                      std::to_string(s.y) + ")",
                  std::nullopt, i);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < hoppings.size(); ++k) {
    const Hopping& hop = hoppings[k];
    const auto ia = lat.index_.find(hop.a);
    const auto ib = lat.index_.find(hop.b);
    if (ia == lat.index_.end() || ib == lat.index_.end()) {
      const SiteId missing = ia == lat.index_.end() ? hop.a : hop.b;
      throw Error(ErrorCode::DanglingHopping,
                  "hopping " + id_str(hop.a) + "-" + id_str(hop.b) + " references unknown site " +
                      id_str(missing),
                  std::nullopt, k);
    }
    if (hop.a == hop.b) {
      throw Error(ErrorCode::SelfHopping, "hopping connects site " + id_str(hop.a) + " to itself",
                  std::nullopt, k);
    }
    if (hop.h == Complex{0.0, 0.0}) {
      throw Error(ErrorCode::ZeroHopping,
                  "hopping " + id_str(hop.a) + "-" + id_str(hop.b) + " has zero amplitude",
                  std::nullopt, k);
    }
    const auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::DuplicateHopping,
                  "hopping " + id_str(hop.a) + "-" + id_str(hop.b) + " declared twice",
                  std::nullopt, k);
    }
    if (grid_mode) {
      const Site& sa = sites[ia->second];
      const Site& sb = sites[ib->second];
      if (std::abs(sa.x - sb.x) + std::abs(sa.y - sb.y) != 1) {
        throw Error(ErrorCode::GridViolation,
                    "hopping " + id_str(hop.a) + "-" + id_str(hop.b) +
                        " is not a horizontal or vertical unit step",
                    std::nullopt, k);
      }
    }
  }

  const std::size_t n = sites.size();
  lat.adjacency_.assign(n, {});
  lat.hamiltonian_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    lat.hamiltonian_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = sites[i].v;
  }
  for (const Hopping& hop : hoppings) {
    const std::size_t a = lat.index_.at(hop.a);
    const std::size_t b = lat.index_.at(hop.b);
    lat.hamiltonian_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = hop.h;
    lat.hamiltonian_(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = std::conj(hop.h);
    lat.adjacency_[a].push_back(b);
    lat.adjacency_[b].push_back(a);
  }
  for (auto& row : lat.adjacency_) {
    std::sort(row.begin(), row.end(),
              [&](std::size_t l, std::size_t r) { return sites[l].id < sites[r].id; });
  }

  lat.sites_ = std::move(sites);
  lat.hoppings_ = std::move(hoppings);
  return lat;
}

std::size_t Lattice::index_of(SiteId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownSite, "site " + id_str(id) + " is not part of lattice '" + name_ + "'");
  }
  return it->second;
}

std::optional<std::size_t> Lattice::find(SiteId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Lattice::index_at(int x, int y) const {
  const auto it = by_position_.find({x, y});
  if (it == by_position_.end()) return std::nullopt;
  return it->second;
}

bool Lattice::adjacent(std::size_t i, std::size_t j) const {
  const auto& row = adjacency_.at(i);
  return std::find(row.begin(), row.end(), j) != row.end();
}

double Lattice::max_imag_potential() const {
  double worst = 0.0;
  for (const Site& s : sites_) worst = std::max(worst, std::abs(s.v.imag()));
  return worst;
}

bool Lattice::is_real(double tol) const {
  if (max_imag_potential() > tol) return false;
  return std::all_of(hoppings_.begin(), hoppings_.end(),
                     [tol](const Hopping& h) { return std::abs(h.h.imag()) <= tol; });
}

double Lattice::max_abs_entry() const {
  return hamiltonian_.size() == 0 ? 0.0 : hamiltonian_.cwiseAbs().maxCoeff();
}

std::vector<SiteId> neighbors(const Lattice& lat, SiteId n) {
  std::vector<SiteId> out;
  for (std::size_t j : lat.neighbor_indices(lat.index_of(n))) out.push_back(lat.id_at(j));
  return out;
}

Eigen::MatrixXcd hamiltonian_matrix(const Lattice& lat) { return lat.hamiltonian(); }

bool is_connected(const Lattice& lat, std::span<const std::size_t> indices) {
  if (indices.empty()) return false;
  std::set<std::size_t> members(indices.begin(), indices.end());
  std::set<std::size_t> reached{indices.front()};
  std::deque<std::size_t> queue{indices.front()};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t nb : lat.neighbor_indices(cur)) {
      if (members.count(nb) && reached.insert(nb).second) queue.push_back(nb);
    }
  }
  return reached.size() == members.size();
}

std::vector<std::size_t> indices_of(const Lattice& lat, std::span<const SiteId> ids) {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (SiteId id : ids) out.push_back(lat.index_of(id));
  return out;
}

}  // namespace symlat
