// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lattice.hpp
 * @brief Planar tight-binding systems: sites, hoppings, and the Hamiltonian.
 *
 * A Lattice is validated once at construction and immutable afterwards.
 * Matrix rows/columns follow site declaration order; everything that leaves
 * the library refers to sites by SiteId.
 *
 * Off-diagonal entries are +h exactly (no tight-binding minus sign). Each
 * undirected hopping is stored once and the matrix holds H(a,b) = h,
 * H(b,a) = conj(h).
 */

#pragma once

#include <Eigen/Dense>

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symlat {

using Complex = std::complex<double>;

struct SiteId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(SiteId, SiteId) = default;
};

struct Site {
  SiteId id;
  int x = 0;
  int y = 0;
  Complex v{0.0, 0.0};  ///< on-site potential
};

struct Hopping {
  SiteId a;
  SiteId b;
  Complex h{0.0, 0.0};  ///< amplitude for a -> b; b -> a carries conj(h)
};

class Lattice {
 public:
  /// Validates and builds. Throws Error with DuplicateSiteId,
  /// DuplicateCoordinate, DanglingHopping, SelfHopping, DuplicateHopping,
  /// ZeroHopping or GridViolation; `Error::item()` is the index of the
  /// offending site or hopping.
  static Lattice build(std::string name, std::vector<Site> sites,
                       std::vector<Hopping> hoppings, bool grid_mode);

  const std::string& name() const noexcept { return name_; }
  bool grid_mode() const noexcept { return grid_mode_; }
  std::size_t size() const noexcept { return sites_.size(); }
  std::span<const Site> sites() const noexcept { return sites_; }
  std::span<const Hopping> hoppings() const noexcept { return hoppings_; }

  const Site& site(std::size_t index) const { return sites_.at(index); }
  SiteId id_at(std::size_t index) const { return sites_.at(index).id; }

  /// Matrix index of `id`; throws UnknownSite.
  std::size_t index_of(SiteId id) const;
  std::optional<std::size_t> find(SiteId id) const;
  std::optional<std::size_t> index_at(int x, int y) const;

  /// Neighbour indices of `index`, ordered by ascending SiteId.
  std::span<const std::size_t> neighbor_indices(std::size_t index) const {
    return adjacency_.at(index);
  }
  bool adjacent(std::size_t i, std::size_t j) const;

  const Eigen::MatrixXcd& hamiltonian() const noexcept { return hamiltonian_; }
  Complex entry(std::size_t i, std::size_t j) const { return hamiltonian_(i, j); }

  /// Largest |Im v| over all sites.
  double max_imag_potential() const;
  /// True when every potential and hopping is real within `tol`.
  bool is_real(double tol) const;
  double max_abs_entry() const;

 private:
  Lattice() = default;

  std::string name_;
  bool grid_mode_ = false;
  std::vector<Site> sites_;
  std::vector<Hopping> hoppings_;
  std::map<SiteId, std::size_t> index_;
  std::map<std::pair<int, int>, std::size_t> by_position_;
  std::vector<std::vector<std::size_t>> adjacency_;
  Eigen::MatrixXcd hamiltonian_;
};

/// Neighbours N(n) in ascending SiteId order; throws UnknownSite.
std::vector<SiteId> neighbors(const Lattice& lat, SiteId n);

/// Dense Hamiltonian in site declaration order.
Eigen::MatrixXcd hamiltonian_matrix(const Lattice& lat);

/// True when the sites at `indices` induce a connected subgraph.
bool is_connected(const Lattice& lat, std::span<const std::size_t> indices);

std::vector<std::size_t> indices_of(const Lattice& lat, std::span<const SiteId> ids);

}  // namespace symlat

template <>
struct std::hash<symlat::SiteId> {
  std::size_t operator()(symlat::SiteId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
