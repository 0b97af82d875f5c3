// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

// Shared builders for the unit tests.

#pragma once

#include <Eigen/Dense>

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "symlat/document.hpp"
#include "symlat/lat_format.hpp"
#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"

namespace symlat::testing {

using Rng = std::mt19937_64;

inline SiteId sid(std::uint32_t v) { return SiteId{v}; }

/// Open chain with ids 1..n at x = 1..n.
inline Lattice chain(const std::vector<Complex>& v, const std::vector<Complex>& h) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sites.push_back(Site{sid(static_cast<std::uint32_t>(i + 1)), static_cast<int>(i + 1), 0, v[i]});
  }
  std::vector<Hopping> hops;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    hops.push_back(Hopping{sid(static_cast<std::uint32_t>(i + 1)), sid(static_cast<std::uint32_t>(i + 2)), h[i]});
  }
  return Lattice::build("chain", std::move(sites), std::move(hops), true);
}

inline Lattice uniform_chain(std::size_t n, Complex v = 0.0, Complex h = 1.0) {
  return chain(std::vector<Complex>(n, v), std::vector<Complex>(n > 0 ? n - 1 : 0, h));
}

/// Ring with ids 0..n-1, not in grid mode.
inline Lattice ring(std::size_t n, Complex h = 1.0) {
  std::vector<Site> sites;
  std::vector<Hopping> hops;
  for (std::uint32_t i = 0; i < n; ++i) sites.push_back(Site{sid(i), static_cast<int>(i), 0, 0.0});
  for (std::uint32_t i = 0; i < n; ++i) hops.push_back(Hopping{sid(i), sid(static_cast<std::uint32_t>((i + 1) % n)), h});
  return Lattice::build("ring", std::move(sites), std::move(hops), false);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Connected random graph with real potentials. Hoppings are complex unless
/// `real` is set.
inline Lattice random_lattice(Rng& rng, std::size_t n, bool real, double scale = 2.0) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < n; ++i) {
    sites.push_back(Site{sid(static_cast<std::uint32_t>(i + 1)), static_cast<int>(i), 0, uniform(rng, -scale, scale)});
  }
  const auto amp = [&] {
    return real ? Complex(uniform(rng, -scale, scale), 0) : Complex(uniform(rng, -scale, scale), uniform(rng, -scale, scale));
  };
  std::vector<Hopping> hops;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    hops.push_back(Hopping{sites[p].id, sites[i].id, amp()});
    used[p][i] = used[i][p] = true;
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (a == b || used[a][b]) continue;
    hops.push_back(Hopping{sites[a].id, sites[b].id, amp()});
    used[a][b] = used[b][a] = true;
  }
  return Lattice::build("random", std::move(sites), std::move(hops), false);
}

inline SiteMapping permutation(std::vector<std::size_t> images, std::string name = "p") {
  return SiteMapping(std::move(name), ExplicitPermutation{}, std::move(images));
}

inline SiteMapping random_mapping(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::shuffle(images.begin(), images.end(), rng);
  return permutation(std::move(images), "random");
}

/// Index-reversing map of an n-site chain.
inline SiteMapping reversal(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = n - 1 - i;
  return permutation(std::move(images), "r");
}

inline Eigen::VectorXcd random_state(Rng& rng, std::size_t n) {
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(n));
  for (auto& z : psi) z = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return psi / psi.norm();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(SYMLAT_FIXTURE_DIR) + "/" + name + ".lat";
}

inline ResolvedDocument fixture(const std::string& name) { return load_document(fixture_path(name)); }

inline ResolvedDocument document(std::string_view text) { return resolve_document(parse_lattice_spec(text)); }

}  // namespace symlat::testing
