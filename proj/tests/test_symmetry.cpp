// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdint>

#include "doctest.h"
#include "support.hpp"
#include "symlat/error.hpp"
#include "symlat/symmetry.hpp"

using namespace symlat;
using namespace symlat::testing;

namespace {

constexpr double kTol = 1e-12;

std::vector<SiteId> ids(std::initializer_list<std::uint32_t> list) {
  std::vector<SiteId> out;
  for (auto v : list) out.push_back(sid(v));
  return out;
}

// Exhaustive reference: every connected subset satisfying the pairwise
// condition, as bitmasks over matrix indices.
std::vector<std::uint32_t> valid_subsets(const Lattice& lat, const SiteMapping& m) {
  const std::size_t n = lat.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    bool ok = is_connected(lat, idx);
    for (std::size_t a : idx) {
      for (std::size_t b : idx) {
        if (!ok) break;
        ok = std::abs(lat.entry(a, b) - lat.entry(m.image(a), m.image(b))) <= kTol;
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

std::uint32_t mask_of(const Lattice& lat, const std::vector<SiteId>& sites) {
  std::uint32_t mask = 0;
  for (SiteId s : sites) mask |= 1u << lat.index_of(s);
  return mask;
}

// Lattice whose potentials take few values so that domains exist.
Lattice patchy_lattice(Rng& rng, std::size_t n) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::uniform_int_distribution<int>(0, 2)(rng) * 0.5;
    sites.push_back(Site{sid(static_cast<std::uint32_t>(i + 1)), static_cast<int>(i), 0, v});
  }
  std::vector<Hopping> hops;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    hops.push_back({sites[p].id, sites[i].id, std::uniform_int_distribution<int>(1, 2)(rng) * 1.0});
  }
  return Lattice::build("patchy", sites, hops, false);
}

}  // namespace

TEST_CASE("uniform 4-chain is globally symmetric") {
  const Lattice lat = uniform_chain(4);
  const DomainCheck dc = verify_domain(lat, reversal(4), ids({1, 2, 3, 4}), kTol);
  CHECK(dc.valid);
  CHECK(dc.connected);
  CHECK(dc.violations.empty());
}

TEST_CASE("6-chain with asymmetric ends") {
  const Lattice lat = chain({1, 0.5, 0.5, 0.5, 0.5, 2}, {1, 1, 1, 1, 1});
  const SiteMapping r = reversal(6);
  CHECK(verify_domain(lat, r, ids({2, 3, 4, 5}), kTol).valid);
  const DomainCheck all = verify_domain(lat, r, ids({1, 2, 3, 4, 5, 6}), kTol);
  CHECK_FALSE(all.valid);
  const bool has_11 = std::any_of(all.violations.begin(), all.violations.end(),
                                  [](const PairViolation& v) { return v.m == sid(1) && v.n == sid(1); });
  CHECK(has_11);

  const auto domains = detect_maximal_domains(lat, r, kTol);
  const bool found = std::any_of(domains.begin(), domains.end(),
                                 [](const SymmetryDomain& d) { return d.sites == ids({2, 3, 4, 5}); });
  CHECK(found);
}

TEST_CASE("identity mapping") {
  Rng rng(3);
  const Lattice lat = random_lattice(rng, 9, false);
  const SiteMapping id = SiteMapping::identity(9);
  CHECK(verify_domain(lat, id, ids({1, 2}), kTol).violations.empty());
  const auto domains = detect_maximal_domains(lat, id, kTol);
  REQUIRE(domains.size() == 1);
  CHECK(domains.front().sites.size() == 9);
}

TEST_CASE("fully asymmetric lattice has no multi-site domain") {
  const Lattice lat = chain({0.1, 0.2, 0.3, 0.4, 0.5}, {1, 1, 1, 1});
  for (const auto& d : detect_maximal_domains(lat, reversal(5), kTol)) CHECK(d.sites.size() <= 1);
}

TEST_CASE("disconnected set is not a domain") {
  const Lattice lat = uniform_chain(5);
  const DomainCheck dc = verify_domain(lat, SiteMapping::identity(5), ids({1, 3}), kTol);
  CHECK_FALSE(dc.connected);
  CHECK_FALSE(dc.valid);
}

TEST_CASE("verify_domain errors") {
  const Lattice lat = uniform_chain(3);
  CHECK_THROWS_AS(verify_domain(lat, reversal(3), std::vector<SiteId>{}, kTol), Error);
  CHECK_THROWS_AS(verify_domain(lat, reversal(3), ids({9}), kTol), Error);
}

TEST_CASE("greedy domains against exhaustive enumeration") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 9;  // up to 12 sites
    const Lattice lat = patchy_lattice(rng, n);
    const SiteMapping m = trial % 3 == 0 ? reversal(n) : random_mapping(rng, n);
    const auto oracle = valid_subsets(lat, m);
    for (const auto& d : detect_maximal_domains(lat, m, kTol)) {
      CHECK(verify_domain(lat, m, d.sites, kTol).valid);
      const std::uint32_t mask = mask_of(lat, d.sites);
      CHECK(std::find(oracle.begin(), oracle.end(), mask) != oracle.end());
      const bool superset = std::any_of(oracle.begin(), oracle.end(), [&](std::uint32_t o) {
        return o != mask && (o & mask) == mask;
      });
      CHECK_MESSAGE(!superset, "greedy domain is not maximal in trial " << trial);
    }
  }
}

TEST_CASE("detection is deterministic") {
  const ResolvedDocument doc = fixture("fig1");
  for (const auto& m : doc.maps) {
    const auto a = detect_maximal_domains(doc.lattice, m, kTol);
    const auto b = detect_maximal_domains(doc.lattice, m, kTol);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].sites == b[i].sites);
  }
}
