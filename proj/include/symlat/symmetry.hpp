// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"

namespace symlat {

/// A pair (m, n) inside a candidate domain with H(m,n) != H(m',n').
struct PairViolation {
  SiteId m;
  SiteId n;
  Complex entry;         ///< H(m, n)
  Complex mapped_entry;  ///< H(m', n')
};

struct DomainCheck {
  bool valid = false;
  bool connected = false;
  std::vector<PairViolation> violations;  ///< unordered pairs, m <= n by SiteId
};

/// Connected site set on which H(m,n) = H(m',n') holds for every pair,
/// non-adjacent pairs included.
struct SymmetryDomain {
  std::string mapping_name;
  std::vector<SiteId> sites;  ///< ascending
  bool connected = true;
};

/// Throws EmptySet or UnknownSite.
DomainCheck verify_domain(const Lattice& lat, const SiteMapping& m, std::span<const SiteId> sites,
                          double tol);

/// Greedy breadth-first growth from every site with v_n = v_n'. Results are
/// valid and inclusion-maximal but not necessarily every maximal domain.
/// Deterministic: seeds and candidates are visited in ascending SiteId.
std::vector<SymmetryDomain> detect_maximal_domains(const Lattice& lat, const SiteMapping& m,
                                                   double tol);

}  // namespace symlat
