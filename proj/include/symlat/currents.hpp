// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file currents.hpp
 * @brief Non-local densities, currents, source terms and Kirchhoff balance.
 *
 * With n' = T(n) for the active mapping T:
 *
 *   sigma_n  = conj(psi_n) psi_n'
 *   q_{n,m}  = -i (h_{n',m'} conj(psi_n) psi_m' - conj(h_{n,m}) psi_n' conj(psi_m))
 *   j_{n,m}  = -i (h_{n,m} conj(psi_n) psi_m - conj(h_{n,m}) psi_n conj(psi_m))
 *   beta_n   = v_n' - conj(v_n)
 *
 * Hopping amplitudes of non-adjacent pairs read as zero, so q is defined on
 * every ordered pair but only pairs where (n,m) or (n',m') are adjacent can
 * carry a nonzero value. That set is the current support.
 *
 * Index-based functions take matrix indices (declaration order); the SiteId
 * overloads are the public face.
 */

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"
#include "symlat/spectral.hpp"
#include "symlat/tolerances.hpp"

namespace symlat {

Eigen::VectorXcd nonlocal_density(const Eigen::VectorXcd& psi, const SiteMapping& m);

bool in_current_support(const Lattice& lat, const SiteMapping& m, std::size_t n, std::size_t to);

/// q_{n,to} by index, no support check.
Complex nonlocal_current_at(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                            std::size_t n, std::size_t to);
/// Throws OutOfSupport when neither (n,to) nor (n',to') is adjacent.
Complex nonlocal_current(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                         SiteId n, SiteId to);

/// Ordinary probability current; only defined for neighbours (OutOfSupport
/// otherwise).
Complex probability_current_at(const Eigen::VectorXcd& psi, const Lattice& lat, std::size_t n,
                               std::size_t to);
Complex probability_current(const Eigen::VectorXcd& psi, const Lattice& lat, SiteId n, SiteId to);

/// q_{n,m} + q_{m,n} expressed through Delta = h_{n,m} - h_{n',m'}:
///   i (Delta conj(psi_n) psi_m' + conj(Delta) conj(psi_m) psi_n').
Complex direction_inversion_defect_at(const Eigen::VectorXcd& psi, const Lattice& lat,
                                      const SiteMapping& m, std::size_t n, std::size_t to);

struct SourceTerm {
  Complex q;        ///< source q_n from the two neighbour sums
  Complex beta;     ///< v_n' - conj(v_n)
  Complex sigma;    ///< conj(psi_n) psi_n'
  Complex product;  ///< -i beta sigma
};

SourceTerm source_term_at(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                          std::size_t n);
SourceTerm source_term(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                       SiteId n);

/// Sum of q_{n,m} over m in N(n) plus over m with m' in N(n') but m not in
/// N(n). Equals q_n identically.
Complex kirchhoff_outflow_at(const Eigen::VectorXcd& psi, const Lattice& lat,
                             const SiteMapping& m, std::size_t n);

struct CurrentEntry {
  SiteId n;
  SiteId m;
  Complex q;
  std::optional<Complex> j;  ///< present when n and m are neighbours
};

struct CurrentField {
  std::string mapping_name;
  std::vector<CurrentEntry> entries;  ///< every ordered support pair, ascending (n, m)
};

CurrentField current_field(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m);

struct KirchhoffSite {
  SiteId id;
  double residual = 0.0;
  Complex outflow;
  SourceTerm source;
  bool green = false;  ///< |beta| > tol.symmetry
  bool red = false;    ///< mapping does not keep the connectivity
  bool white() const { return !green && !red; }
};

struct KirchhoffReport {
  std::vector<KirchhoffSite> sites;  ///< declaration order
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool ok() const { return max_residual <= tolerance; }
};

/// Residual |outflow - i beta sigma| per site; only an identity for eigenstates.
KirchhoffReport kirchhoff_residual(const Eigen::VectorXcd& psi, const Lattice& lat,
                                   const SiteMapping& m, const Tolerances& tol = {});
KirchhoffReport kirchhoff_residual(const EigenState& state, const Lattice& lat,
                                   const SiteMapping& m, const Tolerances& tol = {});

struct ColumnRange {
  int x = 0;
  int y_min = 0;
  int y_max = 0;
};

/// Vertically confined set of consecutive columns.
struct Region {
  std::string name;
  std::vector<ColumnRange> columns;  ///< ascending, consecutive x
  std::vector<SiteId> sites;         ///< ascending

  int x_min() const { return columns.front().x; }
  int x_max() const { return columns.back().x; }
  const ColumnRange& column(int x) const;  ///< throws ColumnOutsideRegion
};

/// Throws InvalidRegion when columns are empty, not consecutive, contain no
/// site, are disconnected, or a boundary site hops vertically out of its
/// column range.
Region make_region(const Lattice& lat, std::string name, std::vector<ColumnRange> columns);

enum class RowRange {
  exclusive,  ///< rows y_min+1 .. y_max-1
  inclusive,  ///< rows y_min .. y_max
};

/// Q_{x,x+direction}: sum of q_{(x,y),(x+direction,y)} over the rows of
/// column x. Missing sites contribute nothing.
Complex summed_current(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                       const Region& r, int x, int direction,
                       RowRange rows = RowRange::exclusive);

}  // namespace symlat
