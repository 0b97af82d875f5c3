// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace symlat {

/// Numeric thresholds shared by every module.
///
/// All values are absolute unless noted. `from_environment()` multiplies
/// every field by SYMLAT_TOLERANCE_SCALE when that variable is set.
struct Tolerances {
  double symmetry = 1e-12;     ///< Hamiltonian entry comparison under a mapping
  double eigen = 1e-10;        ///< eigen-residual and orthonormality
  double degeneracy = 1e-8;    ///< relative to max(max|E|, 1)
  double hermitian = 1e-12;    ///< largest |Im v| accepted by the eigensolver
  double commutator = 1e-10;   ///< Frobenius norm of HP - PH
  double kirchhoff = 1e-9;     ///< per-site Kirchhoff / continuity residual
  double amplitude = 1e-9;     ///< amplitude equalities in theorem checks
  double attachment = 1e-8;    ///< |a_B| below this exempts a loop state
  double norm = 1e-10;         ///< norm drift under time evolution

  Tolerances scaled(double factor) const;

  /// Kirchhoff tolerance for a Hamiltonian whose largest entry is `max_entry`;
  /// grows linearly once entries exceed 10.
  double kirchhoff_for(double max_entry) const;

  static Tolerances from_environment();
};

}  // namespace symlat
