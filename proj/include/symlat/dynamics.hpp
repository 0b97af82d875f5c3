// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dynamics.hpp
 * @brief Exact propagation through the spectral decomposition, and the
 *        time-dependent non-local continuity balance.
 */

#pragma once

#include <Eigen/Dense>

#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"
#include "symlat/spectral.hpp"
#include "symlat/tolerances.hpp"

namespace symlat {

struct WaveState {
  double t = 0.0;
  Eigen::VectorXcd psi;
};

/// Decomposes H once; every evolve() call is then a diagonal phase.
class Propagator {
 public:
  /// Throws NonHermitianInput.
  explicit Propagator(const Lattice& lat, const Tolerances& tol = {});

  WaveState evolve(const WaveState& initial, double t1) const;
  const Spectrum& spectrum() const noexcept { return spectrum_; }

 private:
  Spectrum spectrum_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

WaveState evolve(const Lattice& lat, const WaveState& initial, double t1,
                 const Tolerances& tol = {});

/// d(sigma_n)/dt = conj((-iH psi)_n) psi_n' + conj(psi_n) (-iH psi)_n'.
Eigen::VectorXcd sigma_time_derivative(const Lattice& lat, const SiteMapping& m,
                                       const Eigen::VectorXcd& psi);

/// Per-site |d(sigma_n)/dt - (outflow_n - i beta_n sigma_n)|.
Eigen::VectorXd continuity_residual(const Lattice& lat, const SiteMapping& m,
                                    const WaveState& state);

}  // namespace symlat
