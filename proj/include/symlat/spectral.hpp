// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectral.hpp
 * @brief Dense Hermitian eigendecomposition (cyclic Jacobi) and
 *        symmetry-adapted eigenbases.
 *
 * Real symmetric input runs a real-arithmetic path, so every eigenvector is
 * real. Each vector is normalised so that its first significant amplitude
 * (in site declaration order) is real and positive.
 */

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"
#include "symlat/tolerances.hpp"

namespace symlat {

enum class Gauge { real, complex };

struct EigenState {
  std::size_t index = 0;
  double energy = 0.0;
  Eigen::VectorXcd amplitudes;
  Gauge gauge = Gauge::complex;
  /// <a|P|a> after symmetry adaptation; +-1 for definite parity.
  std::optional<Complex> symmetry_expectation;
};

struct Spectrum {
  std::vector<EigenState> states;  ///< ascending energy
  std::vector<std::vector<std::size_t>> degeneracy_groups;
  std::string adapted_to;          ///< mapping name, empty when not adapted
  bool commutes = true;            ///< false when adaptation was refused
};

struct JacobiOptions {
  int max_sweeps = 100;
};

struct RealEigenSystem {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< columns
  int sweeps = 0;
};

struct HermitianEigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi on a real symmetric matrix.
RealEigenSystem jacobi_eigensystem(const Eigen::MatrixXd& a, const JacobiOptions& options = {});
/// Cyclic Jacobi on a complex Hermitian matrix (complex phase removed per pivot).
HermitianEigenSystem jacobi_eigensystem(const Eigen::MatrixXcd& a,
                                        const JacobiOptions& options = {});

/// Full decomposition; throws NonHermitianInput when an on-site potential has
/// |Im v| > tol.hermitian.
Spectrum eigenstates(const Lattice& lat, const Tolerances& tol = {});
Spectrum eigenstates(const Eigen::MatrixXcd& h, const Tolerances& tol = {});

/// Rotates each degenerate group onto eigenvectors of the permutation P of
/// `m` (of (P + P^T)/2 when m is not an involution). When ||HP - PH|| >
/// tol.commutator the spectrum is returned unchanged with commutes = false.
Spectrum symmetry_adapt(const Spectrum& spectrum, const Lattice& lat, const SiteMapping& m,
                        const Tolerances& tol = {});

/// Frobenius norm of HP - PH.
double commutator_norm(const Lattice& lat, const SiteMapping& m);

std::vector<std::vector<std::size_t>> degeneracy_groups(const std::vector<double>& energies,
                                                        double relative_tol);

/// Multiplies by a unit phase so the first amplitude above `threshold` is
/// real and positive.
void fix_phase(Eigen::VectorXcd& v, double threshold = 1e-8);

}  // namespace symlat
