// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/dynamics.hpp"

#include "symlat/currents.hpp"
#include "symlat/error.hpp"

namespace symlat {

namespace {

void require_dimension(const Eigen::VectorXcd& psi, std::size_t n) {
  if (static_cast<std::size_t>(psi.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(psi.size()) +
                                                  " amplitudes, lattice has " + std::to_string(n) +
                                                  " sites");
  }
}

}  // namespace

Propagator::Propagator(const Lattice& lat, const Tolerances& tol) : spectrum_(eigenstates(lat, tol)) {
  const auto n = static_cast<Eigen::Index>(lat.size());
  energies_.resize(n);
  vectors_.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const EigenState& s = spectrum_.states[static_cast<std::size_t>(k)];
    energies_(k) = s.energy;
    vectors_.col(k) = s.amplitudes;
  }
}

WaveState Propagator::evolve(const WaveState& initial, double t1) const {
  require_dimension(initial.psi, static_cast<std::size_t>(vectors_.rows()));
  const double dt = t1 - initial.t;
  if (dt == 0.0) return {t1, initial.psi};
  Eigen::VectorXcd c = vectors_.adjoint() * initial.psi;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(1.0, -energies_(k) * dt);
  return {t1, vectors_ * c};
}

WaveState evolve(const Lattice& lat, const WaveState& initial, double t1, const Tolerances& tol) {
  require_dimension(initial.psi, lat.size());
  return Propagator(lat, tol).evolve(initial, t1);
}

Eigen::VectorXcd sigma_time_derivative(const Lattice& lat, const SiteMapping& m,
                                       const Eigen::VectorXcd& psi) {
  require_dimension(psi, lat.size());
  const Eigen::VectorXcd dpsi = Complex(0.0, -1.0) * (lat.hamiltonian() * psi);
  Eigen::VectorXcd out(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const auto ip = static_cast<Eigen::Index>(m.image(static_cast<std::size_t>(i)));
    out(i) = std::conj(dpsi(i)) * psi(ip) + std::conj(psi(i)) * dpsi(ip);
  }
  return out;
}

Eigen::VectorXd continuity_residual(const Lattice& lat, const SiteMapping& m,
                                    const WaveState& state) {
  const Eigen::VectorXcd dsigma = sigma_time_derivative(lat, m, state.psi);
  Eigen::VectorXd r(state.psi.size());
  for (std::size_t n = 0; n < lat.size(); ++n) {
    const SourceTerm s = source_term_at(state.psi, lat, m, n);
    const Complex rhs = kirchhoff_outflow_at(state.psi, lat, m, n) + s.product;
    r(static_cast<Eigen::Index>(n)) = std::abs(dsigma(static_cast<Eigen::Index>(n)) - rhs);
  }
  return r;
}

}  // namespace symlat
