// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "symlat/currents.hpp"
#include "symlat/dynamics.hpp"
#include "symlat/error.hpp"

using namespace symlat;
using namespace symlat::testing;

TEST_CASE("zero time step is the identity") {
  Rng rng(1);
  const Lattice lat = random_lattice(rng, 8, false);
  const WaveState w{0.5, random_state(rng, 8)};
  const WaveState out = evolve(lat, w, 0.5);
  CHECK((out.psi - w.psi).norm() < 1e-13);
  CHECK(out.t == 0.5);
}

TEST_CASE("eigenstates only pick up a phase") {
  const Lattice lat = uniform_chain(5, 0.3, 0.8);
  const Propagator prop(lat);
  for (const auto& st : prop.spectrum().states) {
    const WaveState out = prop.evolve({0.0, st.amplitudes}, 2.5);
    const Complex phase = std::exp(Complex(0, -st.energy * 2.5));
    CHECK((out.psi - phase * st.amplitudes).norm() < 1e-12);
  }
}

TEST_CASE("two-site Rabi half period") {
  const Lattice lat = uniform_chain(2);
  Eigen::VectorXcd psi(2);
  psi << 1, 0;
  const WaveState out = evolve(lat, {0.0, psi}, std::numbers::pi / 2);
  CHECK(std::abs(out.psi(0)) < 1e-12);
  CHECK(std::abs(out.psi(1) - Complex(0, -1)) < 1e-12);
}

TEST_CASE("backwards evolution inverts forwards evolution") {
  Rng rng(2);
  const Lattice lat = random_lattice(rng, 10, false);
  const Propagator prop(lat);
  const WaveState w{0.0, random_state(rng, 10)};
  const WaveState back = prop.evolve(prop.evolve(w, 3.0), 0.0);
  CHECK((back.psi - w.psi).norm() < 1e-12);
}

TEST_CASE("norm conservation over long times") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 4 + 6 * trial;
    const Lattice lat = random_lattice(rng, n, trial % 2 == 0);
    const Propagator prop(lat);
    const WaveState w{0.0, random_state(rng, n)};
    for (double t = 0.0; t <= 100.0; t += 12.5) CHECK(std::abs(prop.evolve(w, t).psi.norm() - 1.0) <= 1e-10);
  }
}

TEST_CASE("continuity equation for arbitrary states") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + 3 * trial;  // up to 59
    const Lattice lat = random_lattice(rng, n, trial % 2 == 0);
    const SiteMapping m = random_mapping(rng, n);
    const Propagator prop(lat);
    const WaveState w = prop.evolve({0.0, random_state(rng, n)}, uniform(rng, 0, 10));
    CHECK(continuity_residual(lat, m, w).maxCoeff() <= 1e-9);
    CHECK(continuity_residual(lat, SiteMapping::identity(n), w).maxCoeff() <= 1e-9);
  }
}

TEST_CASE("analytic derivative matches a central difference") {
  Rng rng(5);
  const double h = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial;
    const Lattice lat = random_lattice(rng, n, trial % 2 == 1);
    const SiteMapping m = random_mapping(rng, n);
    const Propagator prop(lat);
    const WaveState w0{0.0, random_state(rng, n)};
    const double t = uniform(rng, 0, 5);
    const Eigen::VectorXcd fd = (nonlocal_density(prop.evolve(w0, t + h).psi, m) -
                                 nonlocal_density(prop.evolve(w0, t - h).psi, m)) /
                                (2 * h);
    const Eigen::VectorXcd exact = sigma_time_derivative(lat, m, prop.evolve(w0, t).psi);
    CHECK((fd - exact).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("stationary states: continuity residual is the Kirchhoff residual") {
  Rng rng(6);
  const Lattice lat = random_lattice(rng, 9, true);
  const SiteMapping m = random_mapping(rng, 9);
  const Propagator prop(lat);
  for (const auto& st : prop.spectrum().states) {
    CHECK(sigma_time_derivative(lat, m, st.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::VectorXd r = continuity_residual(lat, m, {0.0, st.amplitudes});
    const KirchhoffReport k = kirchhoff_residual(st, lat, m);
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(r(static_cast<Eigen::Index>(i)) - k.sites[i].residual) < 1e-12);
  }
}

TEST_CASE("dimension and hermiticity errors") {
  const Lattice lat = uniform_chain(3);
  CHECK_THROWS_AS(sigma_time_derivative(lat, reversal(3), Eigen::VectorXcd::Zero(2)), Error);
  CHECK_THROWS_AS(Propagator(chain({Complex(0, 1), 0.0}, {1.0})), Error);
}
