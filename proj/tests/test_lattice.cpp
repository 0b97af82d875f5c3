// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "support.hpp"
#include "symlat/error.hpp"
#include "symlat/lattice.hpp"

using namespace symlat;
using namespace symlat::testing;

namespace {

ErrorCode build_error(std::vector<Site> sites, std::vector<Hopping> hops, bool grid) {
  try {
    (void)Lattice::build("x", std::move(sites), std::move(hops), grid);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("minimal grid lattice") {
  const Lattice lat = Lattice::build("pair", {{sid(1), 0, 0}, {sid(2), 1, 0}}, {{sid(1), sid(2), 1.0}}, true);
  CHECK(lat.size() == 2);
  CHECK(lat.hoppings().size() == 1);
  CHECK(lat.grid_mode());
  CHECK(lat.adjacent(0, 1));
}

TEST_CASE("build errors") {
  CHECK(build_error({{sid(1), 0, 0}, {sid(2), 0, 0}}, {}, false) == ErrorCode::DuplicateCoordinate);
  CHECK(build_error({{sid(1), 0, 0}, {sid(1), 1, 0}}, {}, false) == ErrorCode::DuplicateSiteId);
  CHECK(build_error({{sid(1), 0, 0}, {sid(2), 1, 1}}, {{sid(1), sid(2), 1.0}}, true) == ErrorCode::GridViolation);
  CHECK(build_error({{sid(1), 0, 0}, {sid(2), 2, 0}}, {{sid(1), sid(2), 1.0}}, true) == ErrorCode::GridViolation);
  CHECK(build_error({{sid(1), 0, 0}}, {{sid(1), sid(9), 1.0}}, false) == ErrorCode::DanglingHopping);
  CHECK(build_error({{sid(1), 0, 0}, {sid(2), 1, 0}}, {{sid(1), sid(2), 0.0}}, false) == ErrorCode::ZeroHopping);
  CHECK(build_error({{sid(1), 0, 0}}, {{sid(1), sid(1), 1.0}}, false) == ErrorCode::SelfHopping);
  CHECK(build_error({{sid(1), 0, 0}, {sid(2), 1, 0}}, {{sid(1), sid(2), 1.0}, {sid(2), sid(1), 1.0}}, false) ==
        ErrorCode::DuplicateHopping);
}

TEST_CASE("diagonal hop is fine outside grid mode") {
  const Lattice lat = Lattice::build("d", {{sid(1), 0, 0}, {sid(2), 1, 1}}, {{sid(1), sid(2), 1.0}}, false);
  CHECK(lat.adjacent(0, 1));
}

TEST_CASE("error item points at the offending hopping") {
  try {
    (void)Lattice::build("x", {{sid(1), 0, 0}, {sid(2), 1, 0}}, {{sid(1), sid(2), 1.0}, {sid(2), sid(7), 1.0}}, false);
    FAIL("expected DanglingHopping");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DanglingHopping);
    REQUIRE(e.item().has_value());
    CHECK(*e.item() == 1);
  }
}

TEST_CASE("neighbors") {
  const Lattice lat = uniform_chain(3);
  CHECK(neighbors(lat, sid(2)) == std::vector<SiteId>{sid(1), sid(3)});
  CHECK(neighbors(lat, sid(1)) == std::vector<SiteId>{sid(2)});
  const Lattice lone = Lattice::build("one", {{sid(4), 0, 0}}, {}, false);
  CHECK(neighbors(lone, sid(4)).empty());
  CHECK_THROWS_AS(neighbors(lat, sid(9)), Error);
}

TEST_CASE("neighbors are sorted by id, not declaration order") {
  const Lattice lat = Lattice::build("star", {{sid(5), 0, 0}, {sid(9), 1, 0}, {sid(2), -1, 0}, {sid(7), 0, 1}},
                                     {{sid(5), sid(9), 1.0}, {sid(5), sid(2), 1.0}, {sid(7), sid(5), 1.0}}, true);
  CHECK(neighbors(lat, sid(5)) == std::vector<SiteId>{sid(2), sid(7), sid(9)});
}

TEST_CASE("hamiltonian matrix") {
  const Eigen::MatrixXcd two = hamiltonian_matrix(uniform_chain(2));
  CHECK(two(0, 0) == Complex(0, 0));
  CHECK(two(0, 1) == Complex(1, 0));
  CHECK(two(1, 0) == Complex(1, 0));

  Eigen::MatrixXcd three(3, 3);
  three << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  CHECK(hamiltonian_matrix(uniform_chain(3)) == three);

  const Lattice c = chain({0.0, 0.0}, {Complex(0.5, 0.2)});
  CHECK(c.entry(0, 1) == Complex(0.5, 0.2));
  CHECK(c.entry(1, 0) == Complex(0.5, -0.2));
}

TEST_CASE("hopping direction is the declared one") {
  const Lattice lat =
      Lattice::build("x", {{sid(1), 0, 0}, {sid(2), 1, 0}}, {{sid(2), sid(1), Complex(0.3, 0.4)}}, false);
  CHECK(lat.entry(1, 0) == Complex(0.3, 0.4));
  CHECK(lat.entry(0, 1) == Complex(0.3, -0.4));
}

TEST_CASE("structural invariants on random lattices") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 17;
    const Lattice lat = random_lattice(rng, n, trial % 2 == 0);
    const Eigen::MatrixXcd h = hamiltonian_matrix(lat);
    CHECK((h - h.adjoint()).norm() == 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK((h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != Complex(0, 0)) == lat.adjacent(i, j));
        CHECK(lat.adjacent(i, j) == lat.adjacent(j, i));
      }
    }
    CHECK(is_connected(lat, indices_of(lat, std::vector<SiteId>{lat.id_at(0)})));
  }
}

TEST_CASE("lookups") {
  const Lattice lat = uniform_chain(4);
  CHECK(lat.index_of(sid(3)) == 2);
  CHECK_FALSE(lat.find(sid(8)).has_value());
  CHECK(lat.index_at(4, 0) == std::optional<std::size_t>(3));
  CHECK_FALSE(lat.index_at(4, 1).has_value());
  CHECK(lat.max_abs_entry() == 1.0);
  CHECK(lat.is_real(1e-12));
  try {
    (void)lat.index_of(sid(42));
    FAIL("expected UnknownSite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSite);
  }
}

TEST_CASE("complex potentials are kept") {
  const Lattice lat = chain({Complex(0.1, 0.5), 0.0}, {1.0});
  CHECK(lat.max_imag_potential() == doctest::Approx(0.5));
  CHECK_FALSE(lat.is_real(1e-12));
}

TEST_CASE("connectivity") {
  const Lattice lat = Lattice::build("split", {{sid(1), 0, 0}, {sid(2), 1, 0}, {sid(3), 5, 0}},
                                     {{sid(1), sid(2), 1.0}}, false);
  const std::vector<SiteId> pair{sid(1), sid(2)};
  const std::vector<SiteId> apart{sid(1), sid(3)};
  CHECK(is_connected(lat, indices_of(lat, pair)));
  CHECK_FALSE(is_connected(lat, indices_of(lat, apart)));
}
