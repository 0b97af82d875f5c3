// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "support.hpp"
#include "symlat/error.hpp"
#include "symlat/mapping.hpp"

using namespace symlat;
using namespace symlat::testing;

namespace {

std::vector<std::uint32_t> images_of(const Lattice& lat, const SiteMapping& m) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i) out.push_back(lat.id_at(m.image(i)).value);
  return out;
}

// Five-site cross: A centre, B left, C up, D right, E down.
Lattice cross() {
  return Lattice::build("cross",
                        {{sid(1), 0, 0}, {sid(2), -1, 0}, {sid(3), 0, 1}, {sid(4), 1, 0}, {sid(5), 0, -1}},
                        {{sid(1), sid(2), 1.0}, {sid(1), sid(3), 1.0}, {sid(1), sid(4), 1.0}, {sid(1), sid(5), 1.0}},
                        true);
}

}  // namespace

TEST_CASE("reflection of a 3-chain") {
  const Lattice lat = uniform_chain(3);
  const SiteMapping r = build_mapping(lat, "r", Reflection{ReflectionAxis::vertical, 4}, {});
  CHECK(images_of(lat, r) == std::vector<std::uint32_t>{3, 2, 1});
  CHECK(r.is_involution());
  CHECK_FALSE(r.is_identity());
  CHECK(apply(lat, r, sid(1), 2) == sid(1));
  CHECK(apply(lat, r, sid(1), 0) == sid(1));
  CHECK(apply(lat, r, sid(1), 1) == sid(3));
}

TEST_CASE("identity mapping") {
  const Lattice lat = uniform_chain(5);
  const SiteMapping id = build_mapping(lat, "id", IdentityMap{}, {});
  CHECK(id.is_identity());
  CHECK(images_of(lat, id) == std::vector<std::uint32_t>{1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(keeps_connectivity_at(lat, id, i));
}

TEST_CASE("second-class mapping on the cross") {
  const Lattice lat = cross();
  const std::vector<std::pair<SiteId, SiteId>> overrides{{sid(2), sid(5)}, {sid(5), sid(4)}};
  const SiteMapping p = build_mapping(lat, "p", Reflection{ReflectionAxis::vertical, 0}, overrides);
  // B -> E -> D -> B, A and C fixed.
  CHECK(images_of(lat, p) == std::vector<std::uint32_t>{1, 5, 3, 2, 4});
  CHECK_FALSE(p.is_involution());
  CHECK(apply(lat, p, sid(2), 3) == sid(2));
  CHECK(apply(lat, p, sid(2), -1) == sid(4));
}

TEST_CASE("overrides that break bijectivity are rejected") {
  const Lattice lat = cross();
  const std::vector<std::pair<SiteId, SiteId>> overrides{{sid(2), sid(3)}};
  try {
    (void)build_mapping(lat, "bad", Reflection{ReflectionAxis::vertical, 0}, overrides);
    FAIL("expected NotBijective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBijective);
  }
}

TEST_CASE("ring translation powers") {
  const Lattice lat = ring(15);
  std::vector<std::size_t> images(15);
  for (std::size_t i = 0; i < 15; ++i) images[i] = (i + 3) % 15;
  const SiteMapping t = permutation(images, "t");
  CHECK(apply(lat, t, sid(0), -1) == sid(12));
  CHECK(apply(lat, t, sid(0), 2) == sid(6));
  CHECK(apply(lat, t, sid(0), 5) == sid(0));
  CHECK(apply(lat, t, sid(7), 0) == sid(7));
}

TEST_CASE("inverse property and composition") {
  Rng rng(5);
  const Lattice lat = random_lattice(rng, 12, true);
  const SiteMapping a = random_mapping(rng, 12);
  const SiteMapping b = random_mapping(rng, 12);
  for (std::size_t i = 0; i < 12; ++i) {
    const SiteId n = lat.id_at(i);
    CHECK(apply(lat, a, apply(lat, a, n, 1), -1) == n);
    CHECK(a.inverse("ai").image(a.image(i)) == i);
  }
  const SiteMapping* parts[] = {&a, &b};
  const SiteMapping ab = compose(lat, "ab", parts);
  for (std::size_t i = 0; i < 12; ++i) CHECK(ab.image(i) == b.image(a.image(i)));
  const auto* comp = std::get_if<Composition>(&ab.provenance());
  REQUIRE(comp != nullptr);
  CHECK(comp->parts == std::vector<std::string>{"random", "random"});
}

TEST_CASE("geometric kinds on a square") {
  std::vector<Site> sites;
  std::vector<Hopping> hops;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) sites.push_back(Site{sid(static_cast<std::uint32_t>(y * 3 + x + 1)), x, y, 0.0});
  }
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 2; ++x) {
      hops.push_back({sid(static_cast<std::uint32_t>(y * 3 + x + 1)), sid(static_cast<std::uint32_t>(y * 3 + x + 2)), 1.0});
      hops.push_back({sid(static_cast<std::uint32_t>(x * 3 + y + 1)), sid(static_cast<std::uint32_t>(x * 3 + y + 4)), 1.0});
    }
  }
  const Lattice lat = Lattice::build("sq", sites, hops, true);
  const SiteMapping diag = build_mapping(lat, "d", Reflection{ReflectionAxis::diagonal, 0}, {});
  // (x, y) -> (y, x)
  CHECK(apply(lat, diag, sid(2), 1) == sid(4));
  CHECK(apply(lat, diag, sid(5), 1) == sid(5));
  const SiteMapping rot = build_mapping(lat, "r", Rotation{2, 2, 1}, {});
  // counter-clockwise about (1, 1): (2, 1) -> (1, 2)
  CHECK(apply(lat, rot, sid(6), 1) == sid(8));
  CHECK(apply(lat, rot, sid(6), 4) == sid(6));
  const SiteMapping hor = build_mapping(lat, "h", Reflection{ReflectionAxis::horizontal, 2}, {});
  CHECK(apply(lat, hor, sid(1), 1) == sid(7));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    CHECK(keeps_connectivity_at(lat, diag, i));
    CHECK(keeps_connectivity_at(lat, rot, i));
  }
}

TEST_CASE("missing images default to identity unless strict") {
  const Lattice lat = uniform_chain(3);
  const SiteMapping t = build_mapping(lat, "t", Translation{5, 0}, {});
  CHECK(t.is_identity());
  try {
    (void)build_mapping(lat, "t", Translation{5, 0}, {}, MappingOptions{true});
    FAIL("expected GeometricImageMissing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeometricImageMissing);
  }
}

TEST_CASE("translation onto occupied sites without a cycle is not bijective") {
  const Lattice lat = uniform_chain(3);
  CHECK_THROWS_AS(build_mapping(lat, "t", Translation{1, 0}, {}), Error);
}

TEST_CASE("keeps connectivity") {
  const Lattice lat = uniform_chain(5);
  const SiteMapping r = reversal(5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(keeps_connectivity_at(lat, r, i));

  const ResolvedDocument stub = fixture("fig2c");
  CHECK_FALSE(keeps_connectivity(stub.lattice, stub.map("r"), sid(3)));
  CHECK(keeps_connectivity(stub.lattice, stub.map("r"), sid(2)));
}

TEST_CASE("permutation matrix convention") {
  const SiteMapping p = permutation({1, 2, 0});
  const Eigen::MatrixXd m = permutation_matrix(p);
  CHECK(m(1, 0) == 1.0);
  CHECK(m(2, 1) == 1.0);
  CHECK(m(0, 2) == 1.0);
  CHECK(m.sum() == 3.0);
}

TEST_CASE("describe provenance") {
  CHECK(describe(IdentityMap{}) == "identity");
  CHECK_FALSE(describe(Reflection{ReflectionAxis::vertical, 7}).empty());
}
