// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "symlat/error.hpp"
#include "symlat/lat_format.hpp"

using namespace symlat;
using namespace symlat::testing;

namespace {

Error parse_error(std::string_view text) {
  try {
    (void)resolve_document(parse_lattice_spec(text));
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorCode::InvalidArgument, "unreachable");
}

}  // namespace

TEST_CASE("minimal site line") {
  const LatticeSpecDocument doc = parse_lattice_spec("site 1 x=0 y=0 v=0\n");
  REQUIRE(doc.sites.size() == 1);
  CHECK(doc.sites[0].id == sid(1));
  CHECK(doc.sites[0].x == 0);
  CHECK(doc.sites[0].y == 0);
  CHECK(doc.sites[0].v == Complex(0, 0));
}

TEST_CASE("complex literals") {
  const LatticeSpecDocument doc =
      parse_lattice_spec("site 1 x=0 y=0 v=0\nsite 2 x=1 y=0 v=-0.25,1e-3\nhop 1 2 h=1,0.5\n");
  REQUIRE(doc.hoppings.size() == 1);
  CHECK(doc.hoppings[0].h == Complex(1, 0.5));
  CHECK(doc.sites[1].v == Complex(-0.25, 1e-3));
  CHECK(doc.hop_where[0].line == 3);
}

TEST_CASE("duplicate map entry is reported at the second line") {
  const Error e = parse_error("site 1 x=0 y=0 v=0\nsite 2 x=1 y=0 v=0\nhop 1 2 h=1\nmap m\n1 -> 1\n1 -> 1\nend\n");
  CHECK(e.code() == ErrorCode::DuplicateDefinition);
  REQUIRE(e.where());
  CHECK(e.where()->line == 6);
}

TEST_CASE("non-bijective map block") {
  const Error e = parse_error("site 1 x=0 y=0 v=0\nsite 2 x=1 y=0 v=0\nmap m\n1 -> 2\n2 -> 2\nend\n");
  CHECK(e.code() == ErrorCode::NotBijective);
  REQUIRE(e.where());
  CHECK(e.where()->line == 5);
}

TEST_CASE("unmapped sites default to identity") {
  const ResolvedDocument doc =
      document("lattice t\nsite 1 x=0 y=0 v=0\nsite 2 x=1 y=0 v=0\nsite 3 x=2 y=0 v=0\nmap m\n1 -> 2\n2 -> 1\nend\n");
  CHECK(doc.map("m").image(2) == 2);
  CHECK(doc.map("m").image(0) == 1);
}

TEST_CASE("syntax errors carry line and column") {
  const Error e = parse_error("site 1 x=0 y=0 v=0\nsite 2 x=1 y=zero v=0\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
  REQUIRE(e.where());
  CHECK(e.where()->line == 2);
  CHECK(e.where()->column > 1);

  const Error f = parse_error("sight 1 x=0 y=0 v=0\n");
  CHECK(f.code() == ErrorCode::SyntaxError);
  CHECK(f.where()->line == 1);
  CHECK(f.where()->column == 1);

  const Error g = parse_error("site 1 x=0 y=0 v=0\nmap m\n1 -> 1\n");
  CHECK(g.code() == ErrorCode::SyntaxError);
}

TEST_CASE("unknown references") {
  const Error dangling = parse_error("lattice t\nsite 1 x=0 y=0 v=0\nhop 1 9 h=1\n");
  CHECK(dangling.code() == ErrorCode::DanglingHopping);
  REQUIRE(dangling.where());
  CHECK(dangling.where()->line == 3);
  const Error e = parse_error("site 1 x=0 y=0 v=0\nsite 2 x=1 y=0 v=0\nhop 1 2 h=1\ndomain d 1 2 map=nope\n");
  CHECK(e.code() == ErrorCode::UnknownReference);
  REQUIRE(e.where());
  CHECK(e.where()->line == 4);
}

TEST_CASE("lattice errors are located") {
  const Error dup = parse_error("site 1 x=0 y=0 v=0\nsite 1 x=1 y=0 v=0\n");
  CHECK(dup.code() == ErrorCode::DuplicateSiteId);
  REQUIRE(dup.where());
  CHECK(dup.where()->line == 2);

  const Error zero = parse_error("lattice t\nsite 1 x=0 y=0 v=0\nsite 2 x=1 y=0 v=0\nhop 1 2 h=0\n");
  CHECK(zero.code() == ErrorCode::ZeroHopping);
  REQUIRE(zero.where());
  CHECK(zero.where()->line == 4);

  const Error grid = parse_error("lattice g grid\nsite 1 x=0 y=0 v=0\nsite 2 x=2 y=0 v=0\nhop 1 2 h=1\n");
  CHECK(grid.code() == ErrorCode::GridViolation);
  REQUIRE(grid.where());
  CHECK(grid.where()->line == 4);
}

TEST_CASE("empty document is a validation error") {
  CHECK(parse_error("").code() == ErrorCode::ValidationError);
  CHECK(parse_error("# only a comment\n\n").code() == ErrorCode::ValidationError);
}

TEST_CASE("parse, serialize and parse is a fixed point") {
  for (const auto& entry : std::filesystem::directory_iterator(SYMLAT_FIXTURE_DIR)) {
    if (entry.path().extension() != ".lat") continue;
    CAPTURE(entry.path().string());
    const std::string text = read_text_file(entry.path());
    const std::string once = serialize_lattice_spec(parse_lattice_spec(text));
    const std::string twice = serialize_lattice_spec(parse_lattice_spec(once));
    CHECK(once == twice);
    // Fixtures are stored in canonical form.
    CHECK(once == text);
  }
}

TEST_CASE("non-canonical input normalizes") {
  const std::string text = "lattice  t\n\nsite 2 x=1 y=0 v=0.50   # tail\nsite 1 x=0 y=0 v=0,0\nhop 2 1 h=1.0,-0\n";
  const std::string once = serialize_lattice_spec(parse_lattice_spec(text));
  CHECK(serialize_lattice_spec(parse_lattice_spec(once)) == once);
  const ResolvedDocument a = document(text);
  const ResolvedDocument b = document(once);
  CHECK((a.lattice.hamiltonian() - b.lattice.hamiltonian()).norm() == 0.0);
}

TEST_CASE("number formatting round-trips doubles") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 6.02214076e23, 0.0}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_complex(Complex(1, 0)) == "1");
  CHECK(format_complex(Complex(1, 0.5)) == "1,0.5");
}
