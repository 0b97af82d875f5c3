// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lat_format.hpp
 * @brief The line-oriented .lat description language.
 *
 * One directive per line, whitespace separated, `#` starts a comment:
 *
 *     lattice <name> [grid]
 *     site <id> x=<int> y=<int> [v=<re>[,<im>]]
 *     hop <a> <b> h=<re>[,<im>]
 *     map <name> [identity | permutation | reflect x|y|diag|anti=<c>
 *                | translate dx=<int> dy=<int> | rotate cx=<c> cy=<c> turns=<int>
 *                | compose <map>...] [strict]
 *       <id> -> <id>
 *     end
 *     region <name> <x>:<ymin>..<ymax>... [map=<name>]
 *     domain <name> <id>... [map=<name>]
 *     chain <name> <id>... [map=<name>]
 *     loop <name> <id>... attach <A> [<B>] [shift <L>] [map=<name>]
 *
 * Reflection lines and rotation centres may be half-integers. A loop without
 * a shift is a reflection loop with `A` on the axis.
 *
 * The parser checks syntax and references between declarations. Lattice
 * validity is checked when the document is resolved (document.hpp).
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlat/currents.hpp"
#include "symlat/error.hpp"
#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"

namespace symlat {

struct MapOverride {
  SiteId from;
  SiteId to;
  SourceLocation where;
};

struct MapDecl {
  std::string name;
  Provenance kind = ExplicitPermutation{};
  bool strict = false;
  std::vector<MapOverride> overrides;
  SourceLocation where;
};

struct RegionDecl {
  std::string name;
  std::vector<ColumnRange> columns;
  std::optional<std::string> map;
  SourceLocation where;
};

/// `domain` and `chain` declarations.
struct SiteListDecl {
  std::string name;
  std::vector<SiteId> sites;
  std::optional<std::string> map;
  SourceLocation where;
};

struct LoopDecl {
  std::string name;
  std::vector<SiteId> sites;
  SiteId a;
  std::optional<SiteId> b;
  std::optional<int> shift;
  std::optional<std::string> map;
  SourceLocation where;
};

struct LatticeSpecDocument {
  std::vector<std::string> header;  ///< leading comment lines, kept verbatim
  std::optional<std::string> name;
  bool grid = false;
  SourceLocation lattice_where;
  std::vector<Site> sites;
  std::vector<SourceLocation> site_where;
  std::vector<Hopping> hoppings;
  std::vector<SourceLocation> hop_where;
  std::vector<MapDecl> maps;
  std::vector<RegionDecl> regions;
  std::vector<SiteListDecl> domains;
  std::vector<SiteListDecl> chains;
  std::vector<LoopDecl> loops;

  const MapDecl* find_map(std::string_view name) const;
};

/// Throws SyntaxError, DuplicateDefinition, UnknownReference or
/// NotBijective, always with a source location.
LatticeSpecDocument parse_lattice_spec(std::string_view text);

/// Canonical text: header comments, then lattice, sites, hops, maps,
/// regions, domains, chains and loops, groups separated by one blank line.
/// Numbers use the shortest representation that reads back exactly.
std::string serialize_lattice_spec(const LatticeSpecDocument& doc);

/// Shortest round-trip decimal form of `v`.
std::string format_number(double v);
/// `re` or `re,im`.
std::string format_complex(Complex z);

}  // namespace symlat
