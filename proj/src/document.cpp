// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/document.hpp"

#include <fstream>
#include <sstream>

#include "symlat/error.hpp"

namespace symlat {

namespace {

bool is_site_error(ErrorCode c) {
  return c == ErrorCode::DuplicateSiteId || c == ErrorCode::DuplicateCoordinate;
}

Lattice build_lattice(const LatticeSpecDocument& spec) {
  try {
    return Lattice::build(*spec.name, spec.sites, spec.hoppings, spec.grid);
  } catch (const Error& e) {
    if (e.item()) {
      const auto& where = is_site_error(e.code()) ? spec.site_where : spec.hop_where;
      if (*e.item() < where.size()) throw e.at(where[*e.item()]);
    }
    throw e.at(spec.lattice_where);
  }
}

SiteMapping build_map(const Lattice& lat, const MapDecl& decl, const std::vector<SiteMapping>& done) {
  std::vector<std::pair<SiteId, SiteId>> overrides;
  for (const auto& o : decl.overrides) overrides.emplace_back(o.from, o.to);
  try {
    if (const auto* c = std::get_if<Composition>(&decl.kind)) {
      std::vector<const SiteMapping*> parts;
      for (const auto& name : c->parts) {
        for (const auto& m : done) {
          if (m.name() == name) parts.push_back(&m);
        }
      }
      return compose(lat, decl.name, parts, overrides);
    }
    return build_mapping(lat, decl.name, decl.kind, overrides, MappingOptions{decl.strict});
  } catch (const Error& e) {
    throw e.at(decl.where);
  }
}

}  // namespace

const SiteMapping& ResolvedDocument::map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name() == name) return m;
  }
  throw Error(ErrorCode::UnknownReference, "map '" + std::string(name) + "' is not declared");
}

ResolvedDocument resolve_document(LatticeSpecDocument spec) {
  if (!spec.name) {
    throw Error(ErrorCode::ValidationError, "document declares no lattice", SourceLocation{1, 1});
  }
  if (spec.sites.empty()) {
    throw Error(ErrorCode::ValidationError, "lattice '" + *spec.name + "' has no sites", spec.lattice_where);
  }
  Lattice lat = build_lattice(spec);
  std::vector<SiteMapping> maps;
  for (const auto& decl : spec.maps) maps.push_back(build_map(lat, decl, maps));
  std::vector<Region> regions;
  for (const auto& decl : spec.regions) {
    try {
      regions.push_back(make_region(lat, decl.name, decl.columns));
    } catch (const Error& e) {
      throw e.at(decl.where);
    }
  }
  return ResolvedDocument{std::move(spec), std::move(lat), std::move(maps), std::move(regions)};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ResolvedDocument load_document(const std::filesystem::path& path) {
  return resolve_document(parse_lattice_spec(read_text_file(path)));
}

}  // namespace symlat
