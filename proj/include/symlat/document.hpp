// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file document.hpp
 * @brief Turns a parsed .lat document into a Lattice, its mappings and
 *        regions. Errors carry the source location of the declaration
 *        that caused them.
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "symlat/currents.hpp"
#include "symlat/lat_format.hpp"
#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"

namespace symlat {

struct ResolvedDocument {
  LatticeSpecDocument spec;
  Lattice lattice;
  std::vector<SiteMapping> maps;  ///< declaration order
  std::vector<Region> regions;    ///< declaration order

  /// Throws UnknownReference.
  const SiteMapping& map(std::string_view name) const;
};

/// Throws ValidationError for a document without lattice or sites, and
/// passes lattice, mapping and region errors on with locations attached.
ResolvedDocument resolve_document(LatticeSpecDocument spec);

/// Reads, parses and resolves a file. Throws IoError when unreadable.
ResolvedDocument load_document(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace symlat
