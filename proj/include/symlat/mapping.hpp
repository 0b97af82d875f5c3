// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file mapping.hpp
 * @brief Bijective site mappings n -> n' used to describe (local) symmetries.
 *
 * A SiteMapping is a permutation of a lattice's sites. Geometric kinds
 * (reflection, translation, rotation) are evaluated on integer grid
 * coordinates; line offsets and rotation centres are carried doubled so
 * half-integer axes are exact. Sites whose geometric image has no site map
 * to themselves unless strict mode is requested. Explicit overrides are
 * applied after the geometric base, which is how permutation mappings that
 * have no geometric reading are built.
 */

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symlat/lattice.hpp"

namespace symlat {

enum class ReflectionAxis {
  vertical,      ///< line x = c
  horizontal,    ///< line y = c
  diagonal,      ///< line y = x + c
  antidiagonal,  ///< line y = -x + c
};

struct IdentityMap {};
struct Reflection {
  ReflectionAxis axis = ReflectionAxis::vertical;
  int offset2 = 0;  ///< 2c
};
struct Translation {
  int dx = 0;
  int dy = 0;
};
struct Rotation {
  int cx2 = 0;  ///< 2 * centre x
  int cy2 = 0;  ///< 2 * centre y
  int quarter_turns = 1;  ///< counter-clockwise; negative turns clockwise
};
struct ExplicitPermutation {};
struct Composition {
  std::vector<std::string> parts;  ///< applied first to last
};

using Provenance =
    std::variant<IdentityMap, Reflection, Translation, Rotation, ExplicitPermutation, Composition>;

std::string describe(const Provenance& p);

class SiteMapping {
 public:
  /// Throws NotBijective unless `images` is a permutation of 0..n-1.
  SiteMapping(std::string name, Provenance provenance, std::vector<std::size_t> images);

  static SiteMapping identity(std::size_t n, std::string name = "identity");

  const std::string& name() const noexcept { return name_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return images_.size(); }

  std::size_t image(std::size_t index) const { return images_.at(index); }
  std::size_t preimage(std::size_t index) const { return inverse_.at(index); }
  std::span<const std::size_t> images() const noexcept { return images_; }

  /// T^power applied to a matrix index; negative powers use the inverse.
  std::size_t apply(std::size_t index, int power) const;

  bool is_identity() const;
  bool is_involution() const;

  SiteMapping inverse(std::string name) const;

 private:
  std::string name_;
  Provenance provenance_;
  std::vector<std::size_t> images_;
  std::vector<std::size_t> inverse_;
};

struct MappingOptions {
  bool strict = false;  ///< missing geometric images raise GeometricImageMissing
};

/// Geometric image of every site (identity and explicit kinds give n -> n).
/// Composition is not geometric and is rejected with InvalidArgument.
std::vector<std::size_t> geometric_images(const Lattice& lat, const Provenance& kind,
                                          const MappingOptions& options,
                                          std::span<const SiteId> covered = {});

/// Builds T from a geometric base plus overrides `from -> to`.
SiteMapping build_mapping(const Lattice& lat, std::string name, const Provenance& kind,
                          std::span<const std::pair<SiteId, SiteId>> overrides,
                          const MappingOptions& options = {});

/// Composite mapping applying `parts` in order, then `overrides`.
SiteMapping compose(const Lattice& lat, std::string name,
                    std::span<const SiteMapping* const> parts,
                    std::span<const std::pair<SiteId, SiteId>> overrides = {});

/// T^power(n); throws UnknownSite.
SiteId apply(const Lattice& lat, const SiteMapping& m, SiteId n, int power);

/// T maps N(n) exactly onto N(n') (same size and every neighbour lands on a
/// neighbour of the image).
bool keeps_connectivity(const Lattice& lat, const SiteMapping& m, SiteId n);
bool keeps_connectivity_at(const Lattice& lat, const SiteMapping& m, std::size_t index);

/// P with P |n> = |T(n)>, i.e. P(T(n), n) = 1.
Eigen::MatrixXd permutation_matrix(const SiteMapping& m);

}  // namespace symlat
