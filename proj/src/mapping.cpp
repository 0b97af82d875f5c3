// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/mapping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "symlat/error.hpp"

namespace symlat {

namespace {

std::string half_units(int doubled) {
  std::ostringstream out;
  if (doubled % 2 == 0) {
    out << doubled / 2;
  } else {
    out << doubled / 2.0;
  }
  return out.str();
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Image of a doubled coordinate pair under one geometric kind.
std::pair<int, int> transform2(const Provenance& kind, int x2, int y2) {
  return std::visit(
      Overloaded{
          [&](const Reflection& r) -> std::pair<int, int> {
            switch (r.axis) {
              case ReflectionAxis::vertical: return {2 * r.offset2 - x2, y2};
              case ReflectionAxis::horizontal: return {x2, 2 * r.offset2 - y2};
              case ReflectionAxis::diagonal: return {y2 - r.offset2, x2 + r.offset2};
              case ReflectionAxis::antidiagonal: return {r.offset2 - y2, r.offset2 - x2};
            }
            return {x2, y2};
          },
          [&](const Translation& t) -> std::pair<int, int> {
            return {x2 + 2 * t.dx, y2 + 2 * t.dy};
          },
          [&](const Rotation& r) -> std::pair<int, int> {
            int turns = ((r.quarter_turns % 4) + 4) % 4;
            int x = x2;
            int y = y2;
            for (int k = 0; k < turns; ++k) {
              const int nx = r.cx2 - (y - r.cy2);
              const int ny = r.cy2 + (x - r.cx2);
              x = nx;
              y = ny;
            }
            return {x, y};
          },
          [&](const auto&) -> std::pair<int, int> { return {x2, y2}; },
      },
      kind);
}

void require_bijective(const std::vector<std::size_t>& images, const std::string& name,
                       const std::function<std::string(std::size_t)>& label) {
  std::vector<std::optional<std::size_t>> source(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t img = images[i];
    if (img >= images.size()) {
      throw Error(ErrorCode::NotBijective, "mapping '" + name + "' sends a site outside the lattice");
    }
    if (source[img]) {
      throw Error(ErrorCode::NotBijective, "mapping '" + name + "' sends both " +
                                               label(*source[img]) + " and " + label(i) +
                                               " to " + label(img));
    }
    source[img] = i;
  }
}

}  // namespace

std::string describe(const Provenance& p) {
  return std::visit(
      Overloaded{
          [](const IdentityMap&) -> std::string { return "identity"; },
          [](const Reflection& r) -> std::string {
            const char* axis = r.axis == ReflectionAxis::vertical     ? "x"
                               : r.axis == ReflectionAxis::horizontal ? "y"
                               : r.axis == ReflectionAxis::diagonal   ? "diag"
                                                                      : "anti";
            return std::string("reflect ") + axis + "=" + half_units(r.offset2);
          },
          [](const Translation& t) -> std::string {
            return "translate dx=" + std::to_string(t.dx) + " dy=" + std::to_string(t.dy);
          },
          [](const Rotation& r) -> std::string {
            return "rotate cx=" + half_units(r.cx2) + " cy=" + half_units(r.cy2) +
                   " turns=" + std::to_string(r.quarter_turns);
          },
          [](const ExplicitPermutation&) -> std::string { return "permutation"; },
          [](const Composition& c) -> std::string {
            std::string out = "compose";
            for (const auto& part : c.parts) out += " " + part;
            return out;
          },
      },
      p);
}

SiteMapping::SiteMapping(std::string name, Provenance provenance, std::vector<std::size_t> images)
    : name_(std::move(name)), provenance_(std::move(provenance)), images_(std::move(images)) {
  require_bijective(images_, name_, [](std::size_t i) { return "index " + std::to_string(i); });
  inverse_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inverse_[images_[i]] = i;
}

SiteMapping SiteMapping::identity(std::size_t n, std::string name) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return SiteMapping(std::move(name), IdentityMap{}, std::move(images));
}

std::size_t SiteMapping::apply(std::size_t index, int power) const {
  if (index >= images_.size()) {
    throw Error(ErrorCode::UnknownSite, "index " + std::to_string(index) + " outside mapping '" + name_ + "'");
  }
  const auto& table = power >= 0 ? images_ : inverse_;
  const int steps = power >= 0 ? power : -power;
  for (int k = 0; k < steps; ++k) index = table[index];
  return index;
}

bool SiteMapping::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool SiteMapping::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

SiteMapping SiteMapping::inverse(std::string name) const {
  return SiteMapping(std::move(name), ExplicitPermutation{}, inverse_);
}

std::vector<std::size_t> geometric_images(const Lattice& lat, const Provenance& kind,
                                          const MappingOptions& options,
                                          std::span<const SiteId> covered) {
  if (std::holds_alternative<Composition>(kind)) {
    throw Error(ErrorCode::InvalidArgument, "composition has no geometric image; use compose()");
  }
  const std::set<SiteId> exempt(covered.begin(), covered.end());
  std::vector<std::size_t> images(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const Site& s = lat.site(i);
    const auto [x2, y2] = transform2(kind, 2 * s.x, 2 * s.y);
    std::optional<std::size_t> target;
    if (x2 % 2 == 0 && y2 % 2 == 0) target = lat.index_at(x2 / 2, y2 / 2);
    if (!target) {
      if (options.strict && !exempt.count(s.id)) {
        throw Error(ErrorCode::GeometricImageMissing,
                    "no site at the " + describe(kind) + " image of site " + std::to_string(s.id.value));
      }
      target = i;
    }
    images[i] = *target;
  }
  return images;
}

namespace {

SiteMapping finish(const Lattice& lat, std::string name, Provenance provenance,
                   std::vector<std::size_t> images,
                   std::span<const std::pair<SiteId, SiteId>> overrides) {
  for (const auto& [from, to] : overrides) images[lat.index_of(from)] = lat.index_of(to);
  require_bijective(images, name,
                    [&](std::size_t i) { return "site " + std::to_string(lat.id_at(i).value); });
  return SiteMapping(std::move(name), std::move(provenance), std::move(images));
}

std::vector<SiteId> override_sources(std::span<const std::pair<SiteId, SiteId>> overrides) {
  std::vector<SiteId> out;
  for (const auto& o : overrides) out.push_back(o.first);
  return out;
}

}  // namespace

SiteMapping build_mapping(const Lattice& lat, std::string name, const Provenance& kind,
                          std::span<const std::pair<SiteId, SiteId>> overrides,
                          const MappingOptions& options) {
  const auto covered = override_sources(overrides);
  auto images = geometric_images(lat, kind, options, covered);
  return finish(lat, std::move(name), kind, std::move(images), overrides);
}

SiteMapping compose(const Lattice& lat, std::string name,
                    std::span<const SiteMapping* const> parts,
                    std::span<const std::pair<SiteId, SiteId>> overrides) {
  std::vector<std::size_t> images(lat.size());
  std::iota(images.begin(), images.end(), std::size_t{0});
  Composition provenance;
  for (const SiteMapping* part : parts) {
    if (part->size() != lat.size()) {
      throw Error(ErrorCode::DimensionMismatch, "mapping '" + part->name() + "' belongs to another lattice");
    }
    for (auto& img : images) img = part->image(img);
    provenance.parts.push_back(part->name());
  }
  return finish(lat, std::move(name), std::move(provenance), std::move(images), overrides);
}

SiteId apply(const Lattice& lat, const SiteMapping& m, SiteId n, int power) {
  return lat.id_at(m.apply(lat.index_of(n), power));
}

bool keeps_connectivity_at(const Lattice& lat, const SiteMapping& m, std::size_t index) {
  const auto own = lat.neighbor_indices(index);
  const auto target = lat.neighbor_indices(m.image(index));
  if (own.size() != target.size()) return false;
  return std::all_of(own.begin(), own.end(), [&](std::size_t nb) {
    return std::find(target.begin(), target.end(), m.image(nb)) != target.end();
  });
}

bool keeps_connectivity(const Lattice& lat, const SiteMapping& m, SiteId n) {
  return keeps_connectivity_at(lat, m, lat.index_of(n));
}

Eigen::MatrixXd permutation_matrix(const SiteMapping& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < m.size(); ++i) {
    p(static_cast<Eigen::Index>(m.image(i)), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return p;
}

}  // namespace symlat
