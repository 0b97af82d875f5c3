// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/currents.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "symlat/error.hpp"

namespace symlat {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_dimension(const Eigen::VectorXcd& psi, std::size_t n) {
  if (static_cast<std::size_t>(psi.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(psi.size()) +
                                                  " amplitudes, lattice has " + std::to_string(n) +
                                                  " sites");
  }
}

std::string pair_label(const Lattice& lat, std::size_t n, std::size_t to) {
  return "(" + std::to_string(lat.id_at(n).value) + "," + std::to_string(lat.id_at(to).value) + ")";
}

}  // namespace

Eigen::VectorXcd nonlocal_density(const Eigen::VectorXcd& psi, const SiteMapping& m) {
  require_dimension(psi, m.size());
  Eigen::VectorXcd sigma(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    sigma(i) = std::conj(psi(i)) * psi(static_cast<Eigen::Index>(m.image(static_cast<std::size_t>(i))));
  }
  return sigma;
}

bool in_current_support(const Lattice& lat, const SiteMapping& m, std::size_t n, std::size_t to) {
  return lat.adjacent(n, to) || lat.adjacent(m.image(n), m.image(to));
}

Complex nonlocal_current_at(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                            std::size_t n, std::size_t to) {
  const std::size_t np = m.image(n);
  const std::size_t tp = m.image(to);
  const auto a = [&](std::size_t i) { return psi(static_cast<Eigen::Index>(i)); };
  const Complex forward = lat.entry(np, tp) * std::conj(a(n)) * a(tp);
  const Complex backward = std::conj(lat.entry(n, to)) * a(np) * std::conj(a(to));
  return (forward - backward) / kI;
}

Complex nonlocal_current(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                         SiteId n, SiteId to) {
  require_dimension(psi, lat.size());
  const std::size_t i = lat.index_of(n);
  const std::size_t j = lat.index_of(to);
  if (!in_current_support(lat, m, i, j)) {
    throw Error(ErrorCode::OutOfSupport,
                "q" + pair_label(lat, i, j) + " vanishes identically: neither the pair nor its image is adjacent");
  }
  return nonlocal_current_at(psi, lat, m, i, j);
}

Complex probability_current_at(const Eigen::VectorXcd& psi, const Lattice& lat, std::size_t n,
                               std::size_t to) {
  if (!lat.adjacent(n, to)) {
    throw Error(ErrorCode::OutOfSupport, "j" + pair_label(lat, n, to) + " needs neighbouring sites");
  }
  const Complex h = lat.entry(n, to);
  const Complex an = psi(static_cast<Eigen::Index>(n));
  const Complex am = psi(static_cast<Eigen::Index>(to));
  return (h * std::conj(an) * am - std::conj(h) * an * std::conj(am)) / kI;
}

Complex probability_current(const Eigen::VectorXcd& psi, const Lattice& lat, SiteId n, SiteId to) {
  require_dimension(psi, lat.size());
  return probability_current_at(psi, lat, lat.index_of(n), lat.index_of(to));
}

Complex direction_inversion_defect_at(const Eigen::VectorXcd& psi, const Lattice& lat,
                                      const SiteMapping& m, std::size_t n, std::size_t to) {
  const std::size_t np = m.image(n);
  const std::size_t tp = m.image(to);
  const Complex delta = lat.entry(n, to) - lat.entry(np, tp);
  const auto a = [&](std::size_t i) { return psi(static_cast<Eigen::Index>(i)); };
  return kI * (delta * std::conj(a(n)) * a(tp) + std::conj(delta) * std::conj(a(to)) * a(np));
}

SourceTerm source_term_at(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                          std::size_t n) {
  const std::size_t np = m.image(n);
  const auto a = [&](std::size_t i) { return psi(static_cast<Eigen::Index>(i)); };
  Complex iq{0.0, 0.0};
  for (std::size_t k : lat.neighbor_indices(np)) iq += lat.entry(np, k) * std::conj(a(n)) * a(k);
  for (std::size_t k : lat.neighbor_indices(n)) iq -= std::conj(lat.entry(n, k)) * a(np) * std::conj(a(k));
  SourceTerm s;
  s.q = iq / kI;
  s.beta = lat.site(np).v - std::conj(lat.site(n).v);
  s.sigma = std::conj(a(n)) * a(np);
  s.product = -kI * s.beta * s.sigma;
  return s;
}

SourceTerm source_term(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                       SiteId n) {
  require_dimension(psi, lat.size());
  return source_term_at(psi, lat, m, lat.index_of(n));
}

Complex kirchhoff_outflow_at(const Eigen::VectorXcd& psi, const Lattice& lat,
                             const SiteMapping& m, std::size_t n) {
  Complex sum{0.0, 0.0};
  for (std::size_t k : lat.neighbor_indices(n)) sum += nonlocal_current_at(psi, lat, m, n, k);
  for (std::size_t kp : lat.neighbor_indices(m.image(n))) {
    const std::size_t k = m.preimage(kp);
    if (!lat.adjacent(n, k)) sum += nonlocal_current_at(psi, lat, m, n, k);
  }
  return sum;
}

CurrentField current_field(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m) {
  require_dimension(psi, lat.size());
  CurrentField field;
  field.mapping_name = m.name();
  for (std::size_t n = 0; n < lat.size(); ++n) {
    std::set<std::size_t> partners(lat.neighbor_indices(n).begin(), lat.neighbor_indices(n).end());
    for (std::size_t kp : lat.neighbor_indices(m.image(n))) partners.insert(m.preimage(kp));
    for (std::size_t k : partners) {
      CurrentEntry e{lat.id_at(n), lat.id_at(k), nonlocal_current_at(psi, lat, m, n, k), std::nullopt};
      if (lat.adjacent(n, k)) e.j = probability_current_at(psi, lat, n, k);
      field.entries.push_back(e);
    }
  }
  std::sort(field.entries.begin(), field.entries.end(), [](const CurrentEntry& l, const CurrentEntry& r) {
    return std::tie(l.n, l.m) < std::tie(r.n, r.m);
  });
  return field;
}

KirchhoffReport kirchhoff_residual(const Eigen::VectorXcd& psi, const Lattice& lat,
                                   const SiteMapping& m, const Tolerances& tol) {
  require_dimension(psi, lat.size());
  KirchhoffReport report;
  report.tolerance = tol.kirchhoff_for(lat.max_abs_entry());
  for (std::size_t n = 0; n < lat.size(); ++n) {
    KirchhoffSite site;
    site.id = lat.id_at(n);
    site.outflow = kirchhoff_outflow_at(psi, lat, m, n);
    site.source = source_term_at(psi, lat, m, n);
    site.residual = std::abs(site.outflow + site.source.product);
    site.green = std::abs(site.source.beta) > tol.symmetry;
    site.red = !keeps_connectivity_at(lat, m, n);
    report.max_residual = std::max(report.max_residual, site.residual);
    report.sites.push_back(site);
  }
  return report;
}

KirchhoffReport kirchhoff_residual(const EigenState& state, const Lattice& lat,
                                   const SiteMapping& m, const Tolerances& tol) {
  return kirchhoff_residual(state.amplitudes, lat, m, tol);
}

const ColumnRange& Region::column(int x) const {
  for (const auto& c : columns) {
    if (c.x == x) return c;
  }
  throw Error(ErrorCode::ColumnOutsideRegion,
              "column x=" + std::to_string(x) + " is not part of region '" + name + "'");
}

Region make_region(const Lattice& lat, std::string name, std::vector<ColumnRange> columns) {
  const auto invalid = [&](const std::string& why) {
    return Error(ErrorCode::InvalidRegion, "region '" + name + "': " + why);
  };
  if (columns.empty()) throw invalid("no columns");
  std::sort(columns.begin(), columns.end(),
            [](const ColumnRange& l, const ColumnRange& r) { return l.x < r.x; });
  Region r;
  r.name = name;
  std::vector<std::size_t> members;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const ColumnRange& col = columns[c];
    if (c > 0 && col.x != columns[c - 1].x + 1) {
      throw invalid("columns must be consecutive (gap before x=" + std::to_string(col.x) + ")");
    }
    if (col.y_min > col.y_max) throw invalid("column x=" + std::to_string(col.x) + " has y_min > y_max");
    bool any = false;
    for (int y = col.y_min; y <= col.y_max; ++y) {
      if (const auto idx = lat.index_at(col.x, y)) {
        members.push_back(*idx);
        any = true;
        // Vertical confinement: nothing in this column beyond the bounds.
        for (std::size_t k : lat.neighbor_indices(*idx)) {
          const Site& s = lat.site(k);
          if (s.x == col.x && (s.y > col.y_max || s.y < col.y_min)) {
            throw invalid("site " + std::to_string(lat.id_at(*idx).value) +
                          " couples vertically out of column x=" + std::to_string(col.x));
          }
        }
      }
    }
    if (!any) throw invalid("column x=" + std::to_string(col.x) + " holds no site");
  }
  if (!is_connected(lat, members)) throw invalid("sites are not connected");
  for (std::size_t i : members) r.sites.push_back(lat.id_at(i));
  std::sort(r.sites.begin(), r.sites.end());
  r.columns = std::move(columns);
  return r;
}

Complex summed_current(const Eigen::VectorXcd& psi, const Lattice& lat, const SiteMapping& m,
                       const Region& r, int x, int direction, RowRange rows) {
  require_dimension(psi, lat.size());
  if (direction != 1 && direction != -1) {
    throw Error(ErrorCode::InvalidArgument, "direction must be +1 or -1");
  }
  const ColumnRange& col = r.column(x);
  const int lo = rows == RowRange::exclusive ? col.y_min + 1 : col.y_min;
  const int hi = rows == RowRange::exclusive ? col.y_max - 1 : col.y_max;
  Complex sum{0.0, 0.0};
  for (int y = lo; y <= hi; ++y) {
    const auto from = lat.index_at(x, y);
    const auto to = lat.index_at(x + direction, y);
    if (from && to) sum += nonlocal_current_at(psi, lat, m, *from, *to);
  }
  return sum;
}

}  // namespace symlat
