// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symlat/error.hpp"

namespace symlat {

namespace {

using Eigen::Index;

// Rotation (c, s) that annihilates the (p, q) pivot of a real 2x2 block with
// diagonal (app, aqq) and off-diagonal magnitude apq.
std::pair<double, double> jacobi_rotation(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c};
}

template <class Matrix>
double off_diagonal_norm2(const Matrix& a) {
  double off = 0.0;
  for (Index q = 1; q < a.cols(); ++q) {
    for (Index p = 0; p < q; ++p) off += std::norm(a(p, q));
  }
  return off;
}

// Sorts eigenpairs ascending by eigenvalue; ties keep solver order.
template <class Vectors>
void sort_ascending(Eigen::VectorXd& values, Vectors& vectors) {
  std::vector<Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index l, Index r) { return values(l) < values(r); });
  Eigen::VectorXd sorted_values(values.size());
  Vectors sorted_vectors(vectors.rows(), vectors.cols());
  for (Index k = 0; k < values.size(); ++k) {
    sorted_values(k) = values(order[static_cast<std::size_t>(k)]);
    sorted_vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
  }
  values = std::move(sorted_values);
  vectors = std::move(sorted_vectors);
}

}  // namespace

RealEigenSystem jacobi_eigensystem(const Eigen::MatrixXd& input, const JacobiOptions& options) {
  const Index n = input.rows();
  if (input.cols() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  Eigen::MatrixXd a = 0.5 * (input + input.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double scale = a.norm();
  RealEigenSystem out;

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= std::pow(1e-17 * scale, 2)) break;
    ++out.sweeps;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const auto [c, s] = jacobi_rotation(a(p, p), a(q, q), apq);
        for (Index r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (Index r = 0; r < n; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  out.values = a.diagonal();
  out.vectors = std::move(v);
  sort_ascending(out.values, out.vectors);
  return out;
}

HermitianEigenSystem jacobi_eigensystem(const Eigen::MatrixXcd& input,
                                        const JacobiOptions& options) {
  const Index n = input.rows();
  if (input.cols() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  Eigen::MatrixXcd a = 0.5 * (input + input.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double scale = a.norm();
  HermitianEigenSystem out;

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= std::pow(1e-17 * scale, 2)) break;
    ++out.sweeps;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        // Phase-rotate q so the pivot becomes real, then apply a real rotation.
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const Complex w = std::conj(phase);   // e^{-i phi}
        const auto [c, s] = jacobi_rotation(a(p, p).real(), a(q, q).real(), mag);
        for (Index r = 0; r < n; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - s * w * arq;
          a(r, q) = s * arp + c * w * arq;
        }
        for (Index r = 0; r < n; ++r) {
          const Complex apr = a(p, r);
          const Complex aqr = a(q, r);
          a(p, r) = c * apr - s * phase * aqr;
          a(q, r) = s * apr + c * phase * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Index r = 0; r < n; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - s * w * vrq;
          v(r, q) = s * vrp + c * w * vrq;
        }
      }
    }
  }
  out.values = a.diagonal().real();
  out.vectors = std::move(v);
  sort_ascending(out.values, out.vectors);
  return out;
}

void fix_phase(Eigen::VectorXcd& v, double threshold) {
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > threshold) {
      v *= std::conj(v(i)) / mag;
      v(i) = mag;
      return;
    }
  }
}

std::vector<std::vector<std::size_t>> degeneracy_groups(const std::vector<double>& energies,
                                                        double relative_tol) {
  std::vector<std::vector<std::size_t>> groups;
  double emax = 1.0;
  for (double e : energies) emax = std::max(emax, std::abs(e));
  const double tol = relative_tol * emax;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (i > 0 && std::abs(energies[i] - energies[i - 1]) <= tol) {
      groups.back().push_back(i);
    } else {
      groups.push_back({i});
    }
  }
  return groups;
}

Spectrum eigenstates(const Eigen::MatrixXcd& h, const Tolerances& tol) {
  const Index n = h.rows();
  if (h.cols() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  double max_imag = 0.0;
  double max_diag_imag = 0.0;
  for (Index i = 0; i < n; ++i) {
    max_diag_imag = std::max(max_diag_imag, std::abs(h(i, i).imag()));
    for (Index j = 0; j < n; ++j) max_imag = std::max(max_imag, std::abs(h(i, j).imag()));
  }
  if (max_diag_imag > tol.hermitian) {
    throw Error(ErrorCode::NonHermitianInput,
                "on-site potential has imaginary part " + std::to_string(max_diag_imag) +
                    "; the eigensolver needs a Hermitian Hamiltonian");
  }
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol.hermitian) {
    throw Error(ErrorCode::NonHermitianInput, "matrix is not Hermitian");
  }

  Spectrum spectrum;
  std::vector<double> energies;
  if (max_imag <= tol.hermitian) {
    const auto sys = jacobi_eigensystem(Eigen::MatrixXd(h.real()));
    for (Index k = 0; k < n; ++k) {
      EigenState s;
      s.index = static_cast<std::size_t>(k);
      s.energy = sys.values(k);
      s.amplitudes = sys.vectors.col(k).cast<Complex>();
      s.gauge = Gauge::real;
      fix_phase(s.amplitudes);
      energies.push_back(s.energy);
      spectrum.states.push_back(std::move(s));
    }
  } else {
    Eigen::MatrixXcd herm = h;
    for (Index i = 0; i < n; ++i) herm(i, i) = herm(i, i).real();
    const auto sys = jacobi_eigensystem(herm);
    for (Index k = 0; k < n; ++k) {
      EigenState s;
      s.index = static_cast<std::size_t>(k);
      s.energy = sys.values(k);
      s.amplitudes = sys.vectors.col(k);
      s.gauge = Gauge::complex;
      fix_phase(s.amplitudes);
      energies.push_back(s.energy);
      spectrum.states.push_back(std::move(s));
    }
  }
  spectrum.degeneracy_groups = degeneracy_groups(energies, tol.degeneracy);
  return spectrum;
}

Spectrum eigenstates(const Lattice& lat, const Tolerances& tol) {
  if (lat.max_imag_potential() > tol.hermitian) {
    throw Error(ErrorCode::NonHermitianInput,
                "lattice '" + lat.name() + "' has complex on-site potentials (max |Im v| = " +
                    std::to_string(lat.max_imag_potential()) + ")");
  }
  return eigenstates(lat.hamiltonian(), tol);
}

double commutator_norm(const Lattice& lat, const SiteMapping& m) {
  if (m.size() != lat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "mapping '" + m.name() + "' belongs to another lattice");
  }
  const Eigen::MatrixXcd p = permutation_matrix(m).cast<Complex>();
  const Eigen::MatrixXcd& h = lat.hamiltonian();
  return (h * p - p * h).norm();
}

Spectrum symmetry_adapt(const Spectrum& spectrum, const Lattice& lat, const SiteMapping& m,
                        const Tolerances& tol) {
  Spectrum out = spectrum;
  if (commutator_norm(lat, m) > tol.commutator) {
    out.commutes = false;
    return out;
  }
  out.commutes = true;
  out.adapted_to = m.name();
  const Eigen::MatrixXd p_real = permutation_matrix(m);
  const Eigen::MatrixXd operator_real =
      m.is_involution() ? p_real : Eigen::MatrixXd(0.5 * (p_real + p_real.transpose()));
  const Eigen::MatrixXcd op = operator_real.cast<Complex>();
  const Eigen::MatrixXcd p = p_real.cast<Complex>();

  for (const auto& group : spectrum.degeneracy_groups) {
    const auto d = static_cast<Index>(group.size());
    const auto n = static_cast<Index>(lat.size());
    Eigen::MatrixXcd basis(n, d);
    bool real_gauge = true;
    for (Index k = 0; k < d; ++k) {
      const EigenState& s = spectrum.states[group[static_cast<std::size_t>(k)]];
      basis.col(k) = s.amplitudes;
      real_gauge = real_gauge && s.gauge == Gauge::real;
    }
    const Eigen::MatrixXcd reduced = basis.adjoint() * op * basis;

    Eigen::VectorXd values;
    Eigen::MatrixXcd rotation;
    if (real_gauge) {
      const auto sys = jacobi_eigensystem(Eigen::MatrixXd(reduced.real()));
      values = sys.values;
      rotation = sys.vectors.cast<Complex>();
    } else {
      const auto sys = jacobi_eigensystem(reduced);
      values = sys.values;
      rotation = sys.vectors;
    }
    // Even (largest eigenvalue) first; ties keep their order.
    std::vector<Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index l, Index r) {
      return values(l) > values(r) + tol.eigen;
    });

    for (Index k = 0; k < d; ++k) {
      EigenState& target = out.states[group[static_cast<std::size_t>(k)]];
      Eigen::VectorXcd v = basis * rotation.col(order[static_cast<std::size_t>(k)]);
      v.normalize();
      if (real_gauge) v = v.real().cast<Complex>();
      fix_phase(v);
      target.amplitudes = std::move(v);
      target.symmetry_expectation = target.amplitudes.dot(p * target.amplitudes);
    }
  }
  return out;
}

}  // namespace symlat
