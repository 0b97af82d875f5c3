// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file theorems.hpp
 * @brief Numeric checkers for the structural statements about non-local
 *        currents and eigenstate amplitudes.
 *
 * Every checker first evaluates its hypotheses. If any hypothesis fails the
 * verdict is not_applicable, never fails. Currents and amplitudes are always
 * recomputed from the state; nothing cached is trusted.
 *
 * Current equalities are compared at tol.eigen, amplitude equalities at
 * tol.amplitude.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symlat/currents.hpp"
#include "symlat/lattice.hpp"
#include "symlat/mapping.hpp"
#include "symlat/spectral.hpp"
#include "symlat/symmetry.hpp"
#include "symlat/tolerances.hpp"

namespace symlat {

enum class Outcome { holds, fails, not_applicable };

std::string_view to_string(Outcome o);

struct Hypothesis {
  std::string name;
  bool satisfied = false;
  std::string detail;  ///< empty when satisfied
};

/// One supporting or violating observation.
struct Witness {
  std::string kind;
  std::optional<std::size_t> state;
  std::optional<int> index;  ///< column x or power k, depending on kind
  std::vector<SiteId> sites;
  std::vector<Complex> values;
  double residual = 0.0;
  bool ok = true;
  bool gating = true;  ///< false for observations reported for information only
};

struct TheoremVerdict {
  std::string theorem;
  Outcome outcome = Outcome::not_applicable;
  std::vector<Hypothesis> hypotheses;
  std::vector<Witness> witnesses;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> notes;

  bool holds() const { return outcome == Outcome::holds; }
  bool hypotheses_satisfied() const;
};

// Currents along a path or cycle domain of sites with at most two
// neighbours are all equal.
TheoremVerdict check_domainwise_constancy(const Lattice& lat, const SiteMapping& m,
                                          std::span<const SiteId> domain, const EigenState& state,
                                          const Tolerances& tol = {});
TheoremVerdict check_domainwise_constancy(const Lattice& lat, const SiteMapping& m,
                                          std::span<const SiteId> domain, const Spectrum& spectrum,
                                          const Tolerances& tol = {});

// Inclusive column sums Q_{x-1,x} and Q_{x,x+1} agree on interior columns.
// The boundary-exclusive sums are reported as witnesses of kind
// "exclusive" but do not decide the verdict.
TheoremVerdict check_summed_constancy(const Lattice& lat, const SiteMapping& m, const Region& r,
                                      const EigenState& state, const Tolerances& tol = {});
TheoremVerdict check_summed_constancy(const Lattice& lat, const SiteMapping& m, const Region& r,
                                      const Spectrum& spectrum, const Tolerances& tol = {});

struct SimilarityConstant {
  std::size_t state = 0;
  Complex c{0.0, 0.0};
  std::vector<SiteId> chain;
  bool defined = false;  ///< false when the image amplitudes vanish on the chain
  double spread = 0.0;   ///< max |conj(a_n)/a_n' - C| over sites with a_n' != 0
  double parallel_residual = 0.0;  ///< max |conj(a_n) a_m' - conj(a_m) a_n'|
  bool bridged = false;  ///< an interior zero was crossed
};

struct OpenChainResult {
  TheoremVerdict verdict;
  std::vector<SimilarityConstant> constants;
};

/// `chain` lists sites 1..k starting at the open end.
OpenChainResult open_chain_similarity(const Lattice& lat, const SiteMapping& m,
                                      std::span<const SiteId> chain, const Spectrum& spectrum,
                                      const Tolerances& tol = {});

/// `loop` lists the cycle in order; `a` is the site on the reflection axis.
/// The spectrum is symmetry-adapted internally before parities are read.
TheoremVerdict closed_loop_reflection(const Lattice& lat, const SiteMapping& m,
                                      std::span<const SiteId> loop, SiteId a,
                                      const Spectrum& spectrum, const Tolerances& tol = {});

struct TranslationLoop {
  std::vector<SiteId> loop;  ///< cycle order; T(loop[i]) = loop[i + shift]
  SiteId a;                  ///< attachment site on the loop
  SiteId b;                  ///< exterior partner of a
  int shift = 1;
  std::optional<int> k_max;  ///< default: loop size / (2 shift)
};

TheoremVerdict closed_loop_translation(const Lattice& lat, const SiteMapping& m,
                                       const TranslationLoop& loop, const Spectrum& spectrum,
                                       const Tolerances& tol = {});

/// ||H a - E a|| bound used for the eigenstate hypothesis.
double eigen_residual(const Lattice& lat, const EigenState& state);

}  // namespace symlat
