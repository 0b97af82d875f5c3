// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief JSON/CSV encoding of analysis results and atomic file output.
 *
 * JSON keys keep insertion order. Numbers are written with 17 significant
 * digits; complex values are [re, im] pairs.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "symlat/currents.hpp"
#include "symlat/dynamics.hpp"
#include "symlat/spectral.hpp"
#include "symlat/symmetry.hpp"
#include "symlat/theorems.hpp"

namespace symlat {

using Json = nlohmann::ordered_json;

/// Two-space indented JSON with "%.17g" numbers and a trailing newline.
std::string dump_json(const Json& j);

/// Writes through a temporary sibling file and renames it into place, so a
/// failed run never leaves a partial file. Throws IoError.
void write_atomic(const std::filesystem::path& path, std::string_view content);

std::string sha256_hex(std::string_view data);

Json to_json(Complex z);
/// Amplitudes are [re, im] pairs in site declaration order.
Json to_json(const EigenState& s, const Lattice& lat);
Json to_json(const Spectrum& s, const Lattice& lat);
Json to_json(const SymmetryDomain& d);
Json to_json(const CurrentField& f);
Json to_json(const KirchhoffReport& k);
Json to_json(const TheoremVerdict& v);
Json to_json(const SimilarityConstant& c);

/// Header "n,m,q_re,q_im".
std::string current_csv(const CurrentField& f);

/// Header "site,sigma_re,sigma_im,beta_re,beta_im,residual,green,red".
std::string site_csv(const KirchhoffReport& k);

struct TrajectoryRow {
  double t = 0.0;
  SiteId site;
  Complex psi;
  Complex sigma;
  double residual = 0.0;
};

/// Header "t,site,psi_re,psi_im,sigma_re,sigma_im,residual".
std::string trajectory_csv(const std::vector<TrajectoryRow>& rows);

}  // namespace symlat
