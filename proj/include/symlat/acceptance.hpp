// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file acceptance.hpp
 * @brief The eleven acceptance criteria, runnable one at a time.
 *
 * Thresholds are fixed here and ignore SYMLAT_TOLERANCE_SCALE. Random
 * lattices come from a seeded std::mt19937_64 so runs are reproducible.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace symlat {

inline constexpr int kCriterionCount = 11;

struct AcceptanceOptions {
  std::filesystem::path fixtures;  ///< directory holding fig1.lat ... fig5.lat
  std::uint64_t seed = 20260214;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs criterion `id` (1..11). Exceptions thrown by the library are caught
/// and reported as a failure.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// One line: `PASS 3 identity-reduction (0.01 s): detail`.
std::string format_result(const CriterionResult& r);

}  // namespace symlat
