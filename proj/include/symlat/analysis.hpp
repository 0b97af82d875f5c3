// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file analysis.hpp
 * @brief Orchestration behind the CLI verbs: one resolved document in, one
 *        deterministic report out.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlat/document.hpp"
#include "symlat/report.hpp"
#include "symlat/theorems.hpp"
#include "symlat/tolerances.hpp"

namespace symlat {

enum class Command { validate, spectrum, domains, currents, check, evolve };
enum class CheckKind { all, constancy, summed, open_chain, loop_reflect, loop_translate };

std::string_view to_string(Command c);
std::string_view to_string(CheckKind k);
/// Accepts all, constancy, summed, open-chain, loop-reflect, loop-translate.
std::optional<CheckKind> parse_check_kind(std::string_view text);

struct AnalysisOptions {
  Command command = Command::validate;
  std::optional<std::string> map;  ///< restricts or selects the mapping
  std::size_t state = 0;           ///< currents: eigenstate index
  CheckKind check = CheckKind::all;
  double t = 1.0;                  ///< evolve: final time
  int steps = 10;                  ///< evolve: number of intervals
  std::optional<Eigen::VectorXcd> initial;  ///< evolve: declaration order
  Tolerances tol;
};

/// A verdict together with the declaration and mapping it was run for.
struct CheckResult {
  std::string declaration;
  std::string mapping;
  TheoremVerdict verdict;
  std::vector<SimilarityConstant> constants;  ///< open-chain only
};

struct AnalysisReport {
  Json json;
  std::vector<CheckResult> checks;
  std::optional<CurrentField> currents;
  std::optional<KirchhoffReport> kirchhoff;
  std::vector<TrajectoryRow> trajectory;
  bool ok = true;  ///< every applicable check holds

  int exit_code() const { return ok ? 0 : 1; }
};

/// Mappings a command runs against: the named one, otherwise every declared
/// map, otherwise the identity. The name "identity" always resolves.
std::vector<SiteMapping> select_maps(const ResolvedDocument& doc, const std::optional<std::string>& name);

std::vector<CheckResult> run_checks(const ResolvedDocument& doc, CheckKind kind,
                                    const std::optional<std::string>& map, const Tolerances& tol);

AnalysisReport run_analysis(const ResolvedDocument& doc, std::string_view input_text,
                            const AnalysisOptions& options);

/// Lines of `<site id> <re> [<im>]`; unlisted sites are zero. The result is
/// normalised. Throws SyntaxError, UnknownReference or ValidationError.
Eigen::VectorXcd parse_initial_state(std::string_view text, const Lattice& lat);

}  // namespace symlat
