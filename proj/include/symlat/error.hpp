// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symlat {

enum class ErrorCode {
  DuplicateSiteId,
  DuplicateCoordinate,
  DanglingHopping,
  GridViolation,
  ZeroHopping,
  SelfHopping,
  DuplicateHopping,
  UnknownSite,
  NotBijective,
  GeometricImageMissing,
  EmptySet,
  NonHermitianInput,
  DimensionMismatch,
  OutOfSupport,
  ColumnOutsideRegion,
  InvalidRegion,
  SyntaxError,
  DuplicateDefinition,
  UnknownReference,
  ValidationError,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// 1-based line/column inside a .lat document.
struct SourceLocation {
  int line = 0;
  int column = 0;
};

/// The single exception type thrown by the library.
///
/// `item()` optionally names the offending element by position (a site or
/// hopping index in declaration order) so that callers holding source
/// locations for those elements can re-attach them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<SourceLocation> where = std::nullopt,
        std::optional<std::size_t> item = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const std::optional<SourceLocation>& where() const noexcept { return where_; }
  const std::optional<std::size_t>& item() const noexcept { return item_; }

  /// Copy of this error with a source location attached.
  Error at(SourceLocation where) const;

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<SourceLocation> where_;
  std::optional<std::size_t> item_;
};

}  // namespace symlat
