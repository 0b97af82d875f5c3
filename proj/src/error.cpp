// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/error.hpp"

#include <utility>

namespace symlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateSiteId: return "DuplicateSiteId";
    case ErrorCode::DuplicateCoordinate: return "DuplicateCoordinate";
    case ErrorCode::DanglingHopping: return "DanglingHopping";
    case ErrorCode::GridViolation: return "GridViolation";
    case ErrorCode::ZeroHopping: return "ZeroHopping";
    case ErrorCode::SelfHopping: return "SelfHopping";
    case ErrorCode::DuplicateHopping: return "DuplicateHopping";
    case ErrorCode::UnknownSite: return "UnknownSite";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::GeometricImageMissing: return "GeometricImageMissing";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfSupport: return "OutOfSupport";
    case ErrorCode::ColumnOutsideRegion: return "ColumnOutsideRegion";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_what(ErrorCode code, const std::string& message,
                        const std::optional<SourceLocation>& where) {
  std::string out;
  if (where) {
    out += "line " + std::to_string(where->line);
    if (where->column > 0) out += ", col " + std::to_string(where->column);
    out += ": ";
  }
  out += to_string(code);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message,
             std::optional<SourceLocation> where,
             std::optional<std::size_t> item)
    : std::runtime_error(format_what(code, message, where)),
      code_(code),
      message_(std::move(message)),
      where_(where),
      item_(item) {}

Error Error::at(SourceLocation where) const {
  return Error(code_, message_, where, item_);
}

}  // namespace symlat
