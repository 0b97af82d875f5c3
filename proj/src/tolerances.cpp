// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include "symlat/tolerances.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "symlat/error.hpp"

namespace symlat {

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.symmetry *= factor;
  t.eigen *= factor;
  t.degeneracy *= factor;
  t.hermitian *= factor;
  t.commutator *= factor;
  t.kirchhoff *= factor;
  t.amplitude *= factor;
  t.attachment *= factor;
  t.norm *= factor;
  return t;
}

double Tolerances::kirchhoff_for(double max_entry) const {
  return kirchhoff * std::max(1.0, max_entry / 10.0);
}

Tolerances Tolerances::from_environment() {
  const char* raw = std::getenv("SYMLAT_TOLERANCE_SCALE");
  if (raw == nullptr || *raw == '\0') return Tolerances{};
  char* end = nullptr;
  const double factor = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(factor > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("SYMLAT_TOLERANCE_SCALE must be a positive number, got '") + raw + "'");
  }
  return Tolerances{}.scaled(factor);
}

}  // namespace symlat
