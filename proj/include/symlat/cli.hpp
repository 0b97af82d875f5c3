// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace symlat {

/// Entry point of the `symlat` tool. Returns 0 when every applicable check
/// holds, 1 when one fails and 2 on input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symlat
