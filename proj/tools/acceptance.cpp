// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

// Runs every acceptance criterion; same as `symlat acceptance`.

#include <iostream>
#include <vector>

#include "symlat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<const char*> args{"symlat", "acceptance"};
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  return symlat::run_cli(static_cast<int>(args.size()), args.data(), std::cout, std::cerr);
}
