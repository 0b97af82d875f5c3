// Copyright 2026 The symlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "symlat/cli.hpp"

int main(int argc, char** argv) { return symlat::run_cli(argc, argv, std::cout, std::cerr); }
