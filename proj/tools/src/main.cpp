// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "ontoweave/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  ontoweave::cli::RunOptions options;
  options.color = ::isatty(STDERR_FILENO) && !std::getenv("ONTOWEAVE_NO_COLOR");
  return ontoweave::cli::run(args, std::cout, std::cerr, options);
}
