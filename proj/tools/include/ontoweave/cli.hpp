// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ontoweave::cli {

struct RunOptions {
  // Highlight severities with ANSI escapes.
  bool color = false;
};

// `args` excludes the program name. Returns 0 when no error diagnostics
// were produced, 1 otherwise, and 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunOptions& options = {});

}  // namespace ontoweave::cli
