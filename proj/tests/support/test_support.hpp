// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ontoweave/locale.hpp"
#include "ontoweave/reader.hpp"

namespace ontoweave::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return std::move(s).str();
}

inline std::string fixture_path(std::string_view name) {
  return std::string(ONTOWEAVE_FIXTURES_DIR) + "/" + std::string(name);
}

inline std::string fixture(std::string_view name) {
  return read_file(fixture_path(name));
}

// Reads source that must be free of errors.
inline OntologyDoc must_read(std::string_view source) {
  auto doc = read_document(source);
  if (!doc) {
    std::string why;
    for (const auto& d : doc.diagnostics) why += format_diagnostic(d) + "\n";
    throw std::runtime_error("unexpected errors:\n" + why);
  }
  return std::move(*doc.value);
}

// Parses a bundle fixture that must be valid.
inline LocaleBundle must_bundle(std::string_view name) {
  auto bundle = parse_bundle(fixture(name));
  if (!bundle) throw std::runtime_error("bad bundle " + std::string(name));
  return std::move(*bundle.value);
}

inline int count_code(const Diagnostics& diagnostics, std::string_view code) {
  int n = 0;
  for (const auto& d : diagnostics) n += d.code == code;
  return n;
}

inline int count_occurrences(std::string_view haystack, std::string_view needle) {
  int n = 0;
  for (auto at = haystack.find(needle); at != std::string_view::npos;
       at = haystack.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace ontoweave::testing
