// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal ZIP archive support: stored and deflated entries, no ZIP64, no
// encryption, no multi-disk archives.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoweave/source.hpp"

namespace ontoweave::zip {

enum class Method { Stored, Deflate };

struct Entry {
  std::string name;
  std::string data;
};

std::uint32_t crc32(std::string_view data);

// Entries are written in order with a fixed 1980-01-01 timestamp so equal
// input gives equal bytes.
std::string write(const std::vector<Entry>& entries,
                  Method method = Method::Stored);

// E060 when `bytes` is not a readable archive.
Outcome<std::vector<Entry>> read(std::string_view bytes);

const Entry* find(const std::vector<Entry>& entries, std::string_view name);

}  // namespace ontoweave::zip
