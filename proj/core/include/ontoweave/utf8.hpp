// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ontoweave::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the scalar starting at `pos` and advances `pos` past it. Invalid
// sequences decode to U+FFFD and consume one byte.
char32_t decode(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t scalar);

// Number of scalar values in `text`.
std::size_t length(std::string_view text);

bool is_valid(std::string_view text);

// Unicode general category L*.
bool is_letter(char32_t c);
// Unicode general category Nd.
bool is_digit(char32_t c);
// Unicode general category M* (combining marks).
bool is_mark(char32_t c);

char32_t to_lower(char32_t c);

}  // namespace ontoweave::utf8
