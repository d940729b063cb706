// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Source positions, diagnostics and the result carrier shared by every
// pipeline stage.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontoweave {

// 1-based positions. Columns count Unicode scalar values. The end position
// is exclusive: it names the column just past the last covered character.
struct SourceSpan {
  int start_line = 1;
  int start_column = 1;
  int end_line = 1;
  int end_column = 1;

  static SourceSpan point(int line, int column) {
    return {line, column, line, column};
  }

  bool contains(const SourceSpan& other) const;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Smallest span covering both arguments.
SourceSpan cover(const SourceSpan& a, const SourceSpan& b);

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;

  bool is_error() const { return severity == Severity::Error; }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic make_error(std::string code, std::string message, SourceSpan span);
Diagnostic make_warning(std::string code, std::string message,
                        SourceSpan span);

bool has_errors(const Diagnostics& diagnostics);

// Appends `more` to `into`, dropping entries already present.
void merge_diagnostics(Diagnostics& into, const Diagnostics& more);

// `severity code line:col message`
std::string format_diagnostic(const Diagnostic& d);
std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

// A value, or the diagnostics explaining why there is none. Warnings may
// accompany a successful value.
template <typename T>
struct Outcome {
  std::optional<T> value;
  Diagnostics diagnostics;

  bool ok() const { return value.has_value() && !has_errors(diagnostics); }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }

  static Outcome success(T v, Diagnostics warnings = {}) {
    return Outcome{std::move(v), std::move(warnings)};
  }
  static Outcome failure(Diagnostics diags) {
    return Outcome{std::nullopt, std::move(diags)};
  }
  static Outcome failure(Diagnostic d) {
    return Outcome{std::nullopt, Diagnostics{std::move(d)}};
  }
};

// CRLF and lone CR become LF; a leading UTF-8 byte order mark is dropped.
std::string normalize_newlines(std::string_view text);

// Splits on LF. A trailing LF does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

// Re-slices `text` (already LF-normalized) by `span`.
std::string slice(std::string_view text, const SourceSpan& span);

}  // namespace ontoweave
