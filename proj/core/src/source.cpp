// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/source.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "ontoweave/utf8.hpp"

namespace ontoweave {

namespace {

bool before_or_at(int l1, int c1, int l2, int c2) {
  return std::tie(l1, c1) <= std::tie(l2, c2);
}

}  // namespace

bool SourceSpan::contains(const SourceSpan& o) const {
  return before_or_at(start_line, start_column, o.start_line,
                      o.start_column) &&
         before_or_at(o.end_line, o.end_column, end_line, end_column);
}

SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a;
  if (!before_or_at(a.start_line, a.start_column, b.start_line,
                    b.start_column)) {
    out.start_line = b.start_line;
    out.start_column = b.start_column;
  }
  if (before_or_at(a.end_line, a.end_column, b.end_line, b.end_column)) {
    out.end_line = b.end_line;
    out.end_column = b.end_column;
  }
  return out;
}

Diagnostic make_error(std::string code, std::string message, SourceSpan span) {
  return {Severity::Error, std::move(code), std::move(message), span};
}

Diagnostic make_warning(std::string code, std::string message,
                        SourceSpan span) {
  return {Severity::Warning, std::move(code), std::move(message), span};
}

bool has_errors(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

void merge_diagnostics(Diagnostics& into, const Diagnostics& more) {
  for (const auto& d : more) {
    if (std::find(into.begin(), into.end(), d) == into.end()) {
      into.push_back(d);
    }
  }
}

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  return os << (d.is_error() ? "error" : "warning") << ' ' << d.code << ' '
            << d.span.start_line << ':' << d.span.start_column << ' '
            << d.message;
}

std::string normalize_newlines(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string slice(std::string_view text, const SourceSpan& span) {
  // Walk to the byte offsets of both positions.
  std::size_t pos = 0;
  int line = 1;
  int column = 1;
  std::size_t begin = std::string_view::npos;
  std::size_t end = std::string_view::npos;
  auto at = [&](int l, int c) { return line == l && column == c; };
  while (true) {
    if (begin == std::string_view::npos && at(span.start_line,
                                              span.start_column)) {
      begin = pos;
    }
    if (at(span.end_line, span.end_column)) {
      end = pos;
      break;
    }
    if (pos >= text.size()) break;
    if (text[pos] == '\n') {
      ++pos;
      ++line;
      column = 1;
    } else {
      utf8::decode(text, pos);
      ++column;
    }
  }
  if (begin == std::string_view::npos) return {};
  if (end == std::string_view::npos) end = text.size();
  return std::string(text.substr(begin, end - begin));
}

}  // namespace ontoweave
