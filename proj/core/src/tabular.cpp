// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/tabular.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ontoweave/printer.hpp"
#include "ontoweave/reader.hpp"
#include "ontoweave/utf8.hpp"

namespace ontoweave {

namespace {

std::string row_prefix(int row) { return "row " + std::to_string(row) + ": "; }

Diagnostic with_row(Diagnostic d, int row) {
  d.message = row_prefix(row) + d.message;
  return d;
}

}  // namespace

Outcome<TableData> parse_csv(std::string_view input) {
  const std::string text = normalize_newlines(input);
  TableData table;
  Diagnostics errors;

  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool record_has_content = false;
  bool have_header = false;
  int line = 1;
  int record_line = 1;
  int quote_line = 1;

  const auto end_record = [&]() {
    if (!record_has_content && record.empty() && field.empty()) return;
    record.push_back(std::move(field));
    field.clear();
    if (!have_header) {
      have_header = true;
      std::set<std::string> seen;
      for (const auto& name : record) {
        if (!seen.insert(name).second) {
          errors.push_back(make_error(
              "E072", "duplicate column '" + name + "'",
              SourceSpan::point(record_line, 1)));
        }
      }
      table.header = std::move(record);
    } else if (record.size() != table.header.size()) {
      errors.push_back(make_error(
          "E070",
          "line " + std::to_string(record_line) + " has " +
              std::to_string(record.size()) + " cells, expected " +
              std::to_string(table.header.size()),
          SourceSpan::point(record_line, 1)));
    } else {
      table.rows.push_back(std::move(record));
      table.row_lines.push_back(record_line);
    }
    record.clear();
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty()) {
          quoted = true;
          quote_line = line;
          record_has_content = true;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        record_has_content = true;
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        record_has_content = true;
    }
  }
  if (quoted) {
    errors.push_back(make_error("E071",
                                "quoted field opened on line " +
                                    std::to_string(quote_line) +
                                    " is never closed",
                                SourceSpan::point(quote_line, 1)));
  } else {
    end_record();
  }
  if (has_errors(errors)) return Outcome<TableData>::failure(std::move(errors));
  return Outcome<TableData>::success(std::move(table));
}

Outcome<std::vector<Placeholder>> placeholders(const PatternTemplate& tpl) {
  std::vector<Placeholder> out;
  const std::string_view text = tpl.text;
  int line = 1;
  int column = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '\n') {
      ++pos;
      ++line;
      column = 1;
      continue;
    }
    if (text.substr(pos, 2) == "{{" || text.substr(pos, 2) == "}}") {
      pos += 2;
      column += 2;
      continue;
    }
    if (text[pos] == '{') {
      const auto close = text.find('}', pos + 1);
      const auto nl = text.find('\n', pos + 1);
      if (close == std::string_view::npos || close > nl) {
        return Outcome<std::vector<Placeholder>>::failure(make_error(
            "E073", "placeholder is never closed",
            SourceSpan::point(line, column)));
      }
      const std::string column_name(text.substr(pos + 1, close - pos - 1));
      const int width = static_cast<int>(utf8::length(column_name)) + 2;
      out.push_back(Placeholder{column_name,
                                {line, column, line, column + width}});
      column += width;
      pos = close + 1;
      continue;
    }
    utf8::decode(text, pos);
    ++column;
  }
  return Outcome<std::vector<Placeholder>>::success(std::move(out));
}

Outcome<std::string> substitute(const PatternTemplate& tpl,
                                const std::vector<std::string>& header,
                                const std::vector<std::string>& row) {
  auto found = placeholders(tpl);
  if (!found) return Outcome<std::string>::failure(found.diagnostics);
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) index.emplace(header[i], i);
  Diagnostics errors;
  for (const auto& p : *found) {
    if (!index.count(p.column)) {
      errors.push_back(make_error(
          "E073", "placeholder '{" + p.column + "}' names no column", p.span));
    }
  }
  if (!errors.empty()) return Outcome<std::string>::failure(std::move(errors));

  std::string out;
  const std::string_view text = tpl.text;
  for (std::size_t pos = 0; pos < text.size();) {
    if (text.substr(pos, 2) == "{{" || text.substr(pos, 2) == "}}") {
      out.push_back(text[pos]);
      pos += 2;
    } else if (text[pos] == '{') {
      const auto close = text.find('}', pos + 1);
      const auto i = index.at(text.substr(pos + 1, close - pos - 1));
      if (i < row.size()) out += row[i];
      pos = close + 1;
    } else {
      out.push_back(text[pos++]);
    }
  }
  return Outcome<std::string>::success(std::move(out));
}

Outcome<std::vector<Chunk>> expand(const TableData& table,
                                   const PatternTemplate& tpl) {
  // Template errors are reported once, against the template.
  if (auto probe = substitute(tpl, table.header,
                              std::vector<std::string>(table.header.size()));
      !probe) {
    return Outcome<std::vector<Chunk>>::failure(probe.diagnostics);
  }

  std::vector<Chunk> chunks;
  Diagnostics diagnostics;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    const std::string text = *substitute(tpl, table.header, table.rows[r]);
    const auto tokens = tokenize(text);
    ParsedForms parsed = parse(tokens.tokens);
    bool failed = false;
    for (const auto& d : tokens.diagnostics) {
      diagnostics.push_back(with_row(d, row));
      failed = failed || d.is_error();
    }
    for (const auto& d : parsed.diagnostics) {
      diagnostics.push_back(with_row(d, row));
      failed = failed || d.is_error();
    }
    if (failed) continue;
    if (parsed.forms.size() != 1) {
      diagnostics.push_back(make_error(
          "E074",
          row_prefix(row) + "template produced " +
              std::to_string(parsed.forms.size()) + " forms, expected one",
          SourceSpan::point(1, 1)));
      continue;
    }
    Chunk chunk;
    chunk.id = static_cast<int>(r);
    chunk.kind = ChunkKind::Code;
    chunk.raw_text = text;
    chunk.forms = std::move(parsed.forms);
    chunk.span = chunk.forms.front().span;
    chunks.push_back(std::move(chunk));
  }
  if (has_errors(diagnostics)) {
    return Outcome<std::vector<Chunk>>::failure(std::move(diagnostics));
  }
  return Outcome<std::vector<Chunk>>::success(std::move(chunks),
                                              std::move(diagnostics));
}

Outcome<OntologyDoc> expand_document(std::string_view source,
                                     const TableData& table,
                                     const PatternTemplate& tpl) {
  auto base = read_document(source);
  if (!base) return base;
  auto generated = expand(table, tpl);
  if (!generated) {
    return Outcome<OntologyDoc>::failure(std::move(generated.diagnostics));
  }

  std::string text = canonical_print(*base);
  int line = static_cast<int>(split_lines(text).size());
  // First and last document line of each generated row.
  std::vector<std::pair<int, int>> row_lines;
  for (std::size_t r = 0; r < generated->size(); ++r) {
    const std::string code = print_chunk((*generated)[r]);
    text += "\n;; Generated from row " + std::to_string(r + 1) + "\n\n";
    const int first = line + 4;
    text += code + "\n";
    line = first + static_cast<int>(split_lines(code).size()) - 1;
    row_lines.emplace_back(first, line);
  }

  auto result = read_document(text);
  for (auto& d : result.diagnostics) {
    for (std::size_t r = 0; r < row_lines.size(); ++r) {
      if (d.span.start_line >= row_lines[r].first &&
          d.span.start_line <= row_lines[r].second) {
        d = with_row(std::move(d), static_cast<int>(r) + 1);
        break;
      }
    }
  }
  merge_diagnostics(result.diagnostics, generated.diagnostics);
  return result;
}

}  // namespace ontoweave
