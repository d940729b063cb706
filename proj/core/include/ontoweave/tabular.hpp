// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Generates forms from CSV rows through a one-form template such as
//
//   (defclass {name} :super {super} :label "{label}")
//
// `{column}` is replaced by the row's cell verbatim; `{{` and `}}` stand for
// literal braces.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontoweave/model.hpp"
#include "ontoweave/source.hpp"

namespace ontoweave {

struct TableData {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // CSV line on which each row starts.
  std::vector<int> row_lines;
};

// E070 ragged row, E071 unterminated quote, E072 duplicate column.
Outcome<TableData> parse_csv(std::string_view text);

struct PatternTemplate {
  std::string text;
};

struct Placeholder {
  std::string column;
  SourceSpan span;
};

// E073 for an unclosed `{`.
Outcome<std::vector<Placeholder>> placeholders(const PatternTemplate& tpl);

// E073 for a placeholder naming no column.
Outcome<std::string> substitute(const PatternTemplate& tpl,
                                const std::vector<std::string>& header,
                                const std::vector<std::string>& row);

// One code chunk per row, in row order, ids counting from 0. Errors from a
// row cite its 1-based row number; E074 when a row does not yield exactly
// one form.
Outcome<std::vector<Chunk>> expand(const TableData& table,
                                   const PatternTemplate& tpl);

// Appends every generated chunk to `source`, each after a narrative chunk
// `Generated from row N`, and reads the result. Errors inside generated
// chunks, E021 duplicates included, name the row.
Outcome<OntologyDoc> expand_document(std::string_view source,
                                     const TableData& table,
                                     const PatternTemplate& tpl);

}  // namespace ontoweave
