// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Reads literate ontology source (`.lont`).
//
// A file is a sequence of chunks separated by blank lines. Lines whose first
// non-blank characters are `;;` form narrative chunks (Markdown); all other
// lines form code chunks holding s-expression forms. A single `;` starts a
// remark that runs to the end of the line.

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoweave/model.hpp"
#include "ontoweave/source.hpp"

namespace ontoweave {

struct RawChunk {
  ChunkKind kind = ChunkKind::Code;
  // Full source lines with their 1-based line numbers.
  std::vector<std::pair<int, std::string>> lines;

  std::string text() const;
  SourceSpan span() const;
};

// `source` must already be LF-normalized. Never fails.
std::vector<RawChunk> segment(std::string_view source);

// Strips leading blanks, the `;;` marker and at most one following space.
std::string strip_narrative_marker(std::string_view line);

enum class TokenKind {
  LParen,
  RParen,
  Symbol,
  OptionKeyword,
  Text,
  Integer,
  // Trivia, produced by lex() only.
  Whitespace,
  Remark,
};

struct Token {
  TokenKind kind = TokenKind::Symbol;
  // Decoded content for Text tokens, the exact source slice otherwise.
  std::string lexeme;
  // Always the exact source slice.
  std::string raw;
  SourceSpan span;

  bool is_trivia() const {
    return kind == TokenKind::Whitespace || kind == TokenKind::Remark;
  }
};

struct TokenStream {
  std::vector<Token> tokens;
  Diagnostics diagnostics;
};

// Lexes the text of one code chunk whose first line is `first_line`, keeping
// whitespace and remarks so the tokens tile the input exactly.
TokenStream lex(std::string_view code, int first_line = 1);

// lex() without trivia.
TokenStream tokenize(std::string_view code, int first_line = 1);

bool is_symbol(std::string_view text);
bool is_option_keyword(std::string_view text);

// Maps surface forms back to canonical ones while parsing translated
// source. Keyword keys cover form heads, expression heads, option keywords
// (with colon) and characteristic values. Unmapped text passes through.
struct Vocabulary {
  std::map<std::string, std::string, std::less<>> keywords;
  std::map<std::string, std::string, std::less<>> identifiers;
};

struct ParsedForms {
  std::vector<Form> forms;
  Diagnostics diagnostics;
};

ParsedForms parse(std::span<const Token> tokens,
                  const Vocabulary* vocabulary = nullptr);

struct BuiltModel {
  OntologyDoc doc;
  Diagnostics diagnostics;
};

// `forms[i]` holds the parsed forms of `chunks[i]` (empty for narrative).
BuiltModel build_model(const std::vector<RawChunk>& chunks,
                       std::vector<std::vector<Form>> forms);

// segment + tokenize + parse + build_model. The document is returned even
// when errors were reported, so callers can still inspect it.
Outcome<OntologyDoc> read_document(std::string_view source,
                                   const Vocabulary* vocabulary = nullptr);

// W001 undefined reference, W002 undocumented entity, W003 malformed
// Markdown in a narrative chunk.
Diagnostics lint(const OntologyDoc& doc);

// W001 diagnostics for every reference to a name missing from the table.
Diagnostics undefined_references(const OntologyDoc& doc);

}  // namespace ontoweave
