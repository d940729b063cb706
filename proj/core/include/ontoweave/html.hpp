// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Weaves a document into one self-contained HTML5 page: sidebar table of
// contents, highlighted and cross-linked source blocks that can be hidden
// per chunk or globally, and an embedded entity manifest for the viewer.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontoweave/locale.hpp"
#include "ontoweave/markdown.hpp"
#include "ontoweave/model.hpp"

namespace ontoweave {

enum class TokenClass {
  Keyword,
  Option,
  EntityRef,
  EntityDef,
  TextLiteral,
  Remark,
  Paren,
  // Whitespace and integers.
  Plain,
};

std::string_view token_class_name(TokenClass c);

struct ClassifiedRun {
  SourceSpan span;
  TokenClass token_class = TokenClass::Plain;
  // Exact source text of the run.
  std::string text;
};

// Runs tiling a parsed code chunk's raw text in order.
std::vector<ClassifiedRun> classify_tokens(const Chunk& chunk,
                                           const SymbolTable& symbols);

struct TocEntry {
  int level = 1;
  std::string title;
  std::string anchor;
  std::vector<TocEntry> children;
};

std::vector<TocEntry> build_toc(const std::vector<RenderedHeading>& headings);

struct HtmlOptions {
  // Labels from these bundles go into the manifest.
  std::vector<LocaleBundle> bundles;
  Direction direction = Direction::Ltr;
  bool hide_source_default = false;
};

struct HtmlOutput {
  std::string html;
  // W011 for headings whose anchors had to be suffixed.
  Diagnostics warnings;
};

HtmlOutput emit_html(const OntologyDoc& doc, const HtmlOptions& options = {});

// The embedded viewer script.
std::string_view viewer_script();

}  // namespace ontoweave
