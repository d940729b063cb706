// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Word-processing export and tracked-change import.
//
// Every code chunk becomes a run of `Code` paragraphs, one per canonical
// line, inside a bookmark `chunk-<id>`. Narrative chunks are bookmarked as
// `note-<id>` so edits to prose can be addressed too.

#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoweave/locale.hpp"
#include "ontoweave/model.hpp"
#include "ontoweave/source.hpp"

namespace ontoweave {

enum class ParagraphStyle { Normal, Heading1, Heading2, Heading3, Heading4, Code };

std::string_view style_id(ParagraphStyle style);
// Unknown style ids read as Normal.
ParagraphStyle style_from_id(std::string_view id);

enum class Change { None, Inserted, Deleted };

struct Run {
  std::string text;
  Change change = Change::None;
  std::set<std::string> comment_ids;
  bool bold = false;
  bool italic = false;
  bool monospace = false;

  friend bool operator==(const Run&, const Run&) = default;
};

// Which text a view of the document shows.
enum class View { Original, Revised };

struct Paragraph {
  ParagraphStyle style = ParagraphStyle::Normal;
  std::vector<Run> runs;
  bool bidi = false;
  // Tracked change on the paragraph mark itself.
  Change mark = Change::None;

  std::string text(View view) const;
  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

struct DocxComment {
  std::string author;
  std::string body;
  // Paragraph holding the comment reference, -1 when unknown.
  int paragraph = -1;

  friend bool operator==(const DocxComment&, const DocxComment&) = default;
};

// Inclusive paragraph index range.
struct BookmarkRange {
  int first = 0;
  int last = 0;

  friend bool operator==(const BookmarkRange&, const BookmarkRange&) = default;
};

struct DocxDoc {
  std::vector<Paragraph> paragraphs;
  std::map<std::string, DocxComment> comments;
  std::map<std::string, BookmarkRange> bookmarks;

  // Paragraph texts of [first, last] joined by LF. A paragraph whose mark is
  // hidden in `view` runs into the next one.
  std::string text(const BookmarkRange& range, View view) const;
  friend bool operator==(const DocxDoc&, const DocxDoc&) = default;
};

struct DocxOptions {
  Direction direction = Direction::Ltr;
};

std::string chunk_bookmark(const Chunk& chunk);

DocxDoc build_docx(const OntologyDoc& doc, const DocxOptions& options = {});

// Package bytes. A comments part is added only when `doc` has comments.
std::string write_docx(const DocxDoc& doc);

std::string emit_docx(const OntologyDoc& doc, const DocxOptions& options = {});

// E060 not a package or no document part, E061 malformed XML, E062 bookmark
// start without end.
Outcome<DocxDoc> read_docx(std::string_view bytes);

struct FeedbackItem {
  enum class Kind { Edit, Comment };

  int chunk = 0;
  SourceSpan span;
  Kind kind = Kind::Edit;
  std::string original;
  std::string revised;
  std::string comment;
  std::string author;

  friend bool operator==(const FeedbackItem&, const FeedbackItem&) = default;
};

struct FeedbackReport {
  std::vector<FeedbackItem> items;
  // W020 unmatched bookmark, W021 unmatched chunk, W022 comment outside
  // every chunk.
  Diagnostics warnings;
};

FeedbackReport extract_feedback(const OntologyDoc& source,
                                const DocxDoc& edited);

std::string feedback_json(const FeedbackReport& report,
                          std::string_view source_path);

}  // namespace ontoweave
