// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// The narrative Markdown subset: `#`..`####` headings, blank-line separated
// paragraphs, `*em*`, `**strong**`, `` `code` ``, `[text](url)` and `- item`
// lists. Anything else, raw HTML included, is plain text.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontoweave {

struct Inline {
  enum class Kind { Text, Emphasis, Strong, Code, Link };

  Kind kind = Kind::Text;
  // Text and Code content.
  std::string text;
  // Link target.
  std::string url;
  // Emphasis, Strong and Link content.
  std::vector<Inline> children;
};

struct Block {
  enum class Kind { Heading, Paragraph, ListItem };

  Kind kind = Kind::Paragraph;
  // 1-4 for headings.
  int level = 0;
  std::vector<Inline> content;
};

struct MarkdownDoc {
  std::vector<Block> blocks;
  // An emphasis, strong or inline-code opener was never closed.
  bool unclosed = false;
};

MarkdownDoc parse_markdown(std::string_view text);

bool markdown_has_unclosed_markup(std::string_view text);

// Flattened text; links become `text (url)`.
std::string plain_text(const std::vector<Inline>& content);

// Lowercase, every run of non-alphanumerics replaced by one `-`, trimmed.
// Letters and digits from any script count as alphanumeric.
std::string anchor(std::string_view name);

// Hands out document-unique ids, suffixing `-2`, `-3`... on collision.
class AnchorRegistry {
 public:
  // Reserves `id` exactly; returns false if it was taken.
  bool reserve(const std::string& id);
  bool taken(const std::string& id) const { return taken_.count(id) != 0; }
  // Returns `base` or the first free suffixed variant. `collided` reports
  // whether a suffix was needed.
  std::string claim(const std::string& base, bool* collided = nullptr);

 private:
  std::set<std::string> taken_;
};

std::string escape_html(std::string_view text);

struct RenderedHeading {
  int level = 0;
  std::string title;
  std::string anchor;
  bool collided = false;
};

// HTML fragment for one narrative chunk. Heading ids come from `registry`;
// every heading is appended to `headings` when given.
std::string render_markdown(std::string_view narrative,
                            AnchorRegistry& registry,
                            std::vector<RenderedHeading>* headings = nullptr);

std::string render_markdown(std::string_view narrative);

}  // namespace ontoweave
