// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/markdown.hpp"

#include <cctype>

#include "ontoweave/source.hpp"
#include "ontoweave/utf8.hpp"

namespace ontoweave {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n'; }

class InlineParser {
 public:
  explicit InlineParser(std::string_view text) : text_(text) {}

  std::vector<Inline> run(bool& unclosed) {
    auto out = parse(0, text_.size());
    unclosed = unclosed_;
    return out;
  }

 private:
  static void add_text(std::vector<Inline>& out, std::string_view s) {
    if (s.empty()) return;
    if (!out.empty() && out.back().kind == Inline::Kind::Text) {
      out.back().text += s;
    } else {
      out.push_back(Inline{Inline::Kind::Text, std::string(s), {}, {}});
    }
  }

  // Closing `*` for an emphasis opened at `open`: not part of `**`, and
  // preceded by a non-blank.
  std::size_t find_emphasis_close(std::size_t open, std::size_t end) const {
    for (std::size_t j = open + 2; j < end; ++j) {
      if (text_[j] == '`') {
        const auto close = text_.find('`', j + 1);
        if (close == std::string_view::npos || close >= end) break;
        j = close;
        continue;
      }
      if (text_[j] != '*') continue;
      if (j + 1 < end && text_[j + 1] == '*') {
        ++j;
        continue;
      }
      if (!is_ws(text_[j - 1])) return j;
    }
    return std::string_view::npos;
  }

  std::size_t find_strong_close(std::size_t open, std::size_t end) const {
    for (std::size_t j = open + 3; j + 1 < end; ++j) {
      if (text_[j] == '*' && text_[j + 1] == '*' && !is_ws(text_[j - 1])) {
        return j;
      }
    }
    return std::string_view::npos;
  }

  std::vector<Inline> parse(std::size_t begin, std::size_t end) {
    std::vector<Inline> out;
    std::size_t i = begin;
    std::size_t text_start = begin;
    const auto flush = [&](std::size_t upto) {
      add_text(out, text_.substr(text_start, upto - text_start));
    };
    while (i < end) {
      const char c = text_[i];
      if (c == '`') {
        const auto close = text_.find('`', i + 1);
        if (close == std::string_view::npos || close >= end) {
          unclosed_ = true;
          ++i;
          continue;
        }
        flush(i);
        out.push_back(Inline{Inline::Kind::Code,
                             std::string(text_.substr(i + 1, close - i - 1)),
                             {},
                             {}});
        i = text_start = close + 1;
        continue;
      }
      if (c == '*' && i + 1 < end && text_[i + 1] == '*') {
        if (i + 2 < end && !is_ws(text_[i + 2])) {
          const auto close = find_strong_close(i, end);
          if (close != std::string_view::npos) {
            flush(i);
            Inline strong{Inline::Kind::Strong, {}, {}, parse(i + 2, close)};
            out.push_back(std::move(strong));
            i = text_start = close + 2;
            continue;
          }
          unclosed_ = true;
        }
        i += 2;
        continue;
      }
      if (c == '*') {
        if (i + 1 < end && !is_ws(text_[i + 1])) {
          const auto close = find_emphasis_close(i, end);
          if (close != std::string_view::npos) {
            flush(i);
            Inline em{Inline::Kind::Emphasis, {}, {}, parse(i + 1, close)};
            out.push_back(std::move(em));
            i = text_start = close + 1;
            continue;
          }
          unclosed_ = true;
        }
        ++i;
        continue;
      }
      if (c == '[') {
        const auto mid = text_.find("](", i + 1);
        if (mid != std::string_view::npos && mid < end) {
          const auto close = text_.find(')', mid + 2);
          if (close != std::string_view::npos && close < end &&
              text_.substr(i + 1, mid - i - 1).find('\n') ==
                  std::string_view::npos) {
            flush(i);
            Inline link{Inline::Kind::Link, {},
                        std::string(text_.substr(mid + 2, close - mid - 2)),
                        parse(i + 1, mid)};
            out.push_back(std::move(link));
            i = text_start = close + 1;
            continue;
          }
        }
      }
      ++i;
    }
    flush(end);
    return out;
  }

  std::string_view text_;
  bool unclosed_ = false;
};

std::vector<Inline> parse_inline(std::string_view text, bool& unclosed) {
  bool u = false;
  auto out = InlineParser(text).run(u);
  unclosed = unclosed || u;
  return out;
}

int heading_level(std::string_view line) {
  int level = 0;
  while (level < static_cast<int>(line.size()) && line[level] == '#') ++level;
  if (level == 0 || level > 4) return 0;
  if (level < static_cast<int>(line.size()) && line[level] != ' ') return 0;
  return level;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

bool safe_url(std::string_view url) {
  std::string lower;
  for (const char c : url) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      lower.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return lower.rfind("javascript:", 0) != 0 && lower.rfind("data:", 0) != 0 &&
         lower.rfind("vbscript:", 0) != 0;
}

void render_inline(std::string& out, const std::vector<Inline>& content) {
  for (const auto& node : content) {
    switch (node.kind) {
      case Inline::Kind::Text:
        out += escape_html(node.text);
        break;
      case Inline::Kind::Code:
        out += "<code>" + escape_html(node.text) + "</code>";
        break;
      case Inline::Kind::Emphasis:
        out += "<em>";
        render_inline(out, node.children);
        out += "</em>";
        break;
      case Inline::Kind::Strong:
        out += "<strong>";
        render_inline(out, node.children);
        out += "</strong>";
        break;
      case Inline::Kind::Link:
        if (safe_url(node.url)) {
          out += "<a href=\"" + escape_html(node.url) + "\">";
          render_inline(out, node.children);
          out += "</a>";
        } else {
          out += "[";
          render_inline(out, node.children);
          out += "](" + escape_html(node.url) + ")";
        }
        break;
    }
  }
}

}  // namespace

MarkdownDoc parse_markdown(std::string_view text) {
  MarkdownDoc doc;
  std::string paragraph;
  const auto flush = [&] {
    if (paragraph.empty()) return;
    doc.blocks.push_back(Block{Block::Kind::Paragraph, 0,
                               parse_inline(paragraph, doc.unclosed)});
    paragraph.clear();
  };
  for (const auto line : split_lines(text)) {
    if (trim(line).empty()) {
      flush();
      continue;
    }
    if (const int level = heading_level(line)) {
      flush();
      doc.blocks.push_back(Block{Block::Kind::Heading, level,
                                 parse_inline(trim(line.substr(level)),
                                              doc.unclosed)});
      continue;
    }
    if (line.substr(0, 2) == "- ") {
      flush();
      doc.blocks.push_back(Block{Block::Kind::ListItem, 0,
                                 parse_inline(trim(line.substr(2)),
                                              doc.unclosed)});
      continue;
    }
    if (!paragraph.empty()) paragraph.push_back('\n');
    paragraph += trim(line);
  }
  flush();
  return doc;
}

bool markdown_has_unclosed_markup(std::string_view text) {
  return parse_markdown(text).unclosed;
}

std::string plain_text(const std::vector<Inline>& content) {
  std::string out;
  for (const auto& node : content) {
    switch (node.kind) {
      case Inline::Kind::Text:
      case Inline::Kind::Code:
        out += node.text;
        break;
      case Inline::Kind::Emphasis:
      case Inline::Kind::Strong:
        out += plain_text(node.children);
        break;
      case Inline::Kind::Link:
        out += plain_text(node.children) + " (" + node.url + ")";
        break;
    }
  }
  return out;
}

std::string anchor(std::string_view name) {
  std::string out;
  bool pending_dash = false;
  for (std::size_t pos = 0; pos < name.size();) {
    const char32_t c = utf8::decode(name, pos);
    if (utf8::is_letter(c) || utf8::is_digit(c) || utf8::is_mark(c)) {
      if (pending_dash && !out.empty()) out.push_back('-');
      pending_dash = false;
      utf8::append(out, utf8::to_lower(c));
    } else {
      pending_dash = true;
    }
  }
  return out;
}

bool AnchorRegistry::reserve(const std::string& id) {
  return taken_.insert(id).second;
}

std::string AnchorRegistry::claim(const std::string& base, bool* collided) {
  if (collided) *collided = false;
  if (taken_.insert(base).second) return base;
  if (collided) *collided = true;
  for (int n = 2;; ++n) {
    std::string candidate = base + "-" + std::to_string(n);
    if (taken_.insert(candidate).second) return candidate;
  }
}

std::string escape_html(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string render_markdown(std::string_view narrative,
                            AnchorRegistry& registry,
                            std::vector<RenderedHeading>* headings) {
  const MarkdownDoc doc = parse_markdown(narrative);
  std::string out;
  bool in_list = false;
  for (const auto& block : doc.blocks) {
    if (block.kind != Block::Kind::ListItem && in_list) {
      out += "</ul>\n";
      in_list = false;
    }
    switch (block.kind) {
      case Block::Kind::Heading: {
        const std::string title = plain_text(block.content);
        std::string base = anchor(title);
        // `def-` and `chunk-` ids belong to entities and source blocks.
        if (base.empty() || base.rfind("def-", 0) == 0 ||
            base.rfind("chunk-", 0) == 0) {
          base = "sec-" + base;
        }
        if (base == "sec-") base = "section";
        bool collided = false;
        const std::string id = registry.claim(base, &collided);
        if (headings) {
          headings->push_back({block.level, title, id, collided});
        }
        const std::string tag = "h" + std::to_string(block.level);
        out += "<" + tag + " id=\"" + escape_html(id) + "\">";
        render_inline(out, block.content);
        out += "</" + tag + ">\n";
        break;
      }
      case Block::Kind::Paragraph:
        out += "<p>";
        render_inline(out, block.content);
        out += "</p>\n";
        break;
      case Block::Kind::ListItem:
        if (!in_list) {
          out += "<ul>\n";
          in_list = true;
        }
        out += "<li>";
        render_inline(out, block.content);
        out += "</li>\n";
        break;
    }
  }
  if (in_list) out += "</ul>\n";
  return out;
}

std::string render_markdown(std::string_view narrative) {
  AnchorRegistry registry;
  return render_markdown(narrative, registry);
}

}  // namespace ontoweave
