// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/html.hpp"

#include <map>
#include <set>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

#include "ontoweave/reader.hpp"

namespace ontoweave {

namespace {

using Position = std::pair<int, int>;

Position start_of(const SourceSpan& s) { return {s.start_line, s.start_column}; }

constexpr std::string_view kStylesheet = R"css(
:root { --ink: #1d2330; --muted: #5b6475; --rule: #d9dde5; --code-bg: #f6f7f9; }
* { box-sizing: border-box; }
body { margin: 0; font: 16px/1.55 Georgia, "Times New Roman", serif; color: var(--ink); }
#ow-toc { position: fixed; top: 0; bottom: 0; width: 16rem; overflow-y: auto; padding: 1rem; border-inline-end: 1px solid var(--rule); font: 14px/1.4 system-ui, sans-serif; }
#ow-toc ul { list-style: none; margin: 0; padding-inline-start: 0.9rem; }
#ow-toc > ul { padding-inline-start: 0; }
#ow-toc a { color: var(--muted); text-decoration: none; }
#ow-toc a.active { color: var(--ink); font-weight: 600; }
#ow-toc .controls { margin-bottom: 1rem; display: flex; flex-direction: column; gap: 0.4rem; }
main { margin-inline-start: 16rem; padding: 1.5rem 2.5rem; max-width: 60rem; }
.source { margin: 1rem 0; border: 1px solid var(--rule); border-radius: 4px; background: var(--code-bg); }
.source > .ow-toggle { font: 12px system-ui, sans-serif; margin: 0.3rem; }
.source.collapsed > pre { display: none; }
pre.code { margin: 0; padding: 0.6rem 0.9rem; overflow-x: auto; font: 13px/1.45 "DejaVu Sans Mono", Menlo, monospace; }
.keyword { color: #7a2e8e; font-weight: 600; }
.option { color: #1f5f99; }
.entity-def { color: #0b6b3a; font-weight: 600; }
a.entity-ref { color: #0b6b3a; text-decoration: underline dotted; }
.text-literal { color: #a0481b; }
.remark { color: #7b8190; font-style: italic; }
.paren { color: #9aa1ad; }
)css";

void render_toc(std::string& out, const std::vector<TocEntry>& entries) {
  out += "<ul>\n";
  for (const auto& e : entries) {
    out += "<li><a href=\"#" + escape_html(e.anchor) + "\">" +
           escape_html(e.title) + "</a>";
    if (!e.children.empty()) {
      out.push_back('\n');
      render_toc(out, e.children);
    }
    out += "</li>\n";
  }
  out += "</ul>\n";
}

// `<` is escaped so the JSON cannot terminate its script element.
std::string script_safe_json(const nlohmann::ordered_json& j) {
  const std::string raw = j.dump();
  std::string out;
  out.reserve(raw.size());
  for (const char c : raw) {
    if (c == '<') {
      out += "\\u003c";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string_view token_class_name(TokenClass c) {
  switch (c) {
    case TokenClass::Keyword:
      return "keyword";
    case TokenClass::Option:
      return "option";
    case TokenClass::EntityRef:
      return "entity-ref";
    case TokenClass::EntityDef:
      return "entity-def";
    case TokenClass::TextLiteral:
      return "text-literal";
    case TokenClass::Remark:
      return "remark";
    case TokenClass::Paren:
      return "paren";
    case TokenClass::Plain:
      return "plain";
  }
  return {};
}

std::vector<ClassifiedRun> classify_tokens(const Chunk& chunk,
                                           const SymbolTable& symbols) {
  // Symbols that are heads or characteristic values, and definition sites.
  std::set<Position> keyword_at;
  std::set<Position> definition_at;
  const std::function<void(const ClassExpression&)> visit =
      [&](const ClassExpression& e) {
        if (e.kind != ClassExpression::Kind::Named) {
          keyword_at.insert(start_of(e.head_span));
        }
        for (const auto& op : e.operands) visit(op);
      };
  for (const auto& form : chunk.forms) {
    keyword_at.insert(start_of(form.head_span));
    if (const SymbolEntry* entry = symbols.find(form.name.text);
        entry && entry->span == form.name.span) {
      definition_at.insert(start_of(form.name.span));
    }
    for (const auto& option : form.options) {
      for (const auto& value : option.values) {
        if (const auto* e = std::get_if<ClassExpression>(&value)) {
          visit(*e);
        } else if (const auto* n = std::get_if<Name>(&value);
                   n && option.key == OptionKey::Characteristic) {
          keyword_at.insert(start_of(n->span));
        }
      }
    }
  }

  std::vector<ClassifiedRun> runs;
  auto lexed = lex(chunk.raw_text, chunk.span.start_line);
  for (auto& t : lexed.tokens) {
    TokenClass c = TokenClass::Plain;
    switch (t.kind) {
      case TokenKind::LParen:
      case TokenKind::RParen:
        c = TokenClass::Paren;
        break;
      case TokenKind::OptionKeyword:
        c = TokenClass::Option;
        break;
      case TokenKind::Text:
        c = TokenClass::TextLiteral;
        break;
      case TokenKind::Remark:
        c = TokenClass::Remark;
        break;
      case TokenKind::Symbol:
        if (keyword_at.count(start_of(t.span))) {
          c = TokenClass::Keyword;
        } else if (definition_at.count(start_of(t.span))) {
          c = TokenClass::EntityDef;
        } else {
          c = TokenClass::EntityRef;
        }
        break;
      case TokenKind::Integer:
      case TokenKind::Whitespace:
        c = TokenClass::Plain;
        break;
    }
    runs.push_back(ClassifiedRun{t.span, c, std::move(t.raw)});
  }
  return runs;
}

std::vector<TocEntry> build_toc(const std::vector<RenderedHeading>& headings) {
  std::vector<TocEntry> roots;
  // Path of open entries from a root down to the latest one.
  std::vector<TocEntry*> path;
  for (const auto& h : headings) {
    while (!path.empty() && path.back()->level >= h.level) path.pop_back();
    auto& siblings = path.empty() ? roots : path.back()->children;
    siblings.push_back(TocEntry{h.level, h.title, h.anchor, {}});
    path.push_back(&siblings.back());
  }
  return roots;
}

HtmlOutput emit_html(const OntologyDoc& source, const HtmlOptions& options) {
  HtmlOutput result;
  const OntologyDoc doc = inject_labels(source, options.bundles);

  AnchorRegistry registry;
  for (const char* fixed :
       {"ow-toc", "ow-manifest", "ow-toggle-all", "ow-locale", "ow-main"}) {
    registry.reserve(fixed);
  }
  for (const auto& chunk : doc.chunks) {
    registry.reserve("chunk-" + std::to_string(chunk.id));
  }
  std::map<std::string, std::string, std::less<>> entity_anchor;
  for (const auto& entry : doc.symbols.entries()) {
    const std::string id = registry.claim("def-" + anchor(entry.name));
    entity_anchor.emplace(entry.name, id.substr(4));
  }
  const auto href_for = [&](const std::string& name) {
    if (const auto it = entity_anchor.find(name); it != entity_anchor.end()) {
      return "#def-" + it->second;
    }
    std::string id = "def-" + anchor(name);
    if (registry.taken(id)) id += "-undefined";
    return "#" + id;
  };

  bool has_code = false;
  std::vector<RenderedHeading> headings;
  std::string body;
  for (const auto& chunk : doc.chunks) {
    const std::string id = std::to_string(chunk.id);
    if (chunk.kind == ChunkKind::Narrative) {
      const std::size_t before = headings.size();
      body += "<section class=\"narrative\" id=\"chunk-" + id + "\">\n";
      body += render_markdown(chunk.narrative_text(), registry, &headings);
      body += "</section>\n";
      for (std::size_t i = before; i < headings.size(); ++i) {
        if (headings[i].collided) {
          result.warnings.push_back(make_warning(
              "W011",
              "heading '" + headings[i].title + "' repeats an anchor; using '" +
                  headings[i].anchor + "'",
              chunk.span));
        }
      }
      continue;
    }
    has_code = true;
    body += "<div class=\"source";
    if (options.hide_source_default) body += " collapsed";
    body += "\" id=\"chunk-" + id + "\" data-chunk=\"" + id + "\">\n";
    body += "<button type=\"button\" class=\"ow-toggle\" data-chunk=\"" + id +
            "\">" +
            (options.hide_source_default ? "Show source" : "Hide source") +
            "</button>\n";
    body += "<pre class=\"code\" dir=\"auto\"><code>";
    for (const auto& run : classify_tokens(chunk, doc.symbols)) {
      const std::string text = escape_html(run.text);
      switch (run.token_class) {
        case TokenClass::Plain:
          body += text;
          break;
        case TokenClass::EntityDef: {
          const std::string a = entity_anchor.at(run.text);
          body += "<span class=\"entity-def\" id=\"def-" + escape_html(a) +
                  "\" data-entity=\"" + escape_html(a) + "\">" + text +
                  "</span>";
          break;
        }
        case TokenClass::EntityRef: {
          const std::string href = href_for(run.text);
          body += "<a class=\"entity-ref\" href=\"" + escape_html(href) + "\"";
          if (const auto it = entity_anchor.find(run.text);
              it != entity_anchor.end()) {
            body += " data-entity=\"" + escape_html(it->second) + "\"";
          }
          body += ">" + text + "</a>";
          break;
        }
        default:
          body += "<span class=\"" +
                  std::string(token_class_name(run.token_class)) + "\">" +
                  text + "</span>";
      }
    }
    body += "</code></pre>\n</div>\n";
  }

  nlohmann::ordered_json manifest;
  manifest["entities"] = nlohmann::ordered_json::array();
  for (const auto& entry : doc.symbols.entries()) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (const Label* l : doc.symbols.labels_for(entry.name)) {
      if (!labels.contains(l->locale)) labels[l->locale] = l->text;
    }
    manifest["entities"].push_back({
        {"name", entry.name},
        {"kind", std::string(entity_kind_name(entry.kind))},
        {"anchor", entity_anchor.at(entry.name)},
        {"labels", std::move(labels)},
    });
  }
  manifest["direction"] = std::string(direction_name(options.direction));

  std::string title = doc.header.name.text;
  if (title.empty() && !headings.empty()) title = headings.front().title;

  std::string& out = result.html;
  out += "<!DOCTYPE html>\n<html";
  if (!options.bundles.empty()) {
    out += " lang=\"" + escape_html(options.bundles.front().locale) + "\"";
  }
  if (options.direction == Direction::Rtl) out += " dir=\"rtl\"";
  out += ">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<meta name=\"viewport\" content=\"width=device-width, "
         "initial-scale=1\">\n";
  out += "<title>" + escape_html(title) + "</title>\n";
  out += "<style>" + std::string(kStylesheet) + "</style>\n</head>\n";
  out += "<body";
  if (options.hide_source_default) out += " data-hide-source=\"true\"";
  out += ">\n<nav id=\"ow-toc\">\n<div class=\"controls\">\n";
  if (has_code) {
    out += "<button type=\"button\" id=\"ow-toggle-all\">";
    out += options.hide_source_default ? "Show all source" : "Hide all source";
    out += "</button>\n";
  }
  out += "<select id=\"ow-locale\" aria-label=\"Label language\">"
         "<option value=\"\">Names</option></select>\n</div>\n";
  render_toc(out, build_toc(headings));
  out += "</nav>\n<main id=\"ow-main\">\n";
  out += body;
  out += "</main>\n";
  out += "<script type=\"application/json\" id=\"ow-manifest\">" +
         script_safe_json(manifest) + "</script>\n";
  out += "<script>\n" + std::string(viewer_script()) + "</script>\n";
  out += "</body>\n</html>\n";
  return result;
}

}  // namespace ontoweave
