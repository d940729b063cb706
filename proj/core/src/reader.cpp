// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/reader.hpp"

#include <optional>

#include "ontoweave/markdown.hpp"
#include "ontoweave/utf8.hpp"

namespace ontoweave {

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\f\v") == std::string_view::npos;
}

bool is_narrative_line(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\f\v");
  return first != std::string_view::npos &&
         line.substr(first, 2) == ";;";
}

bool is_space(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\v';
}

bool is_symbol_start(char32_t c) { return utf8::is_letter(c); }

bool is_symbol_continue(char32_t c) {
  return utf8::is_letter(c) || utf8::is_digit(c) || utf8::is_mark(c) ||
         c == '-' || c == '_' || c == '/' || c == '!' || c == '?' ||
         c == '.';
}

// Cursor over one code chunk tracking line and column.
class Lexer {
 public:
  Lexer(std::string_view text, int first_line)
      : text_(text), line_(first_line) {}

  TokenStream run() {
    TokenStream out;
    while (!at_end()) {
      const Mark start = mark();
      const char32_t c = peek();
      if (is_space(c)) {
        while (!at_end() && is_space(peek())) advance();
        out.tokens.push_back(make(TokenKind::Whitespace, start));
      } else if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
        out.tokens.push_back(make(TokenKind::Remark, start));
      } else if (c == '(' || c == ')') {
        advance();
        out.tokens.push_back(
            make(c == '(' ? TokenKind::LParen : TokenKind::RParen, start));
      } else if (c == '"') {
        if (!lex_text(out, start)) return out;
      } else if (c == ':') {
        advance();
        if (at_end() || !is_symbol_start(peek())) {
          out.diagnostics.push_back(make_error(
              "E002", "':' must be followed by a keyword name", span(start)));
          continue;
        }
        while (!at_end() && is_symbol_continue(peek())) advance();
        out.tokens.push_back(make(TokenKind::OptionKeyword, start));
      } else if (c < 0x80 && utf8::is_digit(c)) {
        while (!at_end() && peek() < 0x80 && utf8::is_digit(peek())) advance();
        out.tokens.push_back(make(TokenKind::Integer, start));
      } else if (is_symbol_start(c)) {
        while (!at_end() && is_symbol_continue(peek())) advance();
        out.tokens.push_back(make(TokenKind::Symbol, start));
      } else {
        advance();
        std::string ch;
        utf8::append(ch, c);
        out.diagnostics.push_back(make_error(
            "E002", "illegal character '" + ch + "'", span(start)));
      }
    }
    return out;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int column;
  };

  bool at_end() const { return pos_ >= text_.size(); }

  char32_t peek() const {
    std::size_t p = pos_;
    return utf8::decode(text_, p);
  }

  char32_t advance() {
    const char32_t c = utf8::decode(text_, pos_);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  Mark mark() const { return {pos_, line_, column_}; }

  SourceSpan span(const Mark& start) const {
    return {start.line, start.column, line_, column_};
  }

  Token make(TokenKind kind, const Mark& start) const {
    std::string raw(text_.substr(start.pos, pos_ - start.pos));
    return Token{kind, raw, raw, span(start)};
  }

  bool lex_text(TokenStream& out, const Mark& start) {
    advance();  // opening quote
    std::string decoded;
    while (!at_end()) {
      const Mark here = mark();
      const char32_t c = advance();
      if (c == '"') {
        Token t = make(TokenKind::Text, start);
        t.lexeme = std::move(decoded);
        out.tokens.push_back(std::move(t));
        return true;
      }
      if (c != '\\') {
        utf8::append(decoded, c);
        continue;
      }
      if (at_end()) break;
      const char32_t e = advance();
      switch (e) {
        case '"':
          decoded.push_back('"');
          break;
        case '\\':
          decoded.push_back('\\');
          break;
        case 'n':
          decoded.push_back('\n');
          break;
        case 't':
          decoded.push_back('\t');
          break;
        default:
          out.diagnostics.push_back(
              make_error("E002", "unknown escape sequence in text literal",
                         span(here)));
      }
    }
    out.diagnostics.push_back(
        make_error("E001", "unterminated text literal", span(start)));
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
};

// Parse failure inside one top-level form; the parser resumes after it.
struct FormError {
  Diagnostic diagnostic;
};

class Parser {
 public:
  Parser(std::span<const Token> tokens, const Vocabulary* vocabulary)
      : tokens_(tokens), vocabulary_(vocabulary) {}

  ParsedForms run() {
    ParsedForms out;
    if (!check_balance(out.diagnostics)) return out;
    while (pos_ < tokens_.size()) {
      const std::size_t start = pos_;
      const Token& t = tokens_[pos_];
      if (t.kind != TokenKind::LParen) {
        out.diagnostics.push_back(make_error(
            "E014", "expected '(' to start a form, found '" + t.raw + "'",
            t.span));
        ++pos_;
        continue;
      }
      try {
        out.forms.push_back(parse_form());
      } catch (const FormError& e) {
        out.diagnostics.push_back(e.diagnostic);
        pos_ = match_[start] + 1;
      }
    }
    return out;
  }

 private:
  bool check_balance(Diagnostics& diags) {
    match_.assign(tokens_.size(), 0);
    std::vector<std::size_t> open;
    bool ok = true;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].kind == TokenKind::LParen) {
        open.push_back(i);
      } else if (tokens_[i].kind == TokenKind::RParen) {
        if (open.empty()) {
          diags.push_back(make_error("E010", "unbalanced ')'",
                                     tokens_[i].span));
          ok = false;
        } else {
          match_[open.back()] = i;
          open.pop_back();
        }
      }
    }
    for (const std::size_t i : open) {
      diags.push_back(
          make_error("E010", "unclosed '('", tokens_[i].span));
      ok = false;
    }
    return ok;
  }

  [[noreturn]] void fail(std::string code, std::string message,
                         const SourceSpan& span) const {
    throw FormError{make_error(std::move(code), std::move(message), span)};
  }

  const Token& current() const { return tokens_[pos_]; }

  std::string keyword(std::string_view surface) const {
    if (vocabulary_) {
      const auto it = vocabulary_->keywords.find(surface);
      if (it != vocabulary_->keywords.end()) return it->second;
    }
    return std::string(surface);
  }

  Name identifier(const Token& t) const {
    if (vocabulary_) {
      const auto it = vocabulary_->identifiers.find(t.lexeme);
      if (it != vocabulary_->identifiers.end()) return {it->second, t.span};
    }
    return {t.lexeme, t.span};
  }

  Name expect_name(std::string_view what) {
    const Token& t = current();
    if (t.kind != TokenKind::Symbol) {
      fail("E014",
           "expected " + std::string(what) + ", found '" + t.raw + "'",
           t.span);
    }
    ++pos_;
    return identifier(t);
  }

  Form parse_form() {
    const std::size_t open = pos_++;
    const std::size_t close = match_[open];
    Form form;
    form.span = cover(tokens_[open].span, tokens_[close].span);

    const Token& head = current();
    if (head.kind != TokenKind::Symbol) {
      fail("E011", "expected a form head", head.span);
    }
    const auto kind = form_kind_from_head(keyword(head.lexeme));
    if (!kind) fail("E011", "unknown form head '" + head.lexeme + "'",
                    head.span);
    form.kind = *kind;
    form.head_span = head.span;
    ++pos_;
    if (pos_ == close) fail("E014", "missing entity name", head.span);
    form.name = expect_name("an entity name");

    while (pos_ < close) {
      const Token& kw = current();
      if (kw.kind != TokenKind::OptionKeyword) {
        fail("E014", "expected an option keyword, found '" + kw.raw + "'",
             kw.span);
      }
      const auto key = option_key_from_keyword(keyword(kw.lexeme));
      if (!key || !option_allowed(form.kind, *key)) {
        fail("E012",
             "option '" + kw.lexeme + "' is not allowed on " +
                 std::string(form_head(form.kind)),
             kw.span);
      }
      ++pos_;
      std::vector<OptionValue> values;
      while (pos_ < close && current().kind != TokenKind::OptionKeyword) {
        values.push_back(parse_value(*key, form.kind));
      }
      if (values.empty()) {
        fail("E013", "option '" + kw.lexeme + "' needs at least one value",
             kw.span);
      }
      add_option(form, *key, kw.span, std::move(values));
    }
    pos_ = close + 1;
    return form;
  }

  static void add_option(Form& form, OptionKey key, const SourceSpan& span,
                         std::vector<OptionValue> values) {
    for (auto& o : form.options) {
      if (o.key == key) {
        for (auto& v : values) o.values.push_back(std::move(v));
        return;
      }
    }
    form.options.push_back(Option{key, span, std::move(values)});
  }

  OptionValue parse_value(OptionKey key, FormKind kind) {
    switch (key) {
      case OptionKey::Iri:
      case OptionKey::Comment:
      case OptionKey::Label: {
        const Token& t = current();
        if (t.kind != TokenKind::Text) {
          fail("E014", "expected a quoted text, found '" + t.raw + "'",
               t.span);
        }
        ++pos_;
        return TextLiteral{t.lexeme, t.span};
      }
      case OptionKey::Super:
        if (kind == FormKind::ObjectProperty) {
          return expect_name("a property name");
        }
        return parse_expression();
      case OptionKey::Characteristic: {
        const Token& t = current();
        if (t.kind != TokenKind::Symbol) {
          fail("E014", "expected a characteristic, found '" + t.raw + "'",
               t.span);
        }
        const std::string value = keyword(t.lexeme);
        bool known = false;
        for (const auto c : kCharacteristics) known = known || c == value;
        if (!known) {
          fail("E014", "unknown characteristic '" + t.lexeme + "'", t.span);
        }
        ++pos_;
        return Name{value, t.span};
      }
      case OptionKey::Fact:
        return parse_fact();
      default:
        return parse_expression();
    }
  }

  Fact parse_fact() {
    const Token& t = current();
    if (t.kind != TokenKind::LParen) {
      fail("E014", "expected '(property individual)', found '" + t.raw + "'",
           t.span);
    }
    const std::size_t open = pos_++;
    const std::size_t close = match_[open];
    if (close - open != 3) {
      fail("E013", "a fact takes exactly a property and an individual",
           cover(t.span, tokens_[close].span));
    }
    Fact fact;
    fact.property = expect_name("a property name");
    fact.individual = expect_name("an individual name");
    fact.span = cover(t.span, tokens_[close].span);
    pos_ = close + 1;
    return fact;
  }

  ClassExpression parse_expression() {
    const Token& t = current();
    if (t.kind == TokenKind::Symbol) {
      ClassExpression e;
      e.kind = ClassExpression::Kind::Named;
      e.name = identifier(t);
      e.span = t.span;
      ++pos_;
      return e;
    }
    if (t.kind != TokenKind::LParen) {
      fail("E014", "expected a class expression, found '" + t.raw + "'",
           t.span);
    }
    const std::size_t open = pos_++;
    const std::size_t close = match_[open];
    const SourceSpan whole = cover(t.span, tokens_[close].span);
    const Token& head = current();
    if (head.kind != TokenKind::Symbol) {
      fail("E011", "expected an expression head", head.span);
    }
    const std::string op = keyword(head.lexeme);
    using K = ClassExpression::Kind;
    ClassExpression e;
    if (op == "some") {
      e.kind = K::Some;
    } else if (op == "only") {
      e.kind = K::Only;
    } else if (op == "and") {
      e.kind = K::And;
    } else if (op == "or") {
      e.kind = K::Or;
    } else if (op == "not") {
      e.kind = K::Not;
    } else {
      fail("E011", "unknown expression head '" + head.lexeme + "'",
           head.span);
    }
    e.head_span = head.span;
    e.span = whole;
    ++pos_;
    if (e.kind == K::Some || e.kind == K::Only) {
      if (pos_ == close) {
        fail("E013", "'" + head.lexeme + "' takes a property and a filler",
             whole);
      }
      e.name = expect_name("a property name");
    }
    while (pos_ < close) e.operands.push_back(parse_expression());
    const std::size_t n = e.operands.size();
    const bool arity_ok = (e.kind == K::And || e.kind == K::Or) ? n >= 2
                                                                : n == 1;
    if (!arity_ok) {
      fail("E013",
           "wrong number of operands for '" + head.lexeme + "'", whole);
    }
    pos_ = close + 1;
    return e;
  }

  std::span<const Token> tokens_;
  const Vocabulary* vocabulary_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> match_;
};

}  // namespace

std::string RawChunk::text() const {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out.push_back('\n');
    out += lines[i].second;
  }
  return out;
}

SourceSpan RawChunk::span() const {
  if (lines.empty()) return {};
  const auto& last = lines.back();
  return {lines.front().first, 1, last.first,
          static_cast<int>(utf8::length(last.second)) + 1};
}

std::vector<RawChunk> segment(std::string_view source) {
  std::vector<RawChunk> chunks;
  std::optional<RawChunk> current;
  const auto flush = [&] {
    if (current) chunks.push_back(std::move(*current));
    current.reset();
  };
  int number = 0;
  for (const auto line : split_lines(source)) {
    ++number;
    if (is_blank(line)) {
      flush();
      continue;
    }
    const ChunkKind kind =
        is_narrative_line(line) ? ChunkKind::Narrative : ChunkKind::Code;
    if (current && current->kind != kind) flush();
    if (!current) current = RawChunk{kind, {}};
    current->lines.emplace_back(number, std::string(line));
  }
  flush();
  return chunks;
}

std::string strip_narrative_marker(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\f\v");
  if (first == std::string_view::npos) return {};
  line.remove_prefix(first);
  if (line.substr(0, 2) == ";;") line.remove_prefix(2);
  if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return std::string(line);
}

TokenStream lex(std::string_view code, int first_line) {
  return Lexer(code, first_line).run();
}

TokenStream tokenize(std::string_view code, int first_line) {
  TokenStream all = lex(code, first_line);
  TokenStream out;
  out.diagnostics = std::move(all.diagnostics);
  for (auto& t : all.tokens) {
    if (!t.is_trivia()) out.tokens.push_back(std::move(t));
  }
  return out;
}

bool is_symbol(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (!is_symbol_start(utf8::decode(text, pos))) return false;
  while (pos < text.size()) {
    if (!is_symbol_continue(utf8::decode(text, pos))) return false;
  }
  return true;
}

bool is_option_keyword(std::string_view text) {
  return text.size() > 1 && text.front() == ':' && is_symbol(text.substr(1));
}

ParsedForms parse(std::span<const Token> tokens,
                  const Vocabulary* vocabulary) {
  return Parser(tokens, vocabulary).run();
}

BuiltModel build_model(const std::vector<RawChunk>& chunks,
                       std::vector<std::vector<Form>> forms) {
  BuiltModel out;
  OntologyDoc& doc = out.doc;
  forms.resize(chunks.size());

  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const RawChunk& raw = chunks[i];
    if (raw.kind == ChunkKind::Code && forms[i].empty()) {
      out.diagnostics.push_back(make_warning(
          "W004", "block holds no forms and is left out of the document",
          raw.span()));
      continue;
    }
    Chunk chunk;
    chunk.id = static_cast<int>(doc.chunks.size());
    chunk.kind = raw.kind;
    chunk.span = raw.span();
    chunk.raw_text = raw.text();
    if (raw.kind == ChunkKind::Narrative) {
      for (const auto& [number, line] : raw.lines) {
        chunk.narrative_lines.push_back(strip_narrative_marker(line));
      }
    } else {
      chunk.forms = std::move(forms[i]);
    }
    doc.chunks.push_back(std::move(chunk));
  }

  bool seen_form = false;
  for (const auto& chunk : doc.chunks) {
    for (const auto& form : chunk.forms) {
      if (!seen_form) {
        seen_form = true;
        if (form.kind != FormKind::Ontology) {
          out.diagnostics.push_back(make_error(
              "E020", "the first form must be defontology", form.head_span));
        } else {
          doc.header.name = form.name;
          if (auto iri = form.texts(OptionKey::Iri); !iri.empty()) {
            doc.header.iri = iri.front();
          }
          doc.header.comments = form.texts(OptionKey::Comment);
          doc.header.chunk = chunk.id;
        }
      } else if (form.kind == FormKind::Ontology) {
        out.diagnostics.push_back(make_error(
            "E020", "defontology may only appear as the first form",
            form.head_span));
        continue;
      }
      const bool added = doc.symbols.add(SymbolEntry{
          form.name.text, entity_kind_of(form.kind), chunk.id,
          form.name.span});
      if (!added) {
        out.diagnostics.push_back(
            make_error("E021", "duplicate definition of '" +
                                   form.name.text + "'",
                       form.name.span));
        continue;
      }
      for (auto& text : form.texts(OptionKey::Label)) {
        doc.symbols.add_label(Label{form.name.text, "", std::move(text)});
      }
    }
  }
  if (!seen_form) {
    out.diagnostics.push_back(make_error(
        "E020", "missing defontology header", SourceSpan::point(1, 1)));
  }

  merge_diagnostics(out.diagnostics, undefined_references(doc));
  return out;
}

Outcome<OntologyDoc> read_document(std::string_view source,
                                   const Vocabulary* vocabulary) {
  const std::string text = normalize_newlines(source);
  const auto raw = segment(text);
  Diagnostics diagnostics;
  std::vector<std::vector<Form>> forms(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].kind != ChunkKind::Code) continue;
    auto tokens = tokenize(raw[i].text(), raw[i].lines.front().first);
    merge_diagnostics(diagnostics, tokens.diagnostics);
    if (has_errors(tokens.diagnostics)) continue;
    auto parsed = parse(tokens.tokens, vocabulary);
    merge_diagnostics(diagnostics, parsed.diagnostics);
    forms[i] = std::move(parsed.forms);
  }
  const bool lexical_errors = has_errors(diagnostics);
  auto built = build_model(raw, std::move(forms));
  for (auto& d : built.diagnostics) {
    // Blocks that failed to parse are already reported.
    if (lexical_errors && d.code == "W004") continue;
    diagnostics.push_back(std::move(d));
  }
  return Outcome<OntologyDoc>{std::move(built.doc), std::move(diagnostics)};
}

Diagnostics undefined_references(const OntologyDoc& doc) {
  Diagnostics out;
  for (const auto& chunk : doc.chunks) {
    for (const auto& form : chunk.forms) {
      for_each_reference(form, [&](const Name& name, ReferenceRole) {
        if (!doc.symbols.contains(name.text)) {
          out.push_back(make_warning(
              "W001", "reference to undefined entity '" + name.text + "'",
              name.span));
        }
      });
    }
  }
  return out;
}

Diagnostics lint(const OntologyDoc& doc) {
  Diagnostics out = undefined_references(doc);
  for (const auto& chunk : doc.chunks) {
    if (chunk.kind == ChunkKind::Narrative) {
      if (markdown_has_unclosed_markup(chunk.narrative_text())) {
        out.push_back(make_warning(
            "W003", "unclosed emphasis or inline code in narrative",
            chunk.span));
      }
      continue;
    }
    for (const auto& form : chunk.forms) {
      if (!form.find(OptionKey::Label) && !form.find(OptionKey::Comment)) {
        out.push_back(make_warning(
            "W002",
            "'" + form.name.text + "' has neither a label nor a comment",
            form.name.span));
      }
    }
  }
  return out;
}

}  // namespace ontoweave
