// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/printer.hpp"

namespace ontoweave {

namespace {

std::string keyword_text(const PrintVocabulary& vocab, std::string_view kw,
                         const SourceSpan& at) {
  return vocab.keyword ? vocab.keyword(kw, at) : std::string(kw);
}

std::string identifier_text(const PrintVocabulary& vocab, const Name& name) {
  return vocab.identifier ? vocab.identifier(name) : name.text;
}

void print_expression_into(std::string& out, const ClassExpression& expr,
                           const PrintVocabulary& vocab) {
  using K = ClassExpression::Kind;
  if (expr.kind == K::Named) {
    out += identifier_text(vocab, expr.name);
    return;
  }
  out.push_back('(');
  out += keyword_text(vocab, expression_head(expr.kind), expr.head_span);
  if (expr.kind == K::Some || expr.kind == K::Only) {
    out.push_back(' ');
    out += identifier_text(vocab, expr.name);
  }
  for (const auto& op : expr.operands) {
    out.push_back(' ');
    print_expression_into(out, op, vocab);
  }
  out.push_back(')');
}

void print_value_into(std::string& out, const OptionValue& value,
                      OptionKey key, const PrintVocabulary& vocab) {
  if (const auto* e = std::get_if<ClassExpression>(&value)) {
    print_expression_into(out, *e, vocab);
  } else if (const auto* n = std::get_if<Name>(&value)) {
    out += key == OptionKey::Characteristic
               ? keyword_text(vocab, n->text, n->span)
               : identifier_text(vocab, *n);
  } else if (const auto* t = std::get_if<TextLiteral>(&value)) {
    out += quote_text(t->text);
  } else if (const auto* f = std::get_if<Fact>(&value)) {
    out.push_back('(');
    out += identifier_text(vocab, f->property);
    out.push_back(' ');
    out += identifier_text(vocab, f->individual);
    out.push_back(')');
  }
}

}  // namespace

std::string quote_text(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string print_expression(const ClassExpression& expr,
                             const PrintVocabulary& vocab) {
  std::string out;
  print_expression_into(out, expr, vocab);
  return out;
}

std::string print_form(const Form& form, const PrintVocabulary& vocab) {
  std::string out = "(";
  out += keyword_text(vocab, form_head(form.kind), form.head_span);
  out.push_back(' ');
  out += identifier_text(vocab, form.name);
  for (const auto& option : form.options) {
    out += "\n  ";
    out += keyword_text(vocab, option_keyword(option.key), option.key_span);
    for (const auto& value : option.values) {
      out.push_back(' ');
      print_value_into(out, value, option.key, vocab);
    }
  }
  out.push_back(')');
  return out;
}

std::string print_chunk(const Chunk& chunk, const PrintVocabulary& vocab) {
  std::string out;
  if (chunk.kind == ChunkKind::Narrative) {
    for (std::size_t i = 0; i < chunk.narrative_lines.size(); ++i) {
      if (i) out.push_back('\n');
      const auto& line = chunk.narrative_lines[i];
      out += line.empty() ? ";;" : ";; " + line;
    }
    return out;
  }
  for (std::size_t i = 0; i < chunk.forms.size(); ++i) {
    if (i) out.push_back('\n');
    out += print_form(chunk.forms[i], vocab);
  }
  return out;
}

std::string canonical_print(const OntologyDoc& doc,
                            const PrintVocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < doc.chunks.size(); ++i) {
    if (i) out += "\n\n";
    out += print_chunk(doc.chunks[i], vocab);
  }
  if (!out.empty()) out.push_back('\n');
  return out;
}

}  // namespace ontoweave
