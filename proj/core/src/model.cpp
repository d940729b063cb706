// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/model.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ontoweave {

namespace {

struct HeadEntry {
  FormKind kind;
  std::string_view head;
};

constexpr std::array<HeadEntry, 4> kHeads{{
    {FormKind::Ontology, "defontology"},
    {FormKind::Class, "defclass"},
    {FormKind::ObjectProperty, "defoproperty"},
    {FormKind::Individual, "defindividual"},
}};

struct KeywordEntry {
  OptionKey key;
  std::string_view keyword;
};

constexpr std::array<KeywordEntry, 11> kKeywords{{
    {OptionKey::Iri, ":iri"},
    {OptionKey::Comment, ":comment"},
    {OptionKey::Super, ":super"},
    {OptionKey::Equivalent, ":equivalent"},
    {OptionKey::Disjoint, ":disjoint"},
    {OptionKey::Label, ":label"},
    {OptionKey::Domain, ":domain"},
    {OptionKey::Range, ":range"},
    {OptionKey::Characteristic, ":characteristic"},
    {OptionKey::Type, ":type"},
    {OptionKey::Fact, ":fact"},
}};

}  // namespace

std::string_view form_head(FormKind kind) {
  for (const auto& e : kHeads) {
    if (e.kind == kind) return e.head;
  }
  return {};
}

std::optional<FormKind> form_kind_from_head(std::string_view head) {
  for (const auto& e : kHeads) {
    if (e.head == head) return e.kind;
  }
  return std::nullopt;
}

std::string_view option_keyword(OptionKey key) {
  for (const auto& e : kKeywords) {
    if (e.key == key) return e.keyword;
  }
  return {};
}

std::optional<OptionKey> option_key_from_keyword(std::string_view keyword) {
  for (const auto& e : kKeywords) {
    if (e.keyword == keyword) return e.key;
  }
  return std::nullopt;
}

bool option_allowed(FormKind kind, OptionKey key) {
  using K = OptionKey;
  switch (kind) {
    case FormKind::Ontology:
      return key == K::Iri || key == K::Comment;
    case FormKind::Class:
      return key == K::Super || key == K::Equivalent || key == K::Disjoint ||
             key == K::Label || key == K::Comment;
    case FormKind::ObjectProperty:
      return key == K::Super || key == K::Domain || key == K::Range ||
             key == K::Characteristic || key == K::Label ||
             key == K::Comment;
    case FormKind::Individual:
      return key == K::Type || key == K::Fact || key == K::Label ||
             key == K::Comment;
  }
  return false;
}

ClassExpression ClassExpression::named(std::string name) {
  ClassExpression e;
  e.kind = Kind::Named;
  e.name.text = std::move(name);
  return e;
}

ClassExpression ClassExpression::some(std::string property,
                                      ClassExpression filler) {
  ClassExpression e;
  e.kind = Kind::Some;
  e.name.text = std::move(property);
  e.operands.push_back(std::move(filler));
  return e;
}

ClassExpression ClassExpression::only(std::string property,
                                      ClassExpression filler) {
  ClassExpression e = some(std::move(property), std::move(filler));
  e.kind = Kind::Only;
  return e;
}

ClassExpression ClassExpression::conjunction(
    std::vector<ClassExpression> operands) {
  ClassExpression e;
  e.kind = Kind::And;
  e.operands = std::move(operands);
  return e;
}

ClassExpression ClassExpression::disjunction(
    std::vector<ClassExpression> operands) {
  ClassExpression e = conjunction(std::move(operands));
  e.kind = Kind::Or;
  return e;
}

ClassExpression ClassExpression::complement(ClassExpression operand) {
  ClassExpression e;
  e.kind = Kind::Not;
  e.operands.push_back(std::move(operand));
  return e;
}

// Structural: spans are ignored.
bool operator==(const ClassExpression& a, const ClassExpression& b) {
  return a.kind == b.kind && a.name.text == b.name.text &&
         a.operands == b.operands;
}

std::string_view expression_head(ClassExpression::Kind kind) {
  using K = ClassExpression::Kind;
  switch (kind) {
    case K::Some:
      return "some";
    case K::Only:
      return "only";
    case K::And:
      return "and";
    case K::Or:
      return "or";
    case K::Not:
      return "not";
    case K::Named:
      break;
  }
  return {};
}

const Option* Form::find(OptionKey key) const {
  for (const auto& o : options) {
    if (o.key == key) return &o;
  }
  return nullptr;
}

std::vector<std::string> Form::texts(OptionKey key) const {
  std::vector<std::string> out;
  if (const Option* o = find(key)) {
    for (const auto& v : o->values) {
      if (const auto* t = std::get_if<TextLiteral>(&v)) out.push_back(t->text);
    }
  }
  return out;
}

std::vector<const ClassExpression*> Form::expressions(OptionKey key) const {
  std::vector<const ClassExpression*> out;
  if (const Option* o = find(key)) {
    for (const auto& v : o->values) {
      if (const auto* e = std::get_if<ClassExpression>(&v)) out.push_back(e);
    }
  }
  return out;
}

std::vector<const Name*> Form::names(OptionKey key) const {
  std::vector<const Name*> out;
  if (const Option* o = find(key)) {
    for (const auto& v : o->values) {
      if (const auto* n = std::get_if<Name>(&v)) out.push_back(n);
    }
  }
  return out;
}

std::vector<const Fact*> Form::facts(OptionKey key) const {
  std::vector<const Fact*> out;
  if (const Option* o = find(key)) {
    for (const auto& v : o->values) {
      if (const auto* f = std::get_if<Fact>(&v)) out.push_back(f);
    }
  }
  return out;
}

std::string Chunk::narrative_text() const {
  std::string out;
  for (std::size_t i = 0; i < narrative_lines.size(); ++i) {
    if (i) out.push_back('\n');
    out += narrative_lines[i];
  }
  return out;
}

std::string_view entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class:
      return "class";
    case EntityKind::ObjectProperty:
      return "object-property";
    case EntityKind::Individual:
      return "individual";
    case EntityKind::Ontology:
      return "ontology";
  }
  return {};
}

EntityKind entity_kind_of(FormKind kind) {
  switch (kind) {
    case FormKind::Ontology:
      return EntityKind::Ontology;
    case FormKind::Class:
      return EntityKind::Class;
    case FormKind::ObjectProperty:
      return EntityKind::ObjectProperty;
    case FormKind::Individual:
      return EntityKind::Individual;
  }
  return EntityKind::Class;
}

bool SymbolTable::add(SymbolEntry entry) {
  if (index_.count(entry.name)) return false;
  index_.emplace(entry.name, entries_.size());
  entries_.push_back(std::move(entry));
  return true;
}

const SymbolEntry* SymbolTable::find(std::string_view name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

bool SymbolTable::add_label(Label label) {
  if (!contains(label.entity)) return false;
  labels_.push_back(std::move(label));
  return true;
}

bool SymbolTable::has_label(std::string_view entity,
                            std::string_view locale) const {
  return std::any_of(labels_.begin(), labels_.end(), [&](const Label& l) {
    return l.entity == entity && l.locale == locale;
  });
}

std::vector<const Label*> SymbolTable::labels_for(
    std::string_view entity) const {
  std::vector<const Label*> out;
  for (const auto& l : labels_) {
    if (l.entity == entity) out.push_back(&l);
  }
  return out;
}

const Form* OntologyDoc::header_form() const {
  for (const auto& chunk : chunks) {
    if (!chunk.forms.empty()) return &chunk.forms.front();
  }
  return nullptr;
}

void for_each_reference(
    const ClassExpression& expr,
    const std::function<void(const Name&, ReferenceRole)>& fn) {
  using K = ClassExpression::Kind;
  switch (expr.kind) {
    case K::Named:
      fn(expr.name, ReferenceRole::Class);
      return;
    case K::Some:
    case K::Only:
      fn(expr.name, ReferenceRole::Property);
      break;
    default:
      break;
  }
  for (const auto& op : expr.operands) for_each_reference(op, fn);
}

void for_each_reference(
    const Form& form,
    const std::function<void(const Name&, ReferenceRole)>& fn) {
  for (const auto& option : form.options) {
    if (option.key == OptionKey::Characteristic) continue;
    for (const auto& value : option.values) {
      if (const auto* e = std::get_if<ClassExpression>(&value)) {
        for_each_reference(*e, fn);
      } else if (const auto* n = std::get_if<Name>(&value)) {
        fn(*n, ReferenceRole::Property);
      } else if (const auto* f = std::get_if<Fact>(&value)) {
        fn(f->property, ReferenceRole::Property);
        fn(f->individual, ReferenceRole::Individual);
      }
    }
  }
}

}  // namespace ontoweave
