// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// The ontology document model. Every emitter reads an OntologyDoc; nothing
// mutates one after build_model hands it out.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontoweave/source.hpp"

namespace ontoweave {

enum class FormKind { Ontology, Class, ObjectProperty, Individual };

std::string_view form_head(FormKind kind);
std::optional<FormKind> form_kind_from_head(std::string_view head);

enum class OptionKey {
  Iri,
  Comment,
  Super,
  Equivalent,
  Disjoint,
  Label,
  Domain,
  Range,
  Characteristic,
  Type,
  Fact,
};

// Includes the leading colon, e.g. ":super".
std::string_view option_keyword(OptionKey key);
std::optional<OptionKey> option_key_from_keyword(std::string_view keyword);

// Whether `key` may appear on a form of `kind`.
bool option_allowed(FormKind kind, OptionKey key);

// Expression heads accepted inside class expressions.
inline constexpr std::string_view kExpressionHeads[] = {"some", "only", "and",
                                                        "or", "not"};
inline constexpr std::string_view kCharacteristics[] = {
    "transitive", "functional", "symmetric"};

// An identifier occurrence.
struct Name {
  std::string text;
  SourceSpan span;

  friend bool operator==(const Name&, const Name&) = default;
};

struct ClassExpression {
  enum class Kind { Named, Some, Only, And, Or, Not };

  Kind kind = Kind::Named;
  // The class for Named, the property for Some/Only; unused otherwise.
  Name name;
  // One operand for Some/Only/Not, two or more for And/Or.
  std::vector<ClassExpression> operands;
  SourceSpan span;
  // Span of the head symbol of a compound expression.
  SourceSpan head_span;

  static ClassExpression named(std::string name);
  static ClassExpression some(std::string property, ClassExpression filler);
  static ClassExpression only(std::string property, ClassExpression filler);
  static ClassExpression conjunction(std::vector<ClassExpression> operands);
  static ClassExpression disjunction(std::vector<ClassExpression> operands);
  static ClassExpression complement(ClassExpression operand);

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
};

std::string_view expression_head(ClassExpression::Kind kind);

struct TextLiteral {
  std::string text;
  SourceSpan span;

  friend bool operator==(const TextLiteral&, const TextLiteral&) = default;
};

// `(property individual)` inside a `:fact` option.
struct Fact {
  Name property;
  Name individual;
  SourceSpan span;

  friend bool operator==(const Fact&, const Fact&) = default;
};

// A ClassExpression for expression-valued options, a Name for property
// supers and characteristics, TextLiteral for text options, Fact for :fact.
using OptionValue = std::variant<ClassExpression, Name, TextLiteral, Fact>;

struct Option {
  OptionKey key = OptionKey::Comment;
  SourceSpan key_span;
  std::vector<OptionValue> values;

  friend bool operator==(const Option&, const Option&) = default;
};

struct Form {
  FormKind kind = FormKind::Class;
  SourceSpan head_span;
  Name name;
  // Source order of first appearance; repeated keywords are merged.
  std::vector<Option> options;
  SourceSpan span;

  const Option* find(OptionKey key) const;
  std::vector<std::string> texts(OptionKey key) const;
  std::vector<const ClassExpression*> expressions(OptionKey key) const;
  std::vector<const Name*> names(OptionKey key) const;
  std::vector<const Fact*> facts(OptionKey key) const;

  friend bool operator==(const Form&, const Form&) = default;
};

enum class ChunkKind { Narrative, Code };

struct Chunk {
  int id = 0;
  ChunkKind kind = ChunkKind::Code;
  SourceSpan span;
  // The source lines covered by `span`, joined with LF.
  std::string raw_text;
  // Narrative only: lines with the `;;` marker and one space stripped.
  std::vector<std::string> narrative_lines;
  // Code only.
  std::vector<Form> forms;

  bool is_code() const { return kind == ChunkKind::Code; }
  std::string narrative_text() const;
};

enum class EntityKind { Class, ObjectProperty, Individual, Ontology };

std::string_view entity_kind_name(EntityKind kind);
EntityKind entity_kind_of(FormKind kind);

struct SymbolEntry {
  std::string name;
  EntityKind kind = EntityKind::Class;
  int defining_chunk = 0;
  SourceSpan span;
};

struct Label {
  std::string entity;
  // Empty for untagged labels written in the source.
  std::string locale;
  std::string text;

  friend bool operator==(const Label&, const Label&) = default;
};

class SymbolTable {
 public:
  // Returns false, leaving the table unchanged, if the name already exists.
  bool add(SymbolEntry entry);
  const SymbolEntry* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  // Definition order.
  const std::vector<SymbolEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Returns false if the entity is unknown.
  bool add_label(Label label);
  bool has_label(std::string_view entity, std::string_view locale) const;
  const std::vector<Label>& labels() const { return labels_; }
  std::vector<const Label*> labels_for(std::string_view entity) const;

 private:
  std::vector<SymbolEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Label> labels_;
};

struct OntologyHeader {
  Name name;
  std::optional<std::string> iri;
  std::vector<std::string> comments;
  int chunk = 0;
};

struct OntologyDoc {
  OntologyHeader header;
  std::vector<Chunk> chunks;
  SymbolTable symbols;

  const Form* header_form() const;
};

// Where a name is referenced from; decides the expected entity kind.
enum class ReferenceRole { Class, Property, Individual };

// Calls `fn` for every entity reference in `form` (not its defined name),
// in source order.
void for_each_reference(
    const Form& form,
    const std::function<void(const Name&, ReferenceRole)>& fn);

void for_each_reference(
    const ClassExpression& expr,
    const std::function<void(const Name&, ReferenceRole)>& fn);

}  // namespace ontoweave
