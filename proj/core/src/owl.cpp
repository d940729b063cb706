// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/owl.hpp"

#include <vector>

namespace ontoweave {

namespace {

class Writer {
 public:
  explicit Writer(std::string prefix) : prefix_(std::move(prefix)) {}

  std::string ref(const std::string& name) const {
    return entity_reference(name, prefix_);
  }

  std::string expr(const ClassExpression& e) const {
    return map_class_expression(e, prefix_);
  }

  void line(std::string s) {
    out_ += s;
    out_.push_back('\n');
  }

  void labels(const OntologyDoc& doc, const std::string& name) {
    for (const Label* l : doc.symbols.labels_for(name)) {
      line("AnnotationAssertion(rdfs:label " + ref(name) + ' ' +
           literal(*l) + ')');
    }
  }

  void comments(const Form& form) {
    for (const auto& text : form.texts(OptionKey::Comment)) {
      line("AnnotationAssertion(rdfs:comment " + ref(form.name.text) + ' ' +
           escape_literal(text) + ')');
    }
  }

  static std::string literal(const Label& l) {
    std::string s = escape_literal(l.text);
    if (!l.locale.empty()) s += "@" + l.locale;
    return s;
  }

  std::string take() { return std::move(out_); }

 private:
  std::string prefix_;
  std::string out_;
};

void class_axioms(Writer& w, const OntologyDoc& doc, const Form& form) {
  const std::string self = w.ref(form.name.text);
  for (const auto* e : form.expressions(OptionKey::Super)) {
    w.line("SubClassOf(" + self + ' ' + w.expr(*e) + ')');
  }
  for (const auto& [key, axiom] :
       {std::pair{OptionKey::Equivalent, "EquivalentClasses("},
        std::pair{OptionKey::Disjoint, "DisjointClasses("}}) {
    const auto values = form.expressions(key);
    if (values.empty()) continue;
    std::string s = std::string(axiom) + self;
    for (const auto* e : values) s += ' ' + w.expr(*e);
    w.line(s + ')');
  }
  w.labels(doc, form.name.text);
  w.comments(form);
}

void property_axioms(Writer& w, const OntologyDoc& doc, const Form& form) {
  const std::string self = w.ref(form.name.text);
  for (const auto* n : form.names(OptionKey::Super)) {
    w.line("SubObjectPropertyOf(" + self + ' ' + w.ref(n->text) + ')');
  }
  for (const auto* e : form.expressions(OptionKey::Domain)) {
    w.line("ObjectPropertyDomain(" + self + ' ' + w.expr(*e) + ')');
  }
  for (const auto* e : form.expressions(OptionKey::Range)) {
    w.line("ObjectPropertyRange(" + self + ' ' + w.expr(*e) + ')');
  }
  for (const auto* c : form.names(OptionKey::Characteristic)) {
    std::string axiom;
    if (c->text == "transitive") {
      axiom = "TransitiveObjectProperty(";
    } else if (c->text == "functional") {
      axiom = "FunctionalObjectProperty(";
    } else {
      axiom = "SymmetricObjectProperty(";
    }
    w.line(axiom + self + ')');
  }
  w.labels(doc, form.name.text);
  w.comments(form);
}

void individual_axioms(Writer& w, const OntologyDoc& doc, const Form& form) {
  const std::string self = w.ref(form.name.text);
  for (const auto* e : form.expressions(OptionKey::Type)) {
    w.line("ClassAssertion(" + w.expr(*e) + ' ' + self + ')');
  }
  for (const auto* f : form.facts(OptionKey::Fact)) {
    w.line("ObjectPropertyAssertion(" + w.ref(f->property.text) + ' ' + self +
           ' ' + w.ref(f->individual.text) + ')');
  }
  w.labels(doc, form.name.text);
  w.comments(form);
}

bool simple_local_name(std::string_view name) {
  if (name.empty() || name.back() == '.') return false;
  return name.find_first_of("/!?") == std::string_view::npos;
}

}  // namespace

bool valid_prefix_iri(std::string_view iri) {
  return !iri.empty() && (iri.back() == '#' || iri.back() == '/') &&
         iri.find_first_of("<> \"{}|\\^`") == std::string_view::npos;
}

std::string entity_reference(std::string_view name, std::string_view prefix) {
  if (simple_local_name(name)) return ":" + std::string(name);
  return "<" + std::string(prefix) + std::string(name) + ">";
}

std::string map_class_expression(const ClassExpression& e,
                                 std::string_view prefix) {
  using K = ClassExpression::Kind;
  const auto operands = [&] {
    std::string s;
    for (const auto& op : e.operands) s += ' ' + map_class_expression(op, prefix);
    return s;
  };
  switch (e.kind) {
    case K::Named:
      return entity_reference(e.name.text, prefix);
    case K::Some:
      return "ObjectSomeValuesFrom(" + entity_reference(e.name.text, prefix) +
             operands() + ')';
    case K::Only:
      return "ObjectAllValuesFrom(" + entity_reference(e.name.text, prefix) +
             operands() + ')';
    case K::And:
      return "ObjectIntersectionOf(" + operands().substr(1) + ')';
    case K::Or:
      return "ObjectUnionOf(" + operands().substr(1) + ')';
    case K::Not:
      return "ObjectComplementOf(" + operands().substr(1) + ')';
  }
  return {};
}

std::string escape_literal(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string unescape_literal(std::string_view quoted) {
  if (quoted.size() >= 2 && quoted.front() == '"' && quoted.back() == '"') {
    quoted = quoted.substr(1, quoted.size() - 2);
  }
  std::string out;
  for (std::size_t i = 0; i < quoted.size(); ++i) {
    if (quoted[i] == '\\' && i + 1 < quoted.size()) ++i;
    out.push_back(quoted[i]);
  }
  return out;
}

Outcome<std::string> emit_functional(const OntologyDoc& doc,
                                     const EmitOptions& options) {
  Diagnostics diags;
  const std::string iri = doc.header.iri.value_or(options.default_prefix_iri);
  if (!valid_prefix_iri(iri)) {
    const SourceSpan at = doc.header.iri ? doc.header.name.span
                                         : SourceSpan::point(1, 1);
    diags.push_back(make_error(
        "E051", "prefix IRI '" + iri + "' must end with '#' or '/'", at));
  }
  for (const auto& chunk : doc.chunks) {
    for (const auto& form : chunk.forms) {
      for_each_reference(form, [&](const Name& name, ReferenceRole) {
        if (!doc.symbols.contains(name.text)) {
          diags.push_back(make_error(
              "E050",
              "OWL output needs a definition of '" + name.text + "'",
              name.span));
        }
      });
    }
  }
  if (has_errors(diags)) return Outcome<std::string>::failure(diags);

  Writer w(iri);
  w.line("Prefix(:=<" + iri + ">)");
  w.line("Prefix(rdfs:=<" + std::string(kRdfsIri) + ">)");
  w.line("Ontology(<" + iri + ">");
  for (const auto& c : doc.header.comments) {
    w.line("Annotation(rdfs:comment " + escape_literal(c) + ')');
  }

  std::vector<const Form*> forms;
  for (const auto& chunk : doc.chunks) {
    for (const auto& form : chunk.forms) {
      // Only the defining occurrence of each name is emitted.
      const SymbolEntry* entry = doc.symbols.find(form.name.text);
      if (form.kind == FormKind::Ontology || !entry ||
          entry->span != form.name.span) {
        continue;
      }
      forms.push_back(&form);
    }
  }
  for (const Form* form : forms) {
    const std::string self = w.ref(form->name.text);
    switch (form->kind) {
      case FormKind::Class:
        w.line("Declaration(Class(" + self + "))");
        break;
      case FormKind::ObjectProperty:
        w.line("Declaration(ObjectProperty(" + self + "))");
        break;
      case FormKind::Individual:
        w.line("Declaration(NamedIndividual(" + self + "))");
        break;
      case FormKind::Ontology:
        break;
    }
  }
  // The ontology is labelled through its IRI, like any other entity.
  for (const Label* l : doc.symbols.labels_for(doc.header.name.text)) {
    w.line("AnnotationAssertion(rdfs:label <" + iri + "> " +
           Writer::literal(*l) + ')');
  }
  for (const Form* form : forms) {
    switch (form->kind) {
      case FormKind::Class:
        class_axioms(w, doc, *form);
        break;
      case FormKind::ObjectProperty:
        property_axioms(w, doc, *form);
        break;
      case FormKind::Individual:
        individual_axioms(w, doc, *form);
        break;
      case FormKind::Ontology:
        break;
    }
  }
  w.line(")");
  return Outcome<std::string>::success(w.take());
}

}  // namespace ontoweave
