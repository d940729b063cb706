// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/owl.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "ontoweave/locale.hpp"
#include "test_support.hpp"

namespace ontoweave {
namespace {

using ::ontoweave::testing::count_code;
using ::ontoweave::testing::count_occurrences;
using ::ontoweave::testing::fixture;
using ::ontoweave::testing::must_bundle;
using ::ontoweave::testing::must_read;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Everything between the header annotations and the closing paren.
int axiom_lines(const std::string& ofn) {
  int n = 0;
  for (const auto& line : lines_of(ofn)) {
    if (line.rfind("Prefix(", 0) == 0 || line.rfind("Ontology(", 0) == 0 ||
        line.rfind("Annotation(", 0) == 0 || line == ")") {
      continue;
    }
    ++n;
  }
  return n;
}

TEST(Owl, SmallDocument) {
  const auto doc = must_read(
      "(defontology o :iri \"http://x.org/o#\" :comment \"c\")\n"
      "(defclass A :label \"Ay\")\n"
      "(defclass B :super A (some p A) :disjoint A :comment \"b\")\n"
      "(defoproperty p :domain B :characteristic functional)\n"
      "(defindividual i :type B :fact (p j))\n"
      "(defindividual j)\n");
  const auto owl = emit_functional(doc);
  ASSERT_TRUE(owl.ok());
  EXPECT_EQ(*owl,
            "Prefix(:=<http://x.org/o#>)\n"
            "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
            "Ontology(<http://x.org/o#>\n"
            "Annotation(rdfs:comment \"c\")\n"
            "Declaration(Class(:A))\n"
            "Declaration(Class(:B))\n"
            "Declaration(ObjectProperty(:p))\n"
            "Declaration(NamedIndividual(:i))\n"
            "Declaration(NamedIndividual(:j))\n"
            "AnnotationAssertion(rdfs:label :A \"Ay\")\n"
            "SubClassOf(:B :A)\n"
            "SubClassOf(:B ObjectSomeValuesFrom(:p :A))\n"
            "DisjointClasses(:B :A)\n"
            "AnnotationAssertion(rdfs:comment :B \"b\")\n"
            "ObjectPropertyDomain(:p :B)\n"
            "FunctionalObjectProperty(:p)\n"
            "ClassAssertion(:B :i)\n"
            "ObjectPropertyAssertion(:p :i :j)\n"
            ")\n");
}

TEST(Owl, ClassExpressionMapping) {
  const auto e = ClassExpression::conjunction(
      {ClassExpression::named("A"),
       ClassExpression::only("p", ClassExpression::disjunction(
                                      {ClassExpression::named("B"),
                                       ClassExpression::complement(
                                           ClassExpression::named("C"))}))});
  EXPECT_EQ(map_class_expression(e),
            "ObjectIntersectionOf(:A ObjectAllValuesFrom(:p "
            "ObjectUnionOf(:B ObjectComplementOf(:C))))");
}

TEST(Owl, EntityReferenceFallsBackToFullIri) {
  EXPECT_EQ(entity_reference("Pizza", "http://x/#"), ":Pizza");
  EXPECT_EQ(entity_reference("a/b", "http://x/#"), "<http://x/#a/b>");
  EXPECT_EQ(entity_reference("end.", "http://x/#"), "<http://x/#end.>");
}

TEST(Owl, UndefinedReferenceIsAnError) {
  const auto doc = must_read("(defontology o)\n(defclass A :super B)\n");
  const auto owl = emit_functional(doc);
  EXPECT_FALSE(owl.ok());
  ASSERT_EQ(count_code(owl.diagnostics, "E050"), 1);
  EXPECT_EQ(owl.diagnostics[0].span, (SourceSpan{2, 20, 2, 21}));
}

TEST(Owl, PrefixIriMustEndWithHashOrSlash) {
  EXPECT_TRUE(valid_prefix_iri("http://x/"));
  EXPECT_FALSE(valid_prefix_iri("http://x"));
  EXPECT_FALSE(valid_prefix_iri("http://x y#"));
  auto doc = must_read("(defontology o :iri \"http://x\")\n");
  EXPECT_EQ(count_code(emit_functional(doc).diagnostics, "E051"), 1);
  doc = must_read("(defontology o)\n");
  EXPECT_EQ(count_code(emit_functional(doc, {"urn:x"}).diagnostics, "E051"),
            1);
}

TEST(Owl, LiteralEscapeRoundTrip) {
  for (const std::string s :
       {"", "plain", "q\"uote", "back\\slash", "\\\"", "بيتزا", "a\nb"}) {
    EXPECT_EQ(unescape_literal(escape_literal(s)), s);
  }
  EXPECT_EQ(escape_literal("a\"b\\"), R"("a\"b\\")");
}

// Closed-form axiom count computed from the model, checked against the
// emitted lines. The frozen oracle values are 57 and 52.
TEST(Owl, CountLawOnFixtures) {
  for (const auto& [name, expected] :
       {std::pair{"pizza.lont", 57}, std::pair{"aminoacid.lont", 52}}) {
    const auto doc = must_read(fixture(name));
    int law = 0;
    for (const auto& chunk : doc.chunks) {
      for (const auto& f : chunk.forms) {
        if (f.kind == FormKind::Ontology) continue;
        const auto n = [&](OptionKey k) {
          const Option* o = f.find(k);
          return o ? static_cast<int>(o->values.size()) : 0;
        };
        const auto present = [&](OptionKey k) { return n(k) ? 1 : 0; };
        law += 1 + n(OptionKey::Label) + n(OptionKey::Comment);
        switch (f.kind) {
          case FormKind::Class:
            law += n(OptionKey::Super) + present(OptionKey::Equivalent) +
                   present(OptionKey::Disjoint);
            break;
          case FormKind::ObjectProperty:
            law += n(OptionKey::Super) + n(OptionKey::Domain) +
                   n(OptionKey::Range) + n(OptionKey::Characteristic);
            break;
          default:
            law += n(OptionKey::Type) + n(OptionKey::Fact);
        }
      }
    }
    const auto owl = emit_functional(doc);
    ASSERT_TRUE(owl.ok()) << name;
    EXPECT_EQ(law, expected) << name;
    EXPECT_EQ(axiom_lines(*owl), expected) << name;
  }
}

TEST(Owl, Deterministic) {
  const auto doc = must_read(fixture("aminoacid.lont"));
  EXPECT_EQ(*emit_functional(doc), *emit_functional(doc));
}

TEST(Owl, InjectedLabels) {
  const auto doc = inject_labels(must_read(fixture("pizza.lont")),
                                 {must_bundle("it.lb"), must_bundle("ar.lb")});
  const auto owl = emit_functional(doc);
  ASSERT_TRUE(owl.ok());
  EXPECT_EQ(count_occurrences(*owl, "\"@it)\n"), 17);
  EXPECT_EQ(count_occurrences(*owl, "\"@ar)\n"), 17);
  EXPECT_NE(owl->find("AnnotationAssertion(rdfs:label "
                      "<https://example.org/pizza#> \""),
            std::string::npos);
}

}  // namespace
}  // namespace ontoweave
