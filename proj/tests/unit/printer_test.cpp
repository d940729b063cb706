// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/printer.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ontoweave {
namespace {

using ::ontoweave::testing::fixture;
using ::ontoweave::testing::must_read;

constexpr std::string_view kHeader = "(defontology o)\n\n";

std::string body(const OntologyDoc& doc) {
  return canonical_print(doc).substr(kHeader.size());
}

TEST(CanonicalPrint, OneOptionPerLine) {
  const auto doc = must_read(std::string(kHeader) + "(defclass A :super B)");
  EXPECT_EQ(body(doc), "(defclass A\n  :super B)\n");
}

TEST(CanonicalPrint, NarrativeThenForm) {
  const auto doc =
      must_read(std::string(kHeader) + ";; # Pizza\n(defclass Pizza)\n");
  EXPECT_EQ(body(doc), ";; # Pizza\n\n(defclass Pizza)\n");
}

TEST(CanonicalPrint, NestedExpressionsAndValues) {
  const auto doc = must_read(
      std::string(kHeader) +
      "(defclass A :super   (and B (or C (not D)))   (only p E)\n"
      "   :label \"q\\\"uote\" \"tab\\t\")");
  EXPECT_EQ(body(doc),
            "(defclass A\n"
            "  :super (and B (or C (not D))) (only p E)\n"
            "  :label \"q\\\"uote\" \"tab\\t\")\n");
}

TEST(CanonicalPrint, FormsOfAChunkStayTogether) {
  const auto doc = must_read(std::string(kHeader) +
                             "(defclass A) (defclass B)\n\n\n(defclass C)\n");
  EXPECT_EQ(body(doc), "(defclass A)\n(defclass B)\n\n(defclass C)\n");
}

TEST(CanonicalPrint, EmptyNarrativeLines) {
  const auto doc = must_read(std::string(kHeader) + ";;   x\n;;\n;; y\n");
  EXPECT_EQ(body(doc), ";;   x\n;;\n;; y\n");
}

TEST(CanonicalPrint, FactsAndCharacteristics) {
  const auto doc = must_read(std::string(kHeader) +
                             "(defoproperty p :characteristic functional)\n"
                             "(defindividual i :fact (p j))\n");
  EXPECT_EQ(body(doc),
            "(defoproperty p\n  :characteristic functional)\n"
            "(defindividual i\n  :fact (p j))\n");
}

TEST(CanonicalPrint, EmptyDocument) { EXPECT_EQ(canonical_print({}), ""); }

TEST(CanonicalPrint, IdempotentOnFixtures) {
  for (const char* name : {"pizza.lont", "aminoacid.lont"}) {
    const std::string once = canonical_print(must_read(fixture(name)));
    EXPECT_EQ(canonical_print(must_read(once)), once) << name;
  }
}

TEST(QuoteText, EscapesSpecials) {
  EXPECT_EQ(quote_text("a\"b\\c\nd\te"), R"("a\"b\\c\nd\te")");
}

TEST(PrintVocabulary, HooksReplaceSurfaceForms) {
  const auto doc = must_read(std::string(kHeader) +
                             "(defclass A :super (some p B))");
  PrintVocabulary v;
  v.keyword = [](std::string_view k, const SourceSpan&) {
    return "<" + std::string(k) + ">";
  };
  v.identifier = [](const Name& n) { return n.text + "'"; };
  EXPECT_EQ(print_chunk(doc.chunks[1], v),
            "(<defclass> A'\n  <:super> (<some> p' B'))");
}

}  // namespace
}  // namespace ontoweave
