// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/locale.hpp"

#include <gtest/gtest.h>

#include "ontoweave/printer.hpp"
#include "test_support.hpp"

namespace ontoweave {
namespace {

using ::ontoweave::testing::count_code;
using ::ontoweave::testing::fixture;
using ::ontoweave::testing::must_bundle;
using ::ontoweave::testing::must_read;

TEST(Bundle, MinimalBundle) {
  const auto b = parse_bundle("locale = \"it\"\n");
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(b->locale, "it");
  EXPECT_EQ(b->direction, Direction::Ltr);
  EXPECT_TRUE(b->keywords.empty());
}

TEST(Bundle, FullSyntax) {
  const auto b = parse_bundle(
      "# comment\n"
      "locale = \"ar\"   # trailing\n"
      "direction = \"rtl\"\n\n"
      "[keywords]\n"
      "defclass = \"عرّف-صنف\"\n"
      ":super = \":أعلى\"\n"
      "[identifiers]\n"
      "Pizza = \"بيتزا\"\n");
  ASSERT_TRUE(b.ok()) << (b.diagnostics.empty() ? "" : b.diagnostics[0].message);
  EXPECT_EQ(b->direction, Direction::Rtl);
  EXPECT_EQ(b->keywords.at(":super"), ":أعلى");
  EXPECT_EQ(b->identifiers.at("Pizza"), "بيتزا");
}

TEST(Bundle, DuplicateValue) {
  const auto b = parse_bundle(
      "locale = \"it\"\n[identifiers]\nA = \"X\"\nB = \"X\"\n");
  ASSERT_FALSE(b.ok());
  ASSERT_EQ(count_code(b.diagnostics, "E031"), 1);
  EXPECT_EQ(b.diagnostics[0].span.start_line, 4);
}

TEST(Bundle, Errors) {
  EXPECT_EQ(count_code(parse_bundle("locale = \"it\"\nlocale = \"fr\"\n")
                           .diagnostics,
                       "E030"),
            1);
  EXPECT_EQ(count_code(parse_bundle("locale = \"it\"\n[identifiers]\n"
                                    "A = \"x\"\nA = \"y\"\n")
                           .diagnostics,
                       "E030"),
            1);
  EXPECT_EQ(count_code(parse_bundle("locale = \"it\"\n[identifiers]\n"
                                    "A = \"two words\"\n")
                           .diagnostics,
                       "E032"),
            1);
  EXPECT_EQ(count_code(parse_bundle("locale = \"it\"\n[keywords]\n"
                                    ":super = \"sopra\"\n")
                           .diagnostics,
                       "E032"),
            1);
  EXPECT_EQ(count_code(parse_bundle("direction = \"ltr\"\n").diagnostics,
                       "E033"),
            1);
  for (const char* bad :
       {"locale = \"it\"\n[extras]\n", "locale = \"it\"\nfoo = \"x\"\n",
        "locale = \"i\"\n", "locale = \"it\"\ndirection = \"up\"\n",
        "locale = it\n", "locale = \"it\"\n[keywords]\nbanana = \"x\"\n"}) {
    EXPECT_EQ(count_code(parse_bundle(bad).diagnostics, "E034"), 1) << bad;
  }
}

TEST(Bundle, InvertIsAnInvolution) {
  for (const char* name : {"it.lb", "ar.lb"}) {
    const LocaleBundle b = must_bundle(name);
    EXPECT_EQ(invert_bundle(invert_bundle(b)), b) << name;
    EXPECT_EQ(invert_bundle(b).keywords.size(), b.keywords.size());
  }
}

TEST(Translate, SingleForm) {
  LocaleBundle b;
  b.locale = "it";
  b.keywords = {{"defclass", "definisci-classe"}, {"defontology", "d-o"}};
  b.identifiers = {{"Pizza", "Pizza"}, {"o", "o"}};
  const auto doc = must_read("(defontology o)\n\n(defclass Pizza)");
  const Translation t = translate_source(doc, b);
  EXPECT_EQ(t.text, "(d-o o)\n\n(definisci-classe Pizza)\n");
  EXPECT_TRUE(t.warnings.empty());
}

TEST(Translate, NarrativeAndTextAreUntouched) {
  const auto doc = must_read(fixture("pizza.lont"));
  const Translation t = translate_source(doc, must_bundle("it.lb"));
  for (const auto& chunk : doc.chunks) {
    if (chunk.is_code()) continue;
    EXPECT_NE(t.text.find(chunk.raw_text), std::string::npos);
  }
  EXPECT_NE(t.text.find("\"Anything that can be eaten.\""), std::string::npos);
}

TEST(Translate, RoundTripOnFixtures) {
  for (const char* src : {"pizza.lont", "aminoacid.lont"}) {
    const auto doc = must_read(fixture(src));
    const std::string canonical = canonical_print(doc);
    for (const char* lb : {"it.lb", "ar.lb"}) {
      const LocaleBundle b = must_bundle(lb);
      const Translation t = translate_source(doc, b);
      EXPECT_TRUE(t.warnings.empty()) << src << ' ' << lb;
      const auto back = read_translated(t.text, b);
      ASSERT_TRUE(back.ok()) << src << ' ' << lb;
      EXPECT_EQ(canonical_print(*back), canonical) << src << ' ' << lb;
    }
  }
}

TEST(Translate, MissingIdentifierWarnsOnce) {
  LocaleBundle b = must_bundle("it.lb");
  b.identifiers.erase("Food");
  const auto doc = must_read(fixture("pizza.lont"));
  const Translation t = translate_source(doc, b);
  ASSERT_EQ(count_code(t.warnings, "W010"), 1);
  EXPECT_NE(t.warnings[0].message.find("'Food'"), std::string::npos);
  const auto back = read_translated(t.text, b);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(canonical_print(*back), canonical_print(doc));
}

TEST(Translate, DirectionIsMetadataOnly) {
  LocaleBundle ltr = must_bundle("ar.lb");
  LocaleBundle rtl = ltr;
  ltr.direction = Direction::Ltr;
  const auto doc = must_read(fixture("pizza.lont"));
  EXPECT_EQ(translate_source(doc, ltr).text, translate_source(doc, rtl).text);
}

TEST(InjectLabels, AddsOnePerLocaleAndEntity) {
  const auto doc = must_read(fixture("pizza.lont"));
  const std::size_t before = doc.symbols.labels().size();
  const auto labelled =
      inject_labels(doc, {must_bundle("it.lb"), must_bundle("ar.lb")});
  EXPECT_EQ(labelled.symbols.labels().size(), before + 34);
}

TEST(InjectLabels, MonotoneAndIdempotent) {
  const auto doc = must_read(fixture("pizza.lont"));
  const auto it = must_bundle("it.lb");
  const auto once = inject_labels(doc, {it});
  const auto twice = inject_labels(once, {it});
  EXPECT_EQ(once.symbols.labels(), twice.symbols.labels());
  // Existing labels survive in order.
  for (std::size_t i = 0; i < doc.symbols.labels().size(); ++i) {
    EXPECT_EQ(once.symbols.labels()[i], doc.symbols.labels()[i]);
  }
}

TEST(InjectLabels, ExistingLocaleLabelWins) {
  const auto doc = must_read(
      "(defontology o)\n(defclass A :label \"prima\")\n");
  LocaleBundle b;
  b.locale = "it";
  b.identifiers = {{"A", "Ah"}};
  auto labelled = inject_labels(doc, {b});
  EXPECT_EQ(labelled.symbols.labels_for("A").size(), 2u);
  labelled = inject_labels(labelled, {b});
  EXPECT_EQ(labelled.symbols.labels_for("A").size(), 2u);
}

}  // namespace
}  // namespace ontoweave
