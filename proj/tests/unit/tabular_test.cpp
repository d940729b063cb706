// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/tabular.hpp"

#include <gtest/gtest.h>

#include "ontoweave/printer.hpp"
#include "test_support.hpp"

namespace ontoweave {
namespace {

using ::ontoweave::testing::count_code;
using ::ontoweave::testing::fixture;
using ::ontoweave::testing::must_read;

const PatternTemplate kClass{"(defclass {name} :super {super} :label \"{label}\")"};

TEST(Csv, QuotingRules) {
  const auto t = parse_csv("a,b\n\"x, y\",\"say \"\"hi\"\"\"\n\"multi\nline\",z\n");
  ASSERT_TRUE(t.ok());
  ASSERT_EQ(t->rows.size(), 2u);
  EXPECT_EQ(t->rows[0][0], "x, y");
  EXPECT_EQ(t->rows[0][1], "say \"hi\"");
  EXPECT_EQ(t->rows[1][0], "multi\nline");
  EXPECT_EQ(t->row_lines, (std::vector<int>{2, 3}));
}

TEST(Csv, CrlfBlankLinesAndEmptyCells) {
  const auto t = parse_csv("a,b\r\n\r\n,\r\n1,2");
  ASSERT_TRUE(t.ok());
  ASSERT_EQ(t->rows.size(), 2u);
  EXPECT_EQ(t->rows[0], (std::vector<std::string>{"", ""}));
  EXPECT_EQ(t->rows[1][1], "2");
}

TEST(Csv, RaggedRowCitesLine) {
  const auto t = parse_csv("a,b\n1,2\n3\n");
  ASSERT_FALSE(t.ok());
  ASSERT_EQ(t.diagnostics[0].code, "E070");
  EXPECT_NE(t.diagnostics[0].message.find("line 3"), std::string::npos);
}

TEST(Csv, OtherErrors) {
  EXPECT_EQ(parse_csv("a\n\"open\n").diagnostics[0].code, "E071");
  EXPECT_EQ(parse_csv("a,a\n1,2\n").diagnostics[0].code, "E072");
}

TEST(Csv, FixtureRows) {
  const auto t = parse_csv(fixture("pizzas.csv"));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t->rows.size(), 10u);
  EXPECT_EQ(t->rows[7][2], "Calzone, folded");
}

TEST(Template, Placeholders) {
  const auto p = placeholders({"(defclass {name}\n  :label \"{label}\") {{x}}"});
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->size(), 2u);
  EXPECT_EQ((*p)[1].column, "label");
  EXPECT_EQ((*p)[1].span, (SourceSpan{2, 11, 2, 18}));
  EXPECT_EQ(placeholders({"(defclass {name"}).diagnostics[0].code, "E073");
}

TEST(Template, SubstituteIsRaw) {
  const auto s = substitute(kClass, {"name", "super", "label"},
                            {"A", "B", "say \"x\""});
  EXPECT_EQ(*s, "(defclass A :super B :label \"say \"x\"\")");
  EXPECT_EQ(*substitute({"{{{a}}}"}, {"a"}, {"v"}), "{v}");
  EXPECT_EQ(substitute(kClass, {"name"}, {"A"}).diagnostics[0].code, "E073");
}

TEST(Expand, OneChunkPerRow) {
  const auto table = *parse_csv(fixture("pizzas.csv"));
  const auto chunks = expand(table, {fixture("pizza_class.tpl")});
  ASSERT_TRUE(chunks.ok());
  ASSERT_EQ(chunks->size(), 10u);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ((*chunks)[i].id, i);
    EXPECT_EQ((*chunks)[i].forms[0].name.text, table.rows[i][0]);
  }
}

TEST(Expand, Deterministic) {
  const auto table = *parse_csv(fixture("pizzas.csv"));
  const PatternTemplate tpl{fixture("pizza_class.tpl")};
  const std::string base = fixture("pizza.lont");
  EXPECT_EQ(canonical_print(*expand_document(base, table, tpl)),
            canonical_print(*expand_document(base, table, tpl)));
}

TEST(Expand, RowErrorsNameTheRow) {
  TableData t;
  t.header = {"name", "super", "label"};
  t.rows = {{"A", "B", "a"}, {"(", "B", "b"}, {"C D", "B", "c"}};
  const auto chunks = expand(t, kClass);
  ASSERT_FALSE(chunks.ok());
  ASSERT_GE(chunks.diagnostics.size(), 2u);
  for (const auto& d : chunks.diagnostics) {
    EXPECT_TRUE(d.message.rfind("row 2: ", 0) == 0 ||
                d.message.rfind("row 3: ", 0) == 0)
        << d.message;
  }
}

TEST(Expand, TemplateMustYieldOneForm) {
  TableData t;
  t.header = {"n"};
  t.rows = {{"A"}};
  EXPECT_EQ(count_code(expand(t, {"(defclass {n}) (defclass X)"}).diagnostics,
                       "E074"),
            1);
  EXPECT_EQ(count_code(expand(t, {"; {n}"}).diagnostics, "E074"), 1);
}

TEST(ExpandDocument, AddsSymbolsAndNarrative) {
  const auto base = must_read(fixture("pizza.lont"));
  const auto doc = expand_document(fixture("pizza.lont"),
                                   *parse_csv(fixture("pizzas.csv")),
                                   {fixture("pizza_class.tpl")});
  ASSERT_TRUE(doc.ok());
  EXPECT_EQ(doc->symbols.size(), base.symbols.size() + 10);
  EXPECT_EQ(doc->chunks.size(), base.chunks.size() + 20);
  EXPECT_EQ(doc->chunks[base.chunks.size()].narrative_text(),
            "Generated from row 1");
  EXPECT_EQ(doc->symbols.find("Calzone")->defining_chunk,
            static_cast<int>(base.chunks.size()) + 15);
}

TEST(ExpandDocument, DuplicateNameCitesRow) {
  TableData t;
  t.header = {"name", "super", "label"};
  t.rows = {{"Extra", "Pizza", "e"}, {"Extra", "NamedPizza", "m"}};
  const auto doc = expand_document(fixture("pizza.lont"), t, kClass);
  ASSERT_FALSE(doc.ok());
  ASSERT_EQ(count_code(doc.diagnostics, "E021"), 1);
  for (const auto& d : doc.diagnostics) {
    if (d.code == "E021") EXPECT_EQ(d.message.rfind("row 2: ", 0), 0u);
  }
}

TEST(ExpandDocument, UndefinedSuperWarnsWithRow) {
  TableData t;
  t.header = {"name", "super", "label"};
  t.rows = {{"Odd", "Nowhere", "o"}};
  const auto doc = expand_document(fixture("pizza.lont"), t, kClass);
  ASSERT_TRUE(doc.ok());
  const auto warnings = lint(*doc);
  ASSERT_EQ(count_code(warnings, "W001"), 1);
}

}  // namespace
}  // namespace ontoweave
