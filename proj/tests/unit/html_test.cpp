// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/html.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <regex>
#include <set>

#include "test_support.hpp"

namespace ontoweave {
namespace {

using ::ontoweave::testing::count_code;
using ::ontoweave::testing::count_occurrences;
using ::ontoweave::testing::fixture;
using ::ontoweave::testing::must_bundle;
using ::ontoweave::testing::must_read;

std::set<std::string> captures(const std::string& html, const std::regex& re) {
  std::set<std::string> out;
  for (std::sregex_iterator it(html.begin(), html.end(), re), end; it != end;
       ++it) {
    out.insert((*it)[1]);
  }
  return out;
}

nlohmann::json manifest_of(const std::string& html) {
  const std::string open = "<script type=\"application/json\" id=\"ow-manifest\">";
  const auto start = html.find(open) + open.size();
  return nlohmann::json::parse(html.substr(start, html.find("</script>", start) - start));
}

TEST(Classify, RunsTileEachCodeChunk) {
  for (const char* name : {"pizza.lont", "aminoacid.lont"}) {
    const std::string source = fixture(name);
    const auto doc = must_read(source);
    for (const auto& chunk : doc.chunks) {
      if (!chunk.is_code()) continue;
      std::string joined;
      for (const auto& run : classify_tokens(chunk, doc.symbols)) {
        joined += run.text;
        EXPECT_EQ(slice(source, run.span), run.text);
      }
      EXPECT_EQ(joined, chunk.raw_text) << name << " chunk " << chunk.id;
    }
  }
}

TEST(Classify, Classes) {
  const auto doc = must_read(
      "(defontology o)\n(defclass A :super (some p B) :label \"a\") ; r\n");
  std::vector<std::pair<TokenClass, std::string>> got;
  for (const auto& run : classify_tokens(doc.chunks[0], doc.symbols)) {
    if (run.token_class != TokenClass::Plain) got.emplace_back(run.token_class, run.text);
  }
  const std::vector<std::pair<TokenClass, std::string>> want = {
      {TokenClass::Paren, "("},       {TokenClass::Keyword, "defontology"},
      {TokenClass::EntityDef, "o"},   {TokenClass::Paren, ")"},
      {TokenClass::Paren, "("},       {TokenClass::Keyword, "defclass"},
      {TokenClass::EntityDef, "A"},   {TokenClass::Option, ":super"},
      {TokenClass::Paren, "("},       {TokenClass::Keyword, "some"},
      {TokenClass::EntityRef, "p"},   {TokenClass::EntityRef, "B"},
      {TokenClass::Paren, ")"},       {TokenClass::Option, ":label"},
      {TokenClass::TextLiteral, "\"a\""}, {TokenClass::Paren, ")"},
      {TokenClass::Remark, "; r"}};
  EXPECT_EQ(got, want);
}

TEST(Toc, NestsByLevel) {
  const auto toc = build_toc({{1, "a", "a", false},
                              {2, "b", "b", false},
                              {3, "c", "c", false},
                              {2, "d", "d", false},
                              {1, "e", "e", false}});
  ASSERT_EQ(toc.size(), 2u);
  ASSERT_EQ(toc[0].children.size(), 2u);
  EXPECT_EQ(toc[0].children[0].children[0].title, "c");
  EXPECT_EQ(toc[0].children[1].title, "d");
}

TEST(Html, EveryEntityLinkResolves) {
  for (const char* name : {"pizza.lont", "aminoacid.lont"}) {
    const auto doc = must_read(fixture(name));
    const std::string html = emit_html(doc).html;
    const auto ids = captures(html, std::regex(R"re(id="([^"]+)")re"));
    const auto hrefs = captures(html, std::regex(R"re(href="#([^"]+)")re"));
    EXPECT_FALSE(hrefs.empty());
    for (const auto& h : hrefs) EXPECT_TRUE(ids.count(h)) << name << ": " << h;
    for (const auto& e : doc.symbols.entries()) {
      EXPECT_TRUE(ids.count("def-" + anchor(e.name))) << e.name;
    }
  }
}

TEST(Html, IdsAreUnique) {
  const std::string html = emit_html(must_read(fixture("pizza.lont"))).html;
  const std::regex re(R"re(id="([^"]+)")re");
  std::multiset<std::string> seen;
  for (std::sregex_iterator it(html.begin(), html.end(), re), end; it != end; ++it) {
    seen.insert((*it)[1]);
  }
  for (const auto& id : seen) EXPECT_EQ(seen.count(id), 1u) << id;
}

TEST(Html, UndefinedReferenceGetsDistinctAnchor) {
  const auto doc = must_read("(defontology o)\n(defclass A :super B)\n");
  const std::string html = emit_html(doc).html;
  EXPECT_NE(html.find("href=\"#def-b\""), std::string::npos);
}

TEST(Html, SelfContained) {
  const std::string html = emit_html(must_read(fixture("pizza.lont")),
                                     {{must_bundle("it.lb")}, Direction::Ltr, false})
                               .html;
  EXPECT_EQ(html.find("src="), std::string::npos);
  EXPECT_EQ(html.find("<link"), std::string::npos);
  EXPECT_EQ(html.find("@import"), std::string::npos);
  EXPECT_EQ(html.find("url("), std::string::npos);
  EXPECT_EQ(html.rfind("<!DOCTYPE html>", 0), 0u);
  EXPECT_NE(html.find(std::string(viewer_script())), std::string::npos);
}

TEST(Html, RtlDirection) {
  HtmlOptions options;
  options.bundles = {must_bundle("ar.lb")};
  options.direction = Direction::Rtl;
  const std::string html = emit_html(must_read(fixture("pizza.lont")), options).html;
  EXPECT_NE(html.find("<html lang=\"ar\" dir=\"rtl\">"), std::string::npos);
  EXPECT_EQ(manifest_of(html)["direction"], "rtl");
}

TEST(Html, ManifestListsEntitiesWithLabels) {
  HtmlOptions options;
  options.bundles = {must_bundle("it.lb"), must_bundle("ar.lb")};
  const auto doc = must_read(fixture("pizza.lont"));
  const auto m = manifest_of(emit_html(doc, options).html);
  ASSERT_EQ(m["entities"].size(), doc.symbols.size());
  for (const auto& e : m["entities"]) {
    EXPECT_TRUE(e["labels"].contains("it")) << e["name"];
    EXPECT_TRUE(e["labels"].contains("ar")) << e["name"];
  }
  EXPECT_EQ(m["entities"][0]["kind"], "ontology");
}

TEST(Html, HeadingCollisionWarns) {
  const auto doc = must_read("(defontology o)\n;; # Same\n\n;; # Same\n");
  const auto out = emit_html(doc);
  EXPECT_EQ(count_code(out.warnings, "W011"), 1);
  EXPECT_NE(out.html.find("id=\"same-2\""), std::string::npos);
}

TEST(Html, HideSourceDefault) {
  HtmlOptions options;
  options.hide_source_default = true;
  const auto doc = must_read(fixture("pizza.lont"));
  const std::string html = emit_html(doc, options).html;
  EXPECT_EQ(count_occurrences(html, "class=\"source collapsed\""), 6);
  EXPECT_NE(html.find("data-hide-source=\"true\""), std::string::npos);
}

TEST(Html, ScriptContentCannotCloseTheTag) {
  const auto doc = must_read(
      "(defontology o)\n(defclass A :label \"</script><b>\")\n");
  const std::string html = emit_html(doc).html;
  EXPECT_EQ(count_occurrences(html, "</script>"), 2);
}

}  // namespace
}  // namespace ontoweave
