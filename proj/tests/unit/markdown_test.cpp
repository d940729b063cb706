// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/markdown.hpp"

#include <gtest/gtest.h>

namespace ontoweave {
namespace {

TEST(Markdown, BlocksAndInlines) {
  const auto doc = parse_markdown("# Title\n\nA *b* **c** `d` [e](f)\n\n- one\n- two");
  ASSERT_EQ(doc.blocks.size(), 4u);
  EXPECT_EQ(doc.blocks[0].kind, Block::Kind::Heading);
  EXPECT_EQ(doc.blocks[0].level, 1);
  EXPECT_EQ(plain_text(doc.blocks[1].content), "A b c d e (f)");
  EXPECT_EQ(doc.blocks[2].kind, Block::Kind::ListItem);
  EXPECT_FALSE(doc.unclosed);
}

TEST(Markdown, HeadingLevelsStopAtFour) {
  EXPECT_EQ(parse_markdown("#### four").blocks[0].level, 4);
  EXPECT_EQ(parse_markdown("##### five").blocks[0].kind,
            Block::Kind::Paragraph);
  EXPECT_EQ(parse_markdown("#nospace").blocks[0].kind, Block::Kind::Paragraph);
}

TEST(Markdown, UnclosedMarkup) {
  EXPECT_TRUE(markdown_has_unclosed_markup("a *b"));
  EXPECT_TRUE(markdown_has_unclosed_markup("a **b*"));
  EXPECT_TRUE(markdown_has_unclosed_markup("`x"));
  EXPECT_FALSE(markdown_has_unclosed_markup("a *b* `*`"));
}

TEST(Markdown, RawHtmlIsEscaped) {
  EXPECT_EQ(render_markdown("<script>x</script> & \"q\""),
            "<p>&lt;script&gt;x&lt;/script&gt; &amp; &quot;q&quot;</p>\n");
}

TEST(Markdown, RendersInlineMarkup) {
  EXPECT_EQ(render_markdown("*a* **b** `c` [d](https://e)"),
            "<p><em>a</em> <strong>b</strong> <code>c</code> "
            "<a href=\"https://e\">d</a></p>\n");
  EXPECT_EQ(render_markdown("- x\n- y\n\nz"),
            "<ul>\n<li>x</li>\n<li>y</li>\n</ul>\n<p>z</p>\n");
}

TEST(Anchor, SlugsAcrossScripts) {
  EXPECT_EQ(anchor("Hello, World!"), "hello-world");
  EXPECT_EQ(anchor("  --Pizza  Toppings-- "), "pizza-toppings");
  EXPECT_EQ(anchor("بيتزا كبيرة"), "بيتزا-كبيرة");
  EXPECT_EQ(anchor("Über Größe"), "über-größe");
  EXPECT_EQ(anchor("!!!"), "");
}

TEST(Anchor, RegistrySuffixes) {
  AnchorRegistry r;
  bool collided = true;
  EXPECT_EQ(r.claim("a", &collided), "a");
  EXPECT_FALSE(collided);
  EXPECT_EQ(r.claim("a", &collided), "a-2");
  EXPECT_TRUE(collided);
  EXPECT_TRUE(r.reserve("a-3"));
  EXPECT_EQ(r.claim("a"), "a-4");
  EXPECT_FALSE(r.reserve("a"));
}

TEST(Anchor, HeadingsAvoidReservedPrefixes) {
  AnchorRegistry r;
  std::vector<RenderedHeading> headings;
  render_markdown("# Def Pizza\n\n# ???\n\n# Def Pizza", r, &headings);
  ASSERT_EQ(headings.size(), 3u);
  EXPECT_EQ(headings[0].anchor, "sec-def-pizza");
  EXPECT_EQ(headings[1].anchor, "section");
  EXPECT_EQ(headings[2].anchor, "sec-def-pizza-2");
  EXPECT_TRUE(headings[2].collided);
}

}  // namespace
}  // namespace ontoweave
