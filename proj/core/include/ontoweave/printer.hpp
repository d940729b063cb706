// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Canonical DSL layout:
//
//   (defclass Margherita
//     :super Pizza (some hasTopping Mozzarella)
//     :label "Margherita")
//
// Form name on the head line, one option per line indented two spaces,
// forms of one chunk on consecutive lines, narrative as `;; ` lines, one
// blank line between chunks, one trailing newline.

#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "ontoweave/model.hpp"

namespace ontoweave {

// Surface-form hooks used when printing. Unset hooks print canonical text.
struct PrintVocabulary {
  // Form heads, expression heads, option keywords (with colon) and
  // characteristic values.
  std::function<std::string(std::string_view keyword, const SourceSpan& at)>
      keyword;
  // Entity identifiers, at definition sites and references alike.
  std::function<std::string(const Name& name)> identifier;
};

// `"..."` with `\"`, `\\`, `\n` and `\t` escaped.
std::string quote_text(std::string_view text);

std::string print_expression(const ClassExpression& expr,
                             const PrintVocabulary& vocab = {});
std::string print_form(const Form& form, const PrintVocabulary& vocab = {});

// Chunk text without a trailing newline.
std::string print_chunk(const Chunk& chunk, const PrintVocabulary& vocab = {});

std::string canonical_print(const OntologyDoc& doc,
                            const PrintVocabulary& vocab = {});

}  // namespace ontoweave
