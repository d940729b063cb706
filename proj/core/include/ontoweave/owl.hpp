// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// OWL 2 functional-style syntax output (`.ofn`), one declaration or axiom
// per line.

#pragma once

#include <string>
#include <string_view>

#include "ontoweave/model.hpp"
#include "ontoweave/source.hpp"

namespace ontoweave {

inline constexpr std::string_view kDefaultPrefixIri =
    "https://example.org/onto#";
inline constexpr std::string_view kRdfsIri =
    "http://www.w3.org/2000/01/rdf-schema#";

struct EmitOptions {
  // Used when the header has no :iri. Must end with `#` or `/`.
  std::string default_prefix_iri{kDefaultPrefixIri};
};

bool valid_prefix_iri(std::string_view iri);

// `:name` when the name is a valid prefixed-name local part, otherwise the
// full IRI `<prefix name>`.
std::string entity_reference(std::string_view name,
                             std::string_view prefix = kDefaultPrefixIri);

std::string map_class_expression(const ClassExpression& expr,
                                 std::string_view prefix = kDefaultPrefixIri);

// Quoted literal with `\` and `"` backslash-escaped.
std::string escape_literal(std::string_view text);
// Inverse of escape_literal; takes the quoted form.
std::string unescape_literal(std::string_view quoted);

// E050 for every reference to an undefined entity, E051 for a prefix IRI
// that does not end with `#` or `/`.
Outcome<std::string> emit_functional(const OntologyDoc& doc,
                                     const EmitOptions& options = {});

}  // namespace ontoweave
