// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

// Locale bundles (`.lb`): per-language surface forms for the DSL's keywords
// and a document's identifiers, plus the script direction.
//
//   locale = "it"
//   direction = "ltr"
//   [keywords]
//   defclass = "definisci-classe"
//   :super = ":sopra"
//   [identifiers]
//   Pizza = "Pizza"

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontoweave/model.hpp"
#include "ontoweave/reader.hpp"
#include "ontoweave/source.hpp"

namespace ontoweave {

enum class Direction { Ltr, Rtl };

std::string_view direction_name(Direction d);

struct LocaleBundle {
  std::string locale;
  Direction direction = Direction::Ltr;
  // Canonical keyword -> surface form. Option keywords keep their colon on
  // both sides.
  std::map<std::string, std::string, std::less<>> keywords;
  // Canonical identifier -> surface form.
  std::map<std::string, std::string, std::less<>> identifiers;

  friend bool operator==(const LocaleBundle&, const LocaleBundle&) = default;
};

// Keys accepted in the [keywords] section: form heads, expression heads,
// option keywords and characteristic values.
bool is_translatable_keyword(std::string_view canonical);

// E030 duplicate key, E031 duplicate value, E032 surface form is not a
// valid symbol, E033 missing locale, E034 malformed line or unknown key.
Outcome<LocaleBundle> parse_bundle(std::string_view text);

// Swaps keys and values of both mappings.
LocaleBundle invert_bundle(const LocaleBundle& bundle);

// Reads `bundle` as surface -> canonical, as produced by invert_bundle.
Vocabulary vocabulary_from(const LocaleBundle& bundle);

struct Translation {
  std::string text;
  // W010 once per keyword or identifier without a translation.
  Diagnostics warnings;
};

// Canonical layout with every keyword and identifier replaced by its
// surface form. Narrative and text literals are copied unchanged.
Translation translate_source(const OntologyDoc& doc,
                             const LocaleBundle& bundle);

// Parses source written in `bundle`'s surface forms.
Outcome<OntologyDoc> read_translated(std::string_view source,
                                     const LocaleBundle& bundle);

// Adds one label per (entity, bundle locale) for every entity the bundle
// translates, skipping pairs that already have a label.
OntologyDoc inject_labels(OntologyDoc doc,
                          const std::vector<LocaleBundle>& bundles);

}  // namespace ontoweave
