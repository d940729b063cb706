// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/locale.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "ontoweave/printer.hpp"

namespace ontoweave {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool valid_locale_tag(std::string_view tag) {
  std::size_t start = 0;
  bool first = true;
  while (true) {
    const auto dash = tag.find('-', start);
    const auto part = tag.substr(start, dash == std::string_view::npos
                                            ? std::string_view::npos
                                            : dash - start);
    if (part.empty() || part.size() > 8) return false;
    for (const char c : part) {
      const auto u = static_cast<unsigned char>(c);
      if (first ? !std::isalpha(u) : !std::isalnum(u)) return false;
    }
    if (first && part.size() < 2) return false;
    first = false;
    if (dash == std::string_view::npos) return true;
    start = dash + 1;
  }
}

struct Entry {
  std::string key;
  std::string value;
};

// `key = "value"` with an optional trailing `# comment`.
std::optional<Entry> parse_entry(std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  Entry entry{std::string(trim(line.substr(0, eq))), {}};
  if (entry.key.empty()) return std::nullopt;
  std::string_view rest = trim(line.substr(eq + 1));
  if (rest.empty() || rest.front() != '"') return std::nullopt;
  std::size_t i = 1;
  bool closed = false;
  for (; i < rest.size(); ++i) {
    const char c = rest[i];
    if (c == '"') {
      closed = true;
      ++i;
      break;
    }
    if (c == '\\' && i + 1 < rest.size()) {
      ++i;
      entry.value.push_back(rest[i]);
      continue;
    }
    entry.value.push_back(c);
  }
  if (!closed) return std::nullopt;
  const std::string_view tail = trim(rest.substr(i));
  if (!tail.empty() && tail.front() != '#') return std::nullopt;
  return entry;
}

}  // namespace

std::string_view direction_name(Direction d) {
  return d == Direction::Rtl ? "rtl" : "ltr";
}

bool is_translatable_keyword(std::string_view canonical) {
  if (form_kind_from_head(canonical) || option_key_from_keyword(canonical)) {
    return true;
  }
  for (const auto h : kExpressionHeads) {
    if (h == canonical) return true;
  }
  for (const auto c : kCharacteristics) {
    if (c == canonical) return true;
  }
  return false;
}

Outcome<LocaleBundle> parse_bundle(std::string_view text) {
  enum class Section { Top, Keywords, Identifiers };
  LocaleBundle bundle;
  Diagnostics diags;
  Section section = Section::Top;
  std::set<std::string> top_keys;
  std::map<std::string, int> keyword_values;
  std::map<std::string, int> identifier_values;

  const std::string normalized = normalize_newlines(text);
  int number = 0;
  for (const auto raw : split_lines(normalized)) {
    ++number;
    const std::string_view line = trim(raw);
    const auto at = SourceSpan{number, 1, number,
                               static_cast<int>(raw.size()) + 1};
    if (line.empty() || line.front() == '#') continue;
    if (line == "[keywords]") {
      section = Section::Keywords;
      continue;
    }
    if (line == "[identifiers]") {
      section = Section::Identifiers;
      continue;
    }
    if (line.front() == '[') {
      diags.push_back(make_error(
          "E034", "unknown section '" + std::string(line) + "'", at));
      continue;
    }
    auto entry = parse_entry(line);
    if (!entry) {
      diags.push_back(
          make_error("E034", "expected key = \"value\"", at));
      continue;
    }
    switch (section) {
      case Section::Top:
        if (!top_keys.insert(entry->key).second) {
          diags.push_back(make_error(
              "E030", "duplicate key '" + entry->key + "'", at));
        } else if (entry->key == "locale") {
          if (!valid_locale_tag(entry->value)) {
            diags.push_back(make_error(
                "E034", "invalid locale tag '" + entry->value + "'", at));
          }
          bundle.locale = entry->value;
        } else if (entry->key == "direction") {
          if (entry->value == "ltr") {
            bundle.direction = Direction::Ltr;
          } else if (entry->value == "rtl") {
            bundle.direction = Direction::Rtl;
          } else {
            diags.push_back(make_error(
                "E034", "direction must be \"ltr\" or \"rtl\"", at));
          }
        } else {
          diags.push_back(make_error(
              "E034", "unknown key '" + entry->key + "'", at));
        }
        break;
      case Section::Keywords: {
        if (!is_translatable_keyword(entry->key)) {
          diags.push_back(make_error(
              "E034", "'" + entry->key + "' is not a translatable keyword",
              at));
          break;
        }
        const bool option = entry->key.front() == ':';
        if (option ? !is_option_keyword(entry->value)
                   : !is_symbol(entry->value)) {
          diags.push_back(make_error(
              "E032", "'" + entry->value + "' is not a valid " +
                          (option ? "option keyword" : "symbol"),
              at));
        }
        if (bundle.keywords.count(entry->key)) {
          diags.push_back(make_error(
              "E030", "duplicate key '" + entry->key + "'", at));
        } else if (auto [it, fresh] =
                       keyword_values.emplace(entry->value, number);
                   !fresh) {
          diags.push_back(make_error(
              "E031", "'" + entry->value + "' is already the translation " +
                          "on line " + std::to_string(it->second),
              at));
        } else {
          bundle.keywords.emplace(entry->key, entry->value);
        }
        break;
      }
      case Section::Identifiers:
        if (!is_symbol(entry->key)) {
          diags.push_back(make_error(
              "E034", "'" + entry->key + "' is not an identifier", at));
          break;
        }
        if (!is_symbol(entry->value)) {
          diags.push_back(make_error(
              "E032", "'" + entry->value + "' is not a valid symbol", at));
        }
        if (bundle.identifiers.count(entry->key)) {
          diags.push_back(make_error(
              "E030", "duplicate key '" + entry->key + "'", at));
        } else if (auto [it, fresh] =
                       identifier_values.emplace(entry->value, number);
                   !fresh) {
          diags.push_back(make_error(
              "E031", "'" + entry->value + "' is already the translation " +
                          "on line " + std::to_string(it->second),
              at));
        } else {
          bundle.identifiers.emplace(entry->key, entry->value);
        }
        break;
    }
  }
  if (!top_keys.count("locale")) {
    diags.push_back(make_error("E033", "missing 'locale' field",
                               SourceSpan::point(1, 1)));
  }
  if (has_errors(diags)) return Outcome<LocaleBundle>::failure(diags);
  return Outcome<LocaleBundle>::success(std::move(bundle), std::move(diags));
}

LocaleBundle invert_bundle(const LocaleBundle& bundle) {
  LocaleBundle out;
  out.locale = bundle.locale;
  out.direction = bundle.direction;
  for (const auto& [k, v] : bundle.keywords) out.keywords.emplace(v, k);
  for (const auto& [k, v] : bundle.identifiers) out.identifiers.emplace(v, k);
  return out;
}

Vocabulary vocabulary_from(const LocaleBundle& bundle) {
  Vocabulary v;
  for (const auto& [k, val] : bundle.keywords) v.keywords.emplace(k, val);
  for (const auto& [k, val] : bundle.identifiers) {
    v.identifiers.emplace(k, val);
  }
  return v;
}

Translation translate_source(const OntologyDoc& doc,
                             const LocaleBundle& bundle) {
  Translation out;
  std::set<std::string> missing_keywords;
  std::set<std::string> missing_identifiers;

  PrintVocabulary vocab;
  vocab.keyword = [&](std::string_view kw, const SourceSpan& at) {
    if (const auto it = bundle.keywords.find(kw);
        it != bundle.keywords.end()) {
      return it->second;
    }
    if (missing_keywords.insert(std::string(kw)).second) {
      out.warnings.push_back(make_warning(
          "W010",
          "no " + bundle.locale + " translation for keyword '" +
              std::string(kw) + "'",
          at));
    }
    return std::string(kw);
  };
  vocab.identifier = [&](const Name& name) {
    if (const auto it = bundle.identifiers.find(name.text);
        it != bundle.identifiers.end()) {
      return it->second;
    }
    if (missing_identifiers.insert(name.text).second) {
      out.warnings.push_back(make_warning(
          "W010",
          "no " + bundle.locale + " translation for '" + name.text + "'",
          name.span));
    }
    return name.text;
  };
  out.text = canonical_print(doc, vocab);
  return out;
}

Outcome<OntologyDoc> read_translated(std::string_view source,
                                     const LocaleBundle& bundle) {
  const Vocabulary vocab = vocabulary_from(invert_bundle(bundle));
  return read_document(source, &vocab);
}

OntologyDoc inject_labels(OntologyDoc doc,
                          const std::vector<LocaleBundle>& bundles) {
  for (const auto& bundle : bundles) {
    for (const auto& entry : doc.symbols.entries()) {
      const auto it = bundle.identifiers.find(entry.name);
      if (it == bundle.identifiers.end()) continue;
      if (doc.symbols.has_label(entry.name, bundle.locale)) continue;
      doc.symbols.add_label(Label{entry.name, bundle.locale, it->second});
    }
  }
  return doc;
}

}  // namespace ontoweave
