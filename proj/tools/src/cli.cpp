// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ontoweave/docx.hpp"
#include "ontoweave/html.hpp"
#include "ontoweave/locale.hpp"
#include "ontoweave/owl.hpp"
#include "ontoweave/printer.hpp"
#include "ontoweave/reader.hpp"
#include "ontoweave/tabular.hpp"

namespace ontoweave::cli {

namespace {

namespace fs = std::filesystem;

// Prints diagnostics as they arrive and remembers whether any was an error.
class Session {
 public:
  Session(std::ostream& err, bool color) : err_(err), color_(color) {}

  // Diagnostics about a file other than the main source carry its path.
  void report(const Diagnostics& diagnostics, const std::string& origin = {}) {
    for (Diagnostic d : diagnostics) {
      if (!origin.empty()) d.message = origin + ": " + d.message;
      // Lint repeats some reader warnings.
      if (std::find(seen_.begin(), seen_.end(), d) != seen_.end()) continue;
      seen_.push_back(d);
      failed_ = failed_ || d.is_error();
      if (!color_) {
        err_ << d << '\n';
        continue;
      }
      const char* tint = d.is_error() ? "\x1b[1;31m" : "\x1b[1;33m";
      const std::string line = format_diagnostic(d);
      const auto space = line.find(' ');
      err_ << tint << line.substr(0, space) << "\x1b[0m" << line.substr(space)
           << '\n';
    }
  }

  std::optional<std::string> read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail("E090", "cannot read '" + path + "': " + std::strerror(errno));
      return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
      fail("E090", "cannot read '" + path + "'");
      return std::nullopt;
    }
    return std::move(buffer).str();
  }

  // Writes to a sibling temporary file and renames it over `path`.
  void write(const std::string& path, std::string_view bytes) {
    if (failed_) return;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp-" + std::to_string(::getpid());
    {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      if (out) out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      out.close();
      if (!out) {
        std::error_code ignored;
        fs::remove(temp, ignored);
        fail("E091", "cannot write '" + path + "'");
        return;
      }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      fail("E091", "cannot write '" + path + "': " + ec.message());
    }
  }

  bool failed() const { return failed_; }
  int status() const { return failed_ ? 1 : 0; }

 private:
  void fail(const char* code, std::string message) {
    report({make_error(code, std::move(message), SourceSpan::point(1, 1))});
  }

  std::ostream& err_;
  bool color_;
  bool failed_ = false;
  Diagnostics seen_;
};

std::optional<OntologyDoc> load(Session& s, const std::string& src) {
  const auto text = s.read(src);
  if (!text) return std::nullopt;
  auto doc = read_document(*text);
  s.report(doc.diagnostics);
  if (!doc) return std::nullopt;
  return std::move(*doc.value);
}

std::optional<std::vector<LocaleBundle>> load_bundles(
    Session& s, const std::vector<std::string>& paths) {
  std::vector<LocaleBundle> bundles;
  for (const auto& path : paths) {
    const auto text = s.read(path);
    if (!text) continue;
    auto bundle = parse_bundle(*text);
    s.report(bundle.diagnostics, path);
    if (bundle) bundles.push_back(std::move(*bundle.value));
  }
  if (s.failed()) return std::nullopt;
  return bundles;
}

struct Arguments {
  std::string src;
  std::string output;
  std::string bundle;
  std::vector<std::string> bundles;
  bool invert = false;
  bool hide_source = false;
  std::string iri;
  std::string edited;
  std::string table;
  std::string template_path;
};

int check(Session& s, const Arguments& a) {
  const auto doc = load(s, a.src);
  if (doc) s.report(lint(*doc));
  return s.status();
}

int translate(Session& s, const Arguments& a) {
  const auto text = s.read(a.src);
  const auto bundles = load_bundles(s, {a.bundle});
  if (!text || !bundles) return s.status();
  const LocaleBundle& bundle = bundles->front();
  std::string output;
  if (a.invert) {
    auto doc = read_translated(*text, bundle);
    s.report(doc.diagnostics);
    if (!doc) return s.status();
    output = canonical_print(*doc);
  } else {
    auto doc = read_document(*text);
    s.report(doc.diagnostics);
    if (!doc) return s.status();
    auto translation = translate_source(*doc, bundle);
    s.report(translation.warnings);
    output = std::move(translation.text);
  }
  s.write(a.output, output);
  return s.status();
}

int label(Session& s, const Arguments& a) {
  const auto doc = load(s, a.src);
  const auto bundles = load_bundles(s, a.bundles);
  if (!doc || !bundles) return s.status();
  auto owl = emit_functional(inject_labels(*doc, *bundles));
  s.report(owl.diagnostics);
  if (owl) s.write(a.output, *owl);
  return s.status();
}

int weave_html(Session& s, const Arguments& a) {
  const auto doc = load(s, a.src);
  auto bundles = load_bundles(s, a.bundles);
  if (!doc || !bundles) return s.status();
  HtmlOptions options;
  if (!bundles->empty()) options.direction = bundles->front().direction;
  options.bundles = std::move(*bundles);
  options.hide_source_default = a.hide_source;
  const HtmlOutput html = emit_html(*doc, options);
  s.report(html.warnings);
  s.write(a.output, html.html);
  return s.status();
}

int emit_owl(Session& s, const Arguments& a) {
  auto doc = load(s, a.src);
  if (!doc) return s.status();
  if (!a.iri.empty()) doc->header.iri = a.iri;
  auto owl = emit_functional(*doc);
  s.report(owl.diagnostics);
  if (owl) s.write(a.output, *owl);
  return s.status();
}

int weave_docx(Session& s, const Arguments& a) {
  const auto doc = load(s, a.src);
  if (!doc) return s.status();
  s.write(a.output, emit_docx(*doc));
  return s.status();
}

int extract(Session& s, const Arguments& a) {
  const auto doc = load(s, a.src);
  const auto bytes = s.read(a.edited);
  if (!doc || !bytes) return s.status();
  auto edited = read_docx(*bytes);
  s.report(edited.diagnostics, a.edited);
  if (!edited) return s.status();
  const FeedbackReport report = extract_feedback(*doc, *edited);
  s.report(report.warnings);
  s.write(a.output, feedback_json(report, a.src));
  return s.status();
}

int expand(Session& s, const Arguments& a) {
  const auto text = s.read(a.src);
  const auto csv = s.read(a.table);
  const auto tpl = s.read(a.template_path);
  if (!text || !csv || !tpl) return s.status();
  auto table = parse_csv(*csv);
  s.report(table.diagnostics, a.table);
  if (!table) return s.status();
  auto doc = expand_document(*text, *table,
                             PatternTemplate{normalize_newlines(*tpl)});
  s.report(doc.diagnostics);
  if (doc) s.write(a.output, canonical_print(*doc));
  return s.status();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunOptions& options) {
  CLI::App app{"Literate ontology compiler", "ontoweave"};
  app.require_subcommand(1);
  Arguments a;

  const auto source = [&](CLI::App* sub) {
    sub->add_option("src", a.src, "Literate ontology source (.lont)")
        ->required();
  };
  const auto output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", a.output, "Output file")->required();
  };

  auto* check_cmd = app.add_subcommand("check", "Read and lint a source file");
  source(check_cmd);

  auto* translate_cmd =
      app.add_subcommand("translate", "Rewrite keywords and names through a bundle");
  source(translate_cmd);
  translate_cmd->add_option("--bundle", a.bundle, "Locale bundle (.lb)")
      ->required();
  translate_cmd->add_flag("--invert", a.invert,
                          "Read translated source and print canonical source");
  output(translate_cmd);

  auto* label_cmd = app.add_subcommand(
      "label", "Emit OWL with labels injected from locale bundles");
  source(label_cmd);
  label_cmd->add_option("--bundle", a.bundles, "Locale bundle (.lb)")
      ->required();
  output(label_cmd);

  auto* html_cmd = app.add_subcommand("weave-html", "Weave a standalone HTML page");
  source(html_cmd);
  html_cmd->add_option("--bundle", a.bundles, "Locale bundle (.lb)");
  html_cmd->add_flag("--hide-source", a.hide_source,
                     "Start with source sections collapsed");
  output(html_cmd);

  auto* owl_cmd =
      app.add_subcommand("emit-owl", "Emit OWL 2 functional-style syntax");
  source(owl_cmd);
  owl_cmd->add_option("--iri", a.iri, "Ontology IRI, ending in # or /");
  output(owl_cmd);

  auto* docx_cmd =
      app.add_subcommand("weave-docx", "Weave a word-processing document");
  source(docx_cmd);
  output(docx_cmd);

  auto* feedback_cmd = app.add_subcommand(
      "extract-feedback", "Collect tracked changes and comments as JSON");
  source(feedback_cmd);
  feedback_cmd->add_option("--edited", a.edited, "Edited .docx")->required();
  output(feedback_cmd);

  auto* expand_cmd = app.add_subcommand(
      "expand", "Append forms generated from CSV rows through a template");
  source(expand_cmd);
  expand_cmd->add_option("--table", a.table, "CSV table")->required();
  expand_cmd->add_option("--template", a.template_path, "One-form template")
      ->required();
  output(expand_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string why = e.what();
    if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
        app.get_subcommands([&](CLI::App* sub) {
             return sub->get_name() == args.front();
           }).empty()) {
      why = "unknown subcommand '" + args.front() + "'";
    }
    err << "ontoweave: " << why << "\n\n" << app.help();
    return 2;
  }

  Session s(err, options.color);
  if (*check_cmd) return check(s, a);
  if (*translate_cmd) return translate(s, a);
  if (*label_cmd) return label(s, a);
  if (*html_cmd) return weave_html(s, a);
  if (*owl_cmd) return emit_owl(s, a);
  if (*docx_cmd) return weave_docx(s, a);
  if (*feedback_cmd) return extract(s, a);
  return expand(s, a);
}

}  // namespace ontoweave::cli
