// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/docx.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>

#include <expat.h>
#include <nlohmann/json.hpp>

#include "ontoweave/markdown.hpp"
#include "ontoweave/printer.hpp"
#include "ontoweave/zip.hpp"

namespace ontoweave {

namespace {

constexpr std::string_view kWordNs =
    "http://schemas.openxmlformats.org/wordprocessingml/2006/main";
constexpr std::string_view kStrictWordNs =
    "http://purl.oclc.org/ooxml/wordprocessingml/main";
constexpr std::string_view kCompatNs =
    "http://schemas.openxmlformats.org/markup-compatibility/2006";
constexpr std::string_view kPackageRelsNs =
    "http://schemas.openxmlformats.org/package/2006/relationships";
constexpr char kNsSeparator = '|';

constexpr std::string_view kDocumentType =
    "application/vnd.openxmlformats-officedocument.wordprocessingml."
    "document.main+xml";
constexpr std::string_view kStylesType =
    "application/vnd.openxmlformats-officedocument.wordprocessingml."
    "styles+xml";
constexpr std::string_view kCommentsType =
    "application/vnd.openxmlformats-officedocument.wordprocessingml."
    "comments+xml";
constexpr std::string_view kRelBase =
    "http://schemas.openxmlformats.org/officeDocument/2006/relationships";

constexpr std::string_view kCodeCharStyle = "CodeChar";
constexpr std::string_view kChangeAuthor = "OntoWeave";
constexpr std::string_view kChangeDate = "1980-01-01T00:00:00Z";

// XML 1.0 forbids most C0 controls; tab and LF survive as w:tab / w:br.
std::string xml_safe(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 && c != '\t' && c != '\n') continue;
    out.push_back(c);
  }
  return out;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> split_keep_empty(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
}

// --- building -------------------------------------------------------------

struct Format {
  bool bold = false;
  bool italic = false;
  bool monospace = false;
};

void add_run(std::vector<Run>& runs, std::string text, const Format& f) {
  text = xml_safe(text);
  if (text.empty()) return;
  if (!runs.empty()) {
    Run& last = runs.back();
    if (last.bold == f.bold && last.italic == f.italic &&
        last.monospace == f.monospace) {
      last.text += text;
      return;
    }
  }
  Run run;
  run.text = std::move(text);
  run.bold = f.bold;
  run.italic = f.italic;
  run.monospace = f.monospace;
  runs.push_back(std::move(run));
}

void flatten(std::vector<Run>& runs, const std::vector<Inline>& content,
             Format f) {
  for (const auto& in : content) {
    switch (in.kind) {
      case Inline::Kind::Text: {
        std::string text = in.text;
        std::replace(text.begin(), text.end(), '\n', ' ');
        add_run(runs, std::move(text), f);
        break;
      }
      case Inline::Kind::Code: {
        Format code = f;
        code.monospace = true;
        std::string text = in.text;
        std::replace(text.begin(), text.end(), '\n', ' ');
        add_run(runs, std::move(text), code);
        break;
      }
      case Inline::Kind::Emphasis: {
        Format em = f;
        em.italic = true;
        flatten(runs, in.children, em);
        break;
      }
      case Inline::Kind::Strong: {
        Format strong = f;
        strong.bold = true;
        flatten(runs, in.children, strong);
        break;
      }
      case Inline::Kind::Link:
        flatten(runs, in.children, f);
        add_run(runs, " (" + in.url + ")", f);
        break;
    }
  }
}

ParagraphStyle heading_style(int level) {
  switch (level) {
    case 1:
      return ParagraphStyle::Heading1;
    case 2:
      return ParagraphStyle::Heading2;
    case 3:
      return ParagraphStyle::Heading3;
    default:
      return ParagraphStyle::Heading4;
  }
}

// --- writing --------------------------------------------------------------

constexpr std::string_view kXmlDecl =
    "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";

void write_text(std::string& out, std::string_view text, bool deleted) {
  const std::string_view tag = deleted ? "w:delText" : "w:t";
  std::size_t start = 0;
  const auto flush = [&](std::size_t end) {
    if (end == start) return;
    out += "<" + std::string(tag) + " xml:space=\"preserve\">" +
           escape_xml(text.substr(start, end - start)) + "</" +
           std::string(tag) + ">";
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\t' || text[i] == '\n') {
      flush(i);
      out += text[i] == '\t' ? "<w:tab/>" : "<w:br/>";
      start = i + 1;
    }
  }
  flush(text.size());
}

void write_run(std::string& out, const Run& run, int& change_id) {
  std::string body = "<w:r>";
  if (run.bold || run.italic || run.monospace) {
    body += "<w:rPr>";
    if (run.monospace) {
      body += "<w:rStyle w:val=\"" + std::string(kCodeCharStyle) + "\"/>";
    }
    if (run.bold) body += "<w:b/>";
    if (run.italic) body += "<w:i/>";
    body += "</w:rPr>";
  }
  write_text(body, run.text, run.change == Change::Deleted);
  body += "</w:r>";
  if (run.change == Change::None) {
    out += body;
    return;
  }
  const std::string tag = run.change == Change::Inserted ? "w:ins" : "w:del";
  out += "<" + tag + " w:id=\"" + std::to_string(change_id++) +
         "\" w:author=\"" + std::string(kChangeAuthor) + "\" w:date=\"" +
         std::string(kChangeDate) + "\">" + body + "</" + tag + ">";
}

std::string document_part(const DocxDoc& doc) {
  // Bookmark ids follow the order of their first paragraph.
  std::vector<std::pair<std::string, BookmarkRange>> marks(
      doc.bookmarks.begin(), doc.bookmarks.end());
  std::stable_sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second.first, a.second.last) <
           std::tie(b.second.first, b.second.last);
  });

  // First and last run carrying each comment.
  std::map<std::string, std::pair<int, int>> comment_start;
  std::map<std::string, std::pair<int, int>> comment_end;
  for (int p = 0; p < static_cast<int>(doc.paragraphs.size()); ++p) {
    const auto& runs = doc.paragraphs[p].runs;
    for (int r = 0; r < static_cast<int>(runs.size()); ++r) {
      for (const auto& id : runs[r].comment_ids) {
        if (!doc.comments.count(id)) continue;
        comment_start.emplace(id, std::pair{p, r});
        comment_end[id] = {p, r};
      }
    }
  }

  std::string out(kXmlDecl);
  out += "<w:document xmlns:w=\"" + std::string(kWordNs) + "\"><w:body>\n";
  int change_id = 0;
  for (int p = 0; p < static_cast<int>(doc.paragraphs.size()); ++p) {
    const Paragraph& para = doc.paragraphs[p];
    out += "<w:p>";
    if (para.style != ParagraphStyle::Normal || para.bidi ||
        para.mark != Change::None) {
      out += "<w:pPr>";
      if (para.style != ParagraphStyle::Normal) {
        out += "<w:pStyle w:val=\"" + std::string(style_id(para.style)) +
               "\"/>";
      }
      if (para.bidi) out += "<w:bidi/>";
      if (para.mark != Change::None) {
        out += std::string("<w:rPr><") +
               (para.mark == Change::Inserted ? "w:ins" : "w:del") +
               " w:id=\"" + std::to_string(change_id++) + "\" w:author=\"" +
               std::string(kChangeAuthor) + "\" w:date=\"" +
               std::string(kChangeDate) + "\"/></w:rPr>";
      }
      out += "</w:pPr>";
    }
    for (std::size_t m = 0; m < marks.size(); ++m) {
      if (marks[m].second.first == p) {
        out += "<w:bookmarkStart w:id=\"" + std::to_string(m) +
               "\" w:name=\"" + escape_xml(marks[m].first) + "\"/>";
      }
    }
    for (int r = 0; r < static_cast<int>(para.runs.size()); ++r) {
      for (const auto& [id, at] : comment_start) {
        if (at == std::pair{p, r}) {
          out += "<w:commentRangeStart w:id=\"" + escape_xml(id) + "\"/>";
        }
      }
      write_run(out, para.runs[r], change_id);
      for (const auto& [id, at] : comment_end) {
        if (at == std::pair{p, r}) {
          out += "<w:commentRangeEnd w:id=\"" + escape_xml(id) +
                 "\"/><w:r><w:commentReference w:id=\"" + escape_xml(id) +
                 "\"/></w:r>";
        }
      }
    }
    // Comments without anchored runs get an empty range at the paragraph end.
    for (const auto& [id, c] : doc.comments) {
      if (!comment_start.count(id) && c.paragraph == p) {
        out += "<w:commentRangeStart w:id=\"" + escape_xml(id) +
               "\"/><w:commentRangeEnd w:id=\"" + escape_xml(id) +
               "\"/><w:r><w:commentReference w:id=\"" + escape_xml(id) +
               "\"/></w:r>";
      }
    }
    for (std::size_t m = 0; m < marks.size(); ++m) {
      if (marks[m].second.last == p) {
        out += "<w:bookmarkEnd w:id=\"" + std::to_string(m) + "\"/>";
      }
    }
    out += "</w:p>\n";
  }
  out += "</w:body></w:document>\n";
  return out;
}

std::string comments_part(const DocxDoc& doc) {
  std::string out(kXmlDecl);
  out += "<w:comments xmlns:w=\"" + std::string(kWordNs) + "\">\n";
  for (const auto& [id, c] : doc.comments) {
    out += "<w:comment w:id=\"" + escape_xml(id) + "\" w:author=\"" +
           escape_xml(c.author) + "\">";
    for (const auto& line : split_keep_empty(c.body)) {
      out += "<w:p><w:r>";
      write_text(out, line, false);
      out += "</w:r></w:p>";
    }
    out += "</w:comment>\n";
  }
  out += "</w:comments>\n";
  return out;
}

std::string heading_style_xml(int level, int half_points) {
  const std::string n = std::to_string(level);
  return "<w:style w:type=\"paragraph\" w:styleId=\"Heading" + n +
         "\"><w:name w:val=\"heading " + n +
         "\"/><w:basedOn w:val=\"Normal\"/><w:next w:val=\"Normal\"/>"
         "<w:qFormat/><w:pPr><w:keepNext/><w:spacing w:before=\"240\" "
         "w:after=\"80\"/><w:outlineLvl w:val=\"" +
         std::to_string(level - 1) +
         "\"/></w:pPr><w:rPr><w:b/><w:sz w:val=\"" +
         std::to_string(half_points) + "\"/></w:rPr></w:style>\n";
}

std::string styles_part() {
  std::string out(kXmlDecl);
  out += "<w:styles xmlns:w=\"" + std::string(kWordNs) + "\">\n";
  out +=
      "<w:docDefaults><w:rPrDefault><w:rPr><w:rFonts w:ascii=\"Calibri\" "
      "w:hAnsi=\"Calibri\" w:cs=\"Arial\"/><w:sz w:val=\"22\"/></w:rPr>"
      "</w:rPrDefault><w:pPrDefault><w:pPr><w:spacing w:after=\"120\"/>"
      "</w:pPr></w:pPrDefault></w:docDefaults>\n";
  out +=
      "<w:style w:type=\"paragraph\" w:default=\"1\" w:styleId=\"Normal\">"
      "<w:name w:val=\"Normal\"/><w:qFormat/></w:style>\n";
  out += heading_style_xml(1, 32);
  out += heading_style_xml(2, 28);
  out += heading_style_xml(3, 24);
  out += heading_style_xml(4, 22);
  out +=
      "<w:style w:type=\"paragraph\" w:styleId=\"Code\"><w:name "
      "w:val=\"Code\"/><w:basedOn w:val=\"Normal\"/><w:pPr><w:spacing "
      "w:after=\"0\"/></w:pPr><w:rPr><w:rFonts w:ascii=\"Courier New\" "
      "w:hAnsi=\"Courier New\" w:cs=\"Courier New\"/><w:sz w:val=\"20\"/>"
      "</w:rPr></w:style>\n";
  out +=
      "<w:style w:type=\"character\" w:styleId=\"" +
      std::string(kCodeCharStyle) +
      "\"><w:name w:val=\"Code Char\"/><w:rPr><w:rFonts w:ascii=\"Courier "
      "New\" w:hAnsi=\"Courier New\" w:cs=\"Courier New\"/></w:rPr>"
      "</w:style>\n";
  out += "</w:styles>\n";
  return out;
}

std::string content_types_part(bool with_comments) {
  std::string out(kXmlDecl);
  out +=
      "<Types xmlns=\"http://schemas.openxmlformats.org/package/2006/"
      "content-types\">"
      "<Default Extension=\"rels\" ContentType=\"application/"
      "vnd.openxmlformats-package.relationships+xml\"/>"
      "<Default Extension=\"xml\" ContentType=\"application/xml\"/>"
      "<Override PartName=\"/word/document.xml\" ContentType=\"" +
      std::string(kDocumentType) +
      "\"/>"
      "<Override PartName=\"/word/styles.xml\" ContentType=\"" +
      std::string(kStylesType) + "\"/>";
  if (with_comments) {
    out += "<Override PartName=\"/word/comments.xml\" ContentType=\"" +
           std::string(kCommentsType) + "\"/>";
  }
  out += "</Types>\n";
  return out;
}

std::string package_rels_part() {
  return std::string(kXmlDecl) + "<Relationships xmlns=\"" +
         std::string(kPackageRelsNs) +
         "\"><Relationship Id=\"rId1\" Type=\"" + std::string(kRelBase) +
         "/officeDocument\" Target=\"word/document.xml\"/></Relationships>\n";
}

std::string document_rels_part(bool with_comments) {
  std::string out = std::string(kXmlDecl) + "<Relationships xmlns=\"" +
                    std::string(kPackageRelsNs) +
                    "\"><Relationship Id=\"rId1\" Type=\"" +
                    std::string(kRelBase) +
                    "/styles\" Target=\"styles.xml\"/>";
  if (with_comments) {
    out += "<Relationship Id=\"rId2\" Type=\"" + std::string(kRelBase) +
           "/comments\" Target=\"comments.xml\"/>";
  }
  out += "</Relationships>\n";
  return out;
}

// --- reading --------------------------------------------------------------

using Attributes = const XML_Char**;

struct QName {
  std::string_view ns;
  std::string_view local;
};

QName split_name(const XML_Char* name) {
  const std::string_view s(name);
  const auto bar = s.find(kNsSeparator);
  if (bar == std::string_view::npos) return {{}, s};
  return {s.substr(0, bar), s.substr(bar + 1)};
}

bool is_word(std::string_view ns) { return ns == kWordNs || ns == kStrictWordNs; }

// Value of a w:-namespaced attribute, or a plain one when `plain` is set.
std::optional<std::string> attribute(Attributes attrs, std::string_view local,
                                     bool plain = false) {
  for (int i = 0; attrs[i]; i += 2) {
    const QName q = split_name(attrs[i]);
    if (q.local != local) continue;
    if (plain ? q.ns.empty() : is_word(q.ns)) return std::string(attrs[i + 1]);
  }
  return std::nullopt;
}

bool on_off(Attributes attrs) {
  const auto v = attribute(attrs, "val");
  return !v || !(*v == "0" || *v == "false" || *v == "off");
}

class XmlHandler {
 public:
  virtual ~XmlHandler() = default;
  virtual void start(QName name, Attributes attrs) = 0;
  virtual void end(QName name) = 0;
  virtual void text(std::string_view) {}
};

void on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  static_cast<XmlHandler*>(data)->start(split_name(name), attrs);
}

void on_end(void* data, const XML_Char* name) {
  static_cast<XmlHandler*>(data)->end(split_name(name));
}

void on_text(void* data, const XML_Char* s, int len) {
  static_cast<XmlHandler*>(data)->text(
      std::string_view(s, static_cast<std::size_t>(len)));
}

std::optional<Diagnostic> parse_xml(std::string_view part,
                                    std::string_view data,
                                    XmlHandler& handler) {
  XML_Parser parser = XML_ParserCreateNS("UTF-8", kNsSeparator);
  XML_SetUserData(parser, &handler);
  XML_SetElementHandler(parser, on_start, on_end);
  XML_SetCharacterDataHandler(parser, on_text);
  std::optional<Diagnostic> error;
  if (XML_Parse(parser, data.data(), static_cast<int>(data.size()), 1) ==
      XML_STATUS_ERROR) {
    const int line = static_cast<int>(XML_GetCurrentLineNumber(parser));
    const int column = static_cast<int>(XML_GetCurrentColumnNumber(parser)) + 1;
    error = make_error("E061",
                       "malformed XML in " + std::string(part) + " at " +
                           std::to_string(line) + ":" +
                           std::to_string(column) + ": " +
                           XML_ErrorString(XML_GetErrorCode(parser)),
                       SourceSpan::point(1, 1));
  }
  XML_ParserFree(parser);
  return error;
}

// Relationship type suffix to target.
class RelsHandler : public XmlHandler {
 public:
  std::map<std::string, std::string> targets;

  void start(QName name, Attributes attrs) override {
    if (name.ns != kPackageRelsNs || name.local != "Relationship") return;
    const auto type = attribute(attrs, "Type", true);
    const auto target = attribute(attrs, "Target", true);
    if (!type || !target) return;
    const auto slash = type->rfind('/');
    targets.emplace(type->substr(slash == std::string::npos ? 0 : slash + 1),
                    *target);
  }
  void end(QName) override {}
};

class DocumentHandler : public XmlHandler {
 public:
  DocxDoc doc;
  std::map<std::string, int> comment_anchor;
  std::vector<std::string> unclosed_bookmarks;

  void start(QName name, Attributes attrs) override {
    if (skip_ > 0) {
      ++skip_;
      return;
    }
    if ((name.ns == kCompatNs && name.local == "Fallback") ||
        (is_word(name.ns) &&
         (name.local == "txbxContent" || name.local == "rPrChange" ||
          name.local == "pPrChange"))) {
      skip_ = 1;
      return;
    }
    frames_.push_back(Frame::Other);
    if (!is_word(name.ns)) return;
    const std::string_view l = name.local;
    const Frame parent =
        frames_.size() > 1 ? frames_[frames_.size() - 2] : Frame::Other;

    if (l == "p") {
      frames_.back() = Frame::Paragraph;
      in_paragraph_ = true;
      paragraph_ = Paragraph{};
    } else if (l == "pPr" && in_paragraph_) {
      frames_.back() = Frame::ParagraphProps;
    } else if (parent == Frame::ParagraphProps) {
      if (l == "pStyle") {
        paragraph_.style = style_from_id(attribute(attrs, "val").value_or(""));
      } else if (l == "bidi") {
        paragraph_.bidi = on_off(attrs);
      } else if (l == "rPr") {
        frames_.back() = Frame::MarkProps;
      }
    } else if (parent == Frame::MarkProps) {
      if (l == "ins" || l == "moveTo") paragraph_.mark = Change::Inserted;
      if (l == "del" || l == "moveFrom") paragraph_.mark = Change::Deleted;
    } else if (l == "r") {
      frames_.back() = Frame::Run;
      in_run_ = true;
      run_ = Run{};
      run_.change = changes_.empty() ? Change::None : changes_.back();
      run_.comment_ids = open_comments_;
    } else if (in_run_ && l == "rPr") {
      frames_.back() = Frame::RunProps;
    } else if (parent == Frame::RunProps) {
      if (l == "b") run_.bold = on_off(attrs);
      if (l == "i") run_.italic = on_off(attrs);
      if (l == "rStyle") {
        run_.monospace = attribute(attrs, "val") == std::string(kCodeCharStyle);
      }
    } else if (in_run_ && (l == "t" || l == "delText")) {
      frames_.back() = Frame::Text;
    } else if (in_run_ && l == "tab") {
      run_.text += '\t';
    } else if (in_run_ && (l == "br" || l == "cr")) {
      run_.text += '\n';
    } else if (in_run_ && l == "noBreakHyphen") {
      run_.text += '-';
    } else if (l == "ins" || l == "moveTo" || l == "del" || l == "moveFrom") {
      frames_.back() = Frame::ChangeWrapper;
      changes_.push_back(l == "ins" || l == "moveTo" ? Change::Inserted
                                                     : Change::Deleted);
    } else if (l == "bookmarkStart") {
      const auto id = attribute(attrs, "id");
      const auto bookmark = attribute(attrs, "name");
      if (!id || !bookmark) return;
      if (bookmark->empty() || (*bookmark)[0] == '_') {
        ignored_bookmarks_.insert(*id);
        return;
      }
      open_bookmarks_[*id] = {*bookmark, next_index()};
    } else if (l == "bookmarkEnd") {
      const auto id = attribute(attrs, "id");
      if (!id) return;
      const auto it = open_bookmarks_.find(*id);
      if (it == open_bookmarks_.end()) return;
      const int last = in_paragraph_ ? next_index() : next_index() - 1;
      const auto& [bookmark, first] = it->second;
      if (last >= first) doc.bookmarks.emplace(bookmark, BookmarkRange{first, last});
      open_bookmarks_.erase(it);
    } else if (l == "commentRangeStart") {
      if (const auto id = attribute(attrs, "id")) {
        open_comments_.insert(*id);
        comment_anchor.emplace(*id, next_index());
      }
    } else if (l == "commentRangeEnd") {
      if (const auto id = attribute(attrs, "id")) open_comments_.erase(*id);
    } else if (l == "commentReference") {
      if (const auto id = attribute(attrs, "id")) {
        comment_anchor.emplace(*id, next_index());
      }
    }
  }

  void end(QName) override {
    if (skip_ > 0) {
      --skip_;
      return;
    }
    const Frame f = frames_.back();
    frames_.pop_back();
    switch (f) {
      case Frame::Paragraph:
        doc.paragraphs.push_back(std::move(paragraph_));
        in_paragraph_ = false;
        break;
      case Frame::Run:
        if (in_paragraph_ && !run_.text.empty()) {
          paragraph_.runs.push_back(std::move(run_));
        }
        in_run_ = false;
        break;
      case Frame::ChangeWrapper:
        changes_.pop_back();
        break;
      default:
        break;
    }
  }

  void text(std::string_view s) override {
    if (skip_ == 0 && !frames_.empty() && frames_.back() == Frame::Text) {
      run_.text += s;
    }
  }

  void finish() {
    for (const auto& [id, mark] : open_bookmarks_) {
      unclosed_bookmarks.push_back(mark.first);
    }
  }

 private:
  enum class Frame {
    Other,
    Paragraph,
    ParagraphProps,
    MarkProps,
    Run,
    RunProps,
    Text,
    ChangeWrapper,
  };

  // Index of the paragraph being read, or of the next one between
  // paragraphs.
  int next_index() const { return static_cast<int>(doc.paragraphs.size()); }

  int skip_ = 0;
  std::vector<Frame> frames_;
  bool in_paragraph_ = false;
  bool in_run_ = false;
  Paragraph paragraph_;
  Run run_;
  std::vector<Change> changes_;
  std::set<std::string> open_comments_;
  std::map<std::string, std::pair<std::string, int>> open_bookmarks_;
  std::set<std::string> ignored_bookmarks_;
};

class CommentsHandler : public XmlHandler {
 public:
  std::map<std::string, DocxComment> comments;

  void start(QName name, Attributes attrs) override {
    if (!is_word(name.ns)) return;
    if (name.local == "comment") {
      current_ = attribute(attrs, "id").value_or("");
      comment_ = DocxComment{attribute(attrs, "author").value_or(""), {}, -1};
      paragraphs_ = 0;
    } else if (!current_) {
      return;
    } else if (name.local == "p") {
      if (paragraphs_++ > 0) comment_.body += '\n';
    } else if (name.local == "t") {
      in_text_ = true;
    } else if (name.local == "tab") {
      comment_.body += '\t';
    } else if (name.local == "br" || name.local == "cr") {
      comment_.body += '\n';
    }
  }

  void end(QName name) override {
    if (!is_word(name.ns)) return;
    if (name.local == "t") in_text_ = false;
    if (name.local == "comment" && current_) {
      comments.emplace(*current_, std::move(comment_));
      current_.reset();
    }
  }

  void text(std::string_view s) override {
    if (in_text_) comment_.body += s;
  }

 private:
  std::optional<std::string> current_;
  DocxComment comment_;
  int paragraphs_ = 0;
  bool in_text_ = false;
};

std::string resolve_part(std::string_view base_dir, std::string target) {
  if (!target.empty() && target[0] == '/') return target.substr(1);
  std::string dir(base_dir);
  while (target.rfind("../", 0) == 0) {
    target = target.substr(3);
    if (!dir.empty()) dir.pop_back();
    const auto slash = dir.rfind('/');
    dir = slash == std::string::npos ? "" : dir.substr(0, slash + 1);
  }
  return dir + target;
}

std::map<std::string, std::string> read_rels(
    const std::vector<zip::Entry>& entries, const std::string& name) {
  const zip::Entry* part = zip::find(entries, name);
  if (!part) return {};
  RelsHandler handler;
  if (parse_xml(name, part->data, handler)) return {};
  return handler.targets;
}

}  // namespace

std::string_view style_id(ParagraphStyle style) {
  switch (style) {
    case ParagraphStyle::Normal:
      return "Normal";
    case ParagraphStyle::Heading1:
      return "Heading1";
    case ParagraphStyle::Heading2:
      return "Heading2";
    case ParagraphStyle::Heading3:
      return "Heading3";
    case ParagraphStyle::Heading4:
      return "Heading4";
    case ParagraphStyle::Code:
      return "Code";
  }
  return "Normal";
}

ParagraphStyle style_from_id(std::string_view id) {
  for (const auto s :
       {ParagraphStyle::Heading1, ParagraphStyle::Heading2,
        ParagraphStyle::Heading3, ParagraphStyle::Heading4,
        ParagraphStyle::Code}) {
    if (style_id(s) == id) return s;
  }
  return ParagraphStyle::Normal;
}

std::string Paragraph::text(View view) const {
  const Change hidden = view == View::Original ? Change::Inserted
                                               : Change::Deleted;
  std::string out;
  for (const auto& run : runs) {
    if (run.change != hidden) out += run.text;
  }
  return out;
}

std::string DocxDoc::text(const BookmarkRange& range, View view) const {
  const Change hidden = view == View::Original ? Change::Inserted
                                               : Change::Deleted;
  std::string out;
  for (int p = range.first; p <= range.last; ++p) {
    if (p < 0 || p >= static_cast<int>(paragraphs.size())) continue;
    out += paragraphs[p].text(view);
    if (p < range.last && paragraphs[p].mark != hidden) out += '\n';
  }
  return out;
}

std::string chunk_bookmark(const Chunk& chunk) {
  return (chunk.is_code() ? "chunk-" : "note-") + std::to_string(chunk.id);
}

DocxDoc build_docx(const OntologyDoc& doc, const DocxOptions& options) {
  DocxDoc out;
  const bool rtl = options.direction == Direction::Rtl;
  for (const auto& chunk : doc.chunks) {
    const int first = static_cast<int>(out.paragraphs.size());
    if (chunk.is_code()) {
      for (const auto& line : split_keep_empty(print_chunk(chunk))) {
        Paragraph p;
        p.style = ParagraphStyle::Code;
        add_run(p.runs, line, {});
        out.paragraphs.push_back(std::move(p));
      }
    } else {
      for (const auto& block : parse_markdown(chunk.narrative_text()).blocks) {
        Paragraph p;
        p.bidi = rtl;
        if (block.kind == Block::Kind::Heading) {
          p.style = heading_style(block.level);
        } else if (block.kind == Block::Kind::ListItem) {
          add_run(p.runs, "- ", {});
        }
        flatten(p.runs, block.content, {});
        out.paragraphs.push_back(std::move(p));
      }
      if (static_cast<int>(out.paragraphs.size()) == first) {
        Paragraph p;
        p.bidi = rtl;
        out.paragraphs.push_back(std::move(p));
      }
    }
    out.bookmarks.emplace(
        chunk_bookmark(chunk),
        BookmarkRange{first, static_cast<int>(out.paragraphs.size()) - 1});
  }
  return out;
}

std::string write_docx(const DocxDoc& doc) {
  const bool with_comments = !doc.comments.empty();
  std::vector<zip::Entry> entries{
      {"[Content_Types].xml", content_types_part(with_comments)},
      {"_rels/.rels", package_rels_part()},
      {"word/document.xml", document_part(doc)},
      {"word/styles.xml", styles_part()},
  };
  if (with_comments) {
    entries.push_back({"word/_rels/document.xml.rels", document_rels_part(true)});
    entries.push_back({"word/comments.xml", comments_part(doc)});
  }
  return zip::write(entries);
}

std::string emit_docx(const OntologyDoc& doc, const DocxOptions& options) {
  return write_docx(build_docx(doc, options));
}

Outcome<DocxDoc> read_docx(std::string_view bytes) {
  auto archive = zip::read(bytes);
  if (!archive) return Outcome<DocxDoc>::failure(archive.diagnostics);
  const auto& entries = *archive;

  std::string document_name = "word/document.xml";
  if (const auto rels = read_rels(entries, "_rels/.rels");
      rels.count("officeDocument")) {
    document_name = resolve_part("", rels.at("officeDocument"));
  }
  const zip::Entry* document = zip::find(entries, document_name);
  if (!document) {
    return Outcome<DocxDoc>::failure(make_error(
        "E060", "package has no document part '" + document_name + "'",
        SourceSpan::point(1, 1)));
  }

  DocumentHandler handler;
  if (auto error = parse_xml(document_name, document->data, handler)) {
    return Outcome<DocxDoc>::failure(std::move(*error));
  }
  handler.finish();
  if (!handler.unclosed_bookmarks.empty()) {
    Diagnostics errors;
    for (const auto& name : handler.unclosed_bookmarks) {
      errors.push_back(make_error("E062",
                                  "bookmark '" + name + "' is never closed",
                                  SourceSpan::point(1, 1)));
    }
    return Outcome<DocxDoc>::failure(std::move(errors));
  }
  DocxDoc doc = std::move(handler.doc);

  const auto slash = document_name.rfind('/');
  const std::string dir =
      slash == std::string::npos ? "" : document_name.substr(0, slash + 1);
  std::string comments_name = dir + "comments.xml";
  const std::string rels_name =
      dir + "_rels/" + document_name.substr(dir.size()) + ".rels";
  if (const auto rels = read_rels(entries, rels_name); rels.count("comments")) {
    comments_name = resolve_part(dir, rels.at("comments"));
  }
  if (const zip::Entry* part = zip::find(entries, comments_name)) {
    CommentsHandler comments;
    if (auto error = parse_xml(comments_name, part->data, comments)) {
      return Outcome<DocxDoc>::failure(std::move(*error));
    }
    doc.comments = std::move(comments.comments);
  }
  for (auto& [id, comment] : doc.comments) {
    if (const auto it = handler.comment_anchor.find(id);
        it != handler.comment_anchor.end()) {
      comment.paragraph =
          std::min(it->second, static_cast<int>(doc.paragraphs.size()) - 1);
    }
  }
  // Anchors to comments the package does not define are dropped.
  for (auto& p : doc.paragraphs) {
    for (auto& run : p.runs) {
      std::erase_if(run.comment_ids,
                    [&](const std::string& id) { return !doc.comments.count(id); });
    }
  }
  return Outcome<DocxDoc>::success(std::move(doc));
}

FeedbackReport extract_feedback(const OntologyDoc& source,
                                const DocxDoc& edited) {
  FeedbackReport report;
  const DocxDoc expected = build_docx(source);

  std::set<std::string> known;
  for (const auto& chunk : source.chunks) known.insert(chunk_bookmark(chunk));
  for (const auto& [name, range] : edited.bookmarks) {
    if (!known.count(name)) {
      report.warnings.push_back(make_warning(
          "W020", "bookmark '" + name + "' matches no chunk",
          SourceSpan::point(1, 1)));
    }
  }

  // Document position of each comment: its first anchored run, else the
  // paragraph recorded by the reader.
  std::map<std::string, std::pair<int, int>> comment_at;
  for (int p = 0; p < static_cast<int>(edited.paragraphs.size()); ++p) {
    const auto& runs = edited.paragraphs[p].runs;
    for (int r = 0; r < static_cast<int>(runs.size()); ++r) {
      for (const auto& id : runs[r].comment_ids) {
        comment_at.emplace(id, std::pair{p, r});
      }
    }
  }
  for (const auto& [id, c] : edited.comments) {
    if (c.paragraph >= 0) comment_at.emplace(id, std::pair{c.paragraph, -1});
  }
  std::set<std::string> placed;

  for (const auto& chunk : source.chunks) {
    const std::string name = chunk_bookmark(chunk);
    const auto it = edited.bookmarks.find(name);
    if (it == edited.bookmarks.end()) {
      report.warnings.push_back(make_warning(
          "W021",
          "chunk " + std::to_string(chunk.id) + " has no bookmark '" + name +
              "' in the edited document",
          chunk.span));
      continue;
    }
    const BookmarkRange& range = it->second;
    const std::string want =
        expected.text(expected.bookmarks.at(name), View::Revised);
    std::string revised = edited.text(range, View::Revised);
    if (revised != want) {
      FeedbackItem item;
      item.chunk = chunk.id;
      item.span = chunk.span;
      item.kind = FeedbackItem::Kind::Edit;
      item.original = edited.text(range, View::Original);
      item.revised = std::move(revised);
      report.items.push_back(std::move(item));
    }

    std::vector<std::pair<std::pair<int, int>, std::string>> here;
    for (const auto& [id, at] : comment_at) {
      if (!placed.count(id) && edited.comments.count(id) &&
          at.first >= range.first && at.first <= range.last) {
        here.emplace_back(at, id);
      }
    }
    std::sort(here.begin(), here.end());
    for (const auto& [at, id] : here) {
      placed.insert(id);
      const DocxComment& c = edited.comments.at(id);
      FeedbackItem item;
      item.chunk = chunk.id;
      item.span = chunk.span;
      item.kind = FeedbackItem::Kind::Comment;
      item.comment = c.body;
      item.author = c.author;
      report.items.push_back(std::move(item));
    }
  }
  for (const auto& [id, c] : edited.comments) {
    if (!placed.count(id)) {
      report.warnings.push_back(make_warning(
          "W022", "comment " + id + " is not anchored in any chunk",
          SourceSpan::point(1, 1)));
    }
  }
  return report;
}

std::string feedback_json(const FeedbackReport& report,
                          std::string_view source_path) {
  nlohmann::ordered_json j;
  j["source"] = std::string(source_path);
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : report.items) {
    nlohmann::ordered_json o;
    o["chunk"] = item.chunk;
    o["kind"] = item.kind == FeedbackItem::Kind::Edit ? "edit" : "comment";
    o["span"] = {{"sl", item.span.start_line},
                 {"sc", item.span.start_column},
                 {"el", item.span.end_line},
                 {"ec", item.span.end_column}};
    if (item.kind == FeedbackItem::Kind::Edit) {
      o["original"] = item.original;
      o["revised"] = item.revised;
    } else {
      o["comment"] = item.comment;
      o["author"] = item.author;
    }
    j["items"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

}  // namespace ontoweave
