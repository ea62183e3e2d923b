#include "susie/jats.hpp"

#include <expat.h>

#include <array>
#include <cstring>
#include <string>
#include <unordered_set>
#include <vector>

#include "susie/text.hpp"

namespace susie {
namespace {

// Non-prose subtrees that are dropped wholesale: figures, tables, math,
// cross references, labels and binary attachments.
const std::unordered_set<std::string_view>& dropped_elements() {
  static const std::unordered_set<std::string_view> kDropped = {
      "fig",          "fig-group",     "table-wrap", "table-wrap-group",
      "table",        "array",         "disp-formula", "inline-formula",
      "tex-math",     "math",          "xref",         "label",
      "graphic",      "media",         "supplementary-material",
      "object-id",    "alternatives",  "ref-list",     "fn-group",
  };
  return kDropped;
}

std::string_view local_name(const char* qname) {
  std::string_view name(qname);
  if (auto pos = name.rfind(':'); pos != std::string_view::npos)
    name.remove_prefix(pos + 1);
  return name;
}

struct JatsHandler {
  std::vector<std::string> stack;
  int suppress = 0;

  std::string pmcid;
  std::string article_title;
  bool cap_id = false;
  bool cap_article_title = false;
  std::string id_buf;
  std::string article_title_buf;

  enum class Region { None, Abstract, Body };
  Region region = Region::None;
  bool abstract_done = false;
  int sec_depth = 0;
  int para_depth = 0;
  bool cap_sec_title = false;
  std::string sec_title_buf;
  std::string para_buf;
  RawSection current;

  std::vector<RawSection> abstract_secs;
  std::vector<RawSection> body_secs;

  bool path_is(std::initializer_list<std::string_view> ancestors) const {
    if (stack.size() != ancestors.size()) return false;
    std::size_t i = 0;
    for (auto a : ancestors)
      if (stack[i++] != a) return false;
    return true;
  }

  std::string_view parent() const {
    return stack.empty() ? std::string_view{} : std::string_view(stack.back());
  }

  void start(const char* qname, const char** attrs) {
    const auto name = local_name(qname);
    if (suppress > 0) {
      ++suppress;
      return;
    }
    if (dropped_elements().count(name)) {
      suppress = 1;
      return;
    }

    if (name == "sec" && region != Region::None) {
      if (++sec_depth == 1) current = {};
    } else if (name == "title" && region != Region::None && sec_depth == 1 &&
               para_depth == 0 && parent() == "sec") {
      cap_sec_title = true;
      sec_title_buf.clear();
    } else if (name == "p" && region != Region::None && sec_depth >= 1) {
      if (++para_depth == 1) para_buf.clear();
    } else if (name == "article-id" &&
               path_is({"article", "front", "article-meta"})) {
      for (const char** a = attrs; a && *a; a += 2) {
        std::string_view key(a[0]), val(a[1]);
        if (key == "pub-id-type" &&
            (val == "pmc" || val == "pmcid" || val == "pmc-uid")) {
          cap_id = true;
          id_buf.clear();
        }
      }
    } else if (name == "article-title" &&
               path_is({"article", "front", "article-meta", "title-group"})) {
      cap_article_title = true;
      article_title_buf.clear();
    } else if (name == "abstract" && !abstract_done &&
               path_is({"article", "front", "article-meta"})) {
      region = Region::Abstract;
      sec_depth = 0;
      para_depth = 0;
    } else if (name == "body" && path_is({"article"})) {
      region = Region::Body;
      sec_depth = 0;
      para_depth = 0;
    }
    stack.emplace_back(name);
  }

  void chars(const char* s, int len) {
    if (suppress > 0) return;
    if (cap_id)
      id_buf.append(s, len);
    else if (cap_article_title)
      article_title_buf.append(s, len);
    else if (cap_sec_title)
      sec_title_buf.append(s, len);
    else if (para_depth > 0)
      para_buf.append(s, len);
  }

  void end(const char* qname) {
    if (suppress > 0) {
      --suppress;
      return;
    }
    const auto name = local_name(qname);
    stack.pop_back();

    if (name == "article-id" && cap_id) {
      cap_id = false;
      if (pmcid.empty()) pmcid = normalize_whitespace(id_buf);
    } else if (name == "article-title" && cap_article_title) {
      cap_article_title = false;
      article_title = normalize_whitespace(article_title_buf);
    } else if (name == "title" && cap_sec_title) {
      cap_sec_title = false;
      current.header = normalize_whitespace(sec_title_buf);
    } else if (name == "p" && para_depth > 0) {
      if (--para_depth == 0) {
        auto text = normalize_whitespace(para_buf);
        if (!text.empty()) current.paragraphs.push_back(std::move(text));
      }
    } else if (name == "sec" && region != Region::None && sec_depth > 0) {
      if (sec_depth == 1) {
        const bool keep = !current.paragraphs.empty() &&
                          (region == Region::Body || !current.header.empty());
        if (keep) {
          auto& out =
              region == Region::Abstract ? abstract_secs : body_secs;
          out.push_back(std::move(current));
        }
        current = {};
      }
      --sec_depth;
    } else if (name == "abstract" && region == Region::Abstract) {
      region = Region::None;
      abstract_done = true;
    } else if (name == "body" && region == Region::Body) {
      region = Region::None;
    }
  }
};

extern "C" {
void start_cb(void* ud, const XML_Char* name, const XML_Char** attrs) {
  static_cast<JatsHandler*>(ud)->start(name, attrs);
}
void end_cb(void* ud, const XML_Char* name) {
  static_cast<JatsHandler*>(ud)->end(name);
}
void chars_cb(void* ud, const XML_Char* s, int len) {
  static_cast<JatsHandler*>(ud)->chars(s, len);
}
}

}  // namespace

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedXml: return "malformed-xml";
    case ParseErrorKind::UnstructuredAbstract: return "unstructured-abstract";
    case ParseErrorKind::MissingBody: return "missing-body";
  }
  return "unknown";
}

Article parse_article(std::string_view xml, std::string_view fallback_id) {
  JatsHandler handler;
  XML_Parser parser = XML_ParserCreate(nullptr);
  if (!parser) throw ParseError(ParseErrorKind::MalformedXml, "parser alloc failed");

  XML_SetUserData(parser, &handler);
  XML_SetElementHandler(parser, start_cb, end_cb);
  XML_SetCharacterDataHandler(parser, chars_cb);

  const auto status =
      XML_Parse(parser, xml.data(), static_cast<int>(xml.size()), /*isFinal=*/1);
  if (status != XML_STATUS_OK) {
    std::string msg = XML_ErrorString(XML_GetErrorCode(parser));
    msg += " at line " + std::to_string(XML_GetCurrentLineNumber(parser));
    XML_ParserFree(parser);
    throw ParseError(ParseErrorKind::MalformedXml, msg);
  }
  XML_ParserFree(parser);

  Article article;
  article.pmcid = handler.pmcid.empty() ? std::string(fallback_id) : handler.pmcid;
  if (article.pmcid.empty())
    throw ParseError(ParseErrorKind::MalformedXml, "no pmc article-id");
  article.title = handler.article_title;
  article.abstract_sections = std::move(handler.abstract_secs);
  article.body_sections = std::move(handler.body_secs);

  if (article.abstract_sections.size() < 2)
    throw ParseError(ParseErrorKind::UnstructuredAbstract,
                     "abstract has fewer than two titled sections");
  if (article.body_sections.empty())
    throw ParseError(ParseErrorKind::MissingBody, "no body sections");
  return article;
}

}  // namespace susie
