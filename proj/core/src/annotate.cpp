#include "susie/annotate.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace susie {

namespace {

std::string_view type_names[] = {"introduction", "literature", "methods",
                                 "results",      "discussion", "conclusion",
                                 "other"};
std::string_view display_names[] = {"Introduction", "Literature", "Methods",
                                    "Results",      "Discussion", "Conclusion",
                                    "Other"};

void validate_rows(const std::vector<KeywordTable::Row>& rows) {
  std::unordered_set<std::string> seen_kw;
  std::unordered_set<int> seen_type;
  for (const auto& row : rows) {
    if (row.type == SectionType::Other)
      throw std::runtime_error("keyword table: 'other' cannot carry keywords");
    if (!seen_type.insert(static_cast<int>(row.type)).second)
      throw std::runtime_error(
          std::string("keyword table: duplicate type '") +
          std::string(to_string(row.type)) + "'");
    for (const auto& kw : row.keywords) {
      if (kw.empty() || tokenize(kw).size() != 1)
        throw std::runtime_error("keyword table: keyword must be a single token: '" +
                                 kw + "'");
      if (kw != to_lower_ascii(kw))
        throw std::runtime_error("keyword table: keyword must be lowercase: '" + kw +
                                 "'");
      if (!seen_kw.insert(kw).second)
        throw std::runtime_error("keyword table: keyword under two types: '" + kw +
                                 "'");
    }
  }
}

}  // namespace

std::string_view to_string(SectionType type) {
  return type_names[static_cast<int>(type)];
}

std::string_view display_name(SectionType type) {
  return display_names[static_cast<int>(type)];
}

std::optional<SectionType> section_type_from_string(std::string_view name) {
  for (int i = 0; i < kSectionTypeCount; ++i)
    if (name == type_names[i]) return static_cast<SectionType>(i);
  if (name == "intro") return SectionType::Introduction;
  if (name == "conclusions") return SectionType::Conclusion;
  if (name == "method") return SectionType::Methods;
  if (name == "result") return SectionType::Results;
  return std::nullopt;
}

KeywordTable::KeywordTable(std::vector<Row> rows) : rows_(std::move(rows)) {
  validate_rows(rows_);
}

KeywordTable KeywordTable::defaults() {
  return KeywordTable({
      {SectionType::Introduction, {"introduction", "case"}},
      {SectionType::Literature, {"background", "literature", "related"}},
      {SectionType::Methods, {"methods", "method", "techniques", "methodology"}},
      {SectionType::Results,
       {"result", "results", "experimental", "experiments", "experiment"}},
      {SectionType::Discussion, {"discussion", "limitations"}},
      {SectionType::Conclusion, {"conclusion", "conclusions", "concluding"}},
  });
}

KeywordTable KeywordTable::load(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto text = normalize_whitespace(line);
    if (text.empty() || text[0] == '#') continue;
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("keyword table line " + std::to_string(lineno) +
                               ": expected 'type: kw1, kw2, ...'");
    auto type_name = normalize_whitespace(text.substr(0, colon));
    auto type = section_type_from_string(to_lower_ascii(type_name));
    if (!type || *type == SectionType::Other)
      throw std::runtime_error("keyword table line " + std::to_string(lineno) +
                               ": unknown type '" + type_name + "'");
    Row row{*type, {}};
    std::stringstream kws(text.substr(colon + 1));
    std::string kw;
    while (std::getline(kws, kw, ',')) {
      auto cleaned = to_lower_ascii(normalize_whitespace(kw));
      if (!cleaned.empty()) row.keywords.push_back(cleaned);
    }
    if (row.keywords.empty())
      throw std::runtime_error("keyword table line " + std::to_string(lineno) +
                               ": no keywords");
    rows.push_back(std::move(row));
  }
  return KeywordTable(std::move(rows));
}

KeywordTable KeywordTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open keyword table: " + path);
  return load(in);
}

SectionType annotate_header(std::string_view header, const KeywordTable& table) {
  const auto header_tokens = normalize_tokens(tokenize(to_lower_ascii(header)));
  for (const auto& row : table.rows())
    for (const auto& kw : row.keywords)
      for (const auto& tok : header_tokens)
        if (tok == kw) return row.type;
  return SectionType::Other;
}

namespace {

AnnotatedSection annotate_section(const RawSection& sec, const KeywordTable& table) {
  AnnotatedSection out;
  out.type = annotate_header(sec.header, table);
  out.header = sec.header;
  for (const auto& para : sec.paragraphs) {
    auto toks = tokenize(para);
    out.tokens.insert(out.tokens.end(), std::make_move_iterator(toks.begin()),
                      std::make_move_iterator(toks.end()));
  }
  return out;
}

}  // namespace

StructuredArticle annotate_article(const Article& article,
                                   const KeywordTable& table) {
  StructuredArticle out;
  out.pmcid = article.pmcid;
  out.title = article.title;
  out.abstract.reserve(article.abstract_sections.size());
  out.body.reserve(article.body_sections.size());
  for (const auto& sec : article.abstract_sections)
    out.abstract.push_back(annotate_section(sec, table));
  for (const auto& sec : article.body_sections)
    out.body.push_back(annotate_section(sec, table));
  return out;
}

}  // namespace susie
