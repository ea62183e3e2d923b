#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "susie/article.hpp"
#include "susie/section_type.hpp"
#include "susie/text.hpp"

namespace susie {

// Ordered (type, keywords) rows. Row order is the tie-break: when a header
// matches keywords of several types, the earliest row wins. Keywords are
// lowercase single tokens; no keyword may appear under two types.
class KeywordTable {
 public:
  struct Row {
    SectionType type;
    std::vector<std::string> keywords;
  };

  // The default table:
  //   introduction: introduction, case
  //   literature:   background, literature, related
  //   methods:      methods, method, techniques, methodology
  //   results:      result, results, experimental, experiments, experiment
  //   discussion:   discussion, limitations
  //   conclusion:   conclusion, conclusions, concluding
  static KeywordTable defaults();

  // Loads a table from a config stream, one line per type:
  //   methods: methods, method, techniques
  // Blank lines and '#' comments are skipped. Throws std::runtime_error on
  // unknown type names, duplicate types/keywords or multi-token keywords.
  static KeywordTable load(std::istream& in);
  static KeywordTable load_file(const std::string& path);

  explicit KeywordTable(std::vector<Row> rows);

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Row> rows_;
};

struct AnnotatedSection {
  SectionType type = SectionType::Other;
  std::string header;
  TokenList tokens;  // all paragraphs, tokenized and concatenated in order

  bool operator==(const AnnotatedSection&) const = default;
};

struct StructuredArticle {
  std::string pmcid;
  std::string title;
  std::vector<AnnotatedSection> abstract;
  std::vector<AnnotatedSection> body;

  bool operator==(const StructuredArticle&) const = default;
};

// Lowercases the header, tokenizes it, strips outer punctuation from each
// token and returns the first table row with any keyword equal to any
// header token. Other when nothing matches.
SectionType annotate_header(std::string_view header, const KeywordTable& table);

StructuredArticle annotate_article(const Article& article,
                                   const KeywordTable& table);

}  // namespace susie
