#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace susie {

// One top-level section of an article body or abstract. Nested subsections
// are folded into their top-level parent at parse time; `paragraphs` holds
// normalized running text in document order.
struct RawSection {
  std::string header;  // may be empty for body sections
  std::vector<std::string> paragraphs;

  bool operator==(const RawSection&) const = default;
};

struct Article {
  std::string pmcid;
  std::string title;
  std::vector<RawSection> abstract_sections;  // >=2, every header non-empty
  std::vector<RawSection> body_sections;

  bool operator==(const Article&) const = default;
};

enum class ParseErrorKind {
  MalformedXml,
  UnstructuredAbstract,  // abstract lacks >=2 titled sections
  MissingBody,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

const char* to_string(ParseErrorKind kind);

}  // namespace susie
