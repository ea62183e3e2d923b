#pragma once

#include <string_view>

#include "susie/article.hpp"

namespace susie {

// Parses one JATS (PMC) XML document into an Article.
//
// Body sections come from the top-level <sec> elements of <body>, with
// nested subsections flattened into their parent (subsection titles are
// ignored). Abstract sections come from the titled <sec> elements of the
// first <abstract>. Inline markup is stripped; figures, tables, math,
// cross references and labels are dropped entirely.
//
// `fallback_id` is used when the document carries no pmc article-id
// (batch callers pass the file stem).
//
// Throws ParseError:
//   MalformedXml         - unparseable XML or no usable article id
//   UnstructuredAbstract - fewer than two titled abstract sections
//   MissingBody          - no body sections survive parsing
Article parse_article(std::string_view xml, std::string_view fallback_id = {});

}  // namespace susie
