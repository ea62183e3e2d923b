#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "susie/corpus.hpp"
#include "susie/pipeline.hpp"

namespace susie {

// All on-disk formats are UTF-8 JSON lines with LF endings. Token lists are
// stored space-joined; splitting on spaces recovers them exactly.
//
//   article store:  {"pmcid","title","abstract":[{"header","type","text"}],"body":[...]}
//   corpus record:  {"pmcid","method","section_type","source","reference"}
//   summary record: {"pmcid","method","parts":[{"section","summary"}]}

void write_article_store(std::ostream& out,
                         const std::vector<StructuredArticle>& articles);
std::vector<StructuredArticle> read_article_store(std::istream& in);
std::vector<StructuredArticle> read_article_store_file(const std::string& path);

std::string corpus_record_line(const TrainingExample& example);
TrainingExample parse_corpus_record(const std::string& line);
std::vector<TrainingExample> read_corpus_file(const std::string& path);

struct SummaryRecord {
  std::string pmcid;
  Method method = Method::Susie;
  std::vector<StructuredSummary::Part> parts;
};

std::string summary_record_line(const SummaryRecord& record);
SummaryRecord parse_summary_record(const std::string& line);
std::vector<SummaryRecord> read_summaries_file(const std::string& path);

}  // namespace susie
