#include "susie/store.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace susie {

namespace {

using json = nlohmann::ordered_json;

json section_to_json(const AnnotatedSection& sec) {
  json j;
  j["header"] = sec.header;
  j["type"] = to_string(sec.type);
  j["text"] = join_tokens(sec.tokens);
  return j;
}

AnnotatedSection section_from_json(const json& j) {
  AnnotatedSection sec;
  sec.header = j.at("header").get<std::string>();
  auto type = section_type_from_string(j.at("type").get<std::string>());
  if (!type) throw std::runtime_error("unknown section type in store");
  sec.type = *type;
  sec.tokens = tokenize(j.at("text").get<std::string>());
  return sec;
}

std::optional<SectionType> label_from_string(const std::string& label) {
  if (label == "whole") return std::nullopt;
  auto type = section_type_from_string(label);
  if (!type) throw std::runtime_error("unknown section label: " + label);
  return type;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return in;
}

}  // namespace

void write_article_store(std::ostream& out,
                         const std::vector<StructuredArticle>& articles) {
  for (const auto& article : articles) {
    json j;
    j["pmcid"] = article.pmcid;
    j["title"] = article.title;
    j["abstract"] = json::array();
    for (const auto& sec : article.abstract)
      j["abstract"].push_back(section_to_json(sec));
    j["body"] = json::array();
    for (const auto& sec : article.body) j["body"].push_back(section_to_json(sec));
    out << j.dump() << "\n";
  }
}

std::vector<StructuredArticle> read_article_store(std::istream& in) {
  std::vector<StructuredArticle> articles;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("store line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    StructuredArticle article;
    article.pmcid = j.at("pmcid").get<std::string>();
    article.title = j.value("title", std::string{});
    for (const auto& sec : j.at("abstract"))
      article.abstract.push_back(section_from_json(sec));
    for (const auto& sec : j.at("body"))
      article.body.push_back(section_from_json(sec));
    articles.push_back(std::move(article));
  }
  return articles;
}

std::vector<StructuredArticle> read_article_store_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_article_store(in);
}

std::string corpus_record_line(const TrainingExample& example) {
  json j;
  j["pmcid"] = example.pmcid;
  j["method"] = to_string(example.method);
  j["section_type"] = section_label(example.section_type);
  j["source"] = join_tokens(example.source_tokens);
  j["reference"] = join_tokens(example.reference_tokens);
  return j.dump();
}

TrainingExample parse_corpus_record(const std::string& line) {
  const auto j = json::parse(line);
  TrainingExample ex;
  ex.pmcid = j.at("pmcid").get<std::string>();
  auto method = method_from_string(j.at("method").get<std::string>());
  if (!method) throw std::runtime_error("unknown method in corpus record");
  ex.method = *method;
  ex.section_type = label_from_string(j.at("section_type").get<std::string>());
  ex.source_tokens = tokenize(j.at("source").get<std::string>());
  ex.reference_tokens = tokenize(j.at("reference").get<std::string>());
  return ex;
}

std::vector<TrainingExample> read_corpus_file(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<TrainingExample> examples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    examples.push_back(parse_corpus_record(line));
  }
  return examples;
}

std::string summary_record_line(const SummaryRecord& record) {
  json j;
  j["pmcid"] = record.pmcid;
  j["method"] = to_string(record.method);
  j["parts"] = json::array();
  for (const auto& part : record.parts) {
    json p;
    p["section"] = section_label(part.section);
    p["summary"] = join_tokens(part.tokens);
    j["parts"].push_back(std::move(p));
  }
  return j.dump();
}

SummaryRecord parse_summary_record(const std::string& line) {
  const auto j = json::parse(line);
  SummaryRecord record;
  record.pmcid = j.at("pmcid").get<std::string>();
  auto method = method_from_string(j.at("method").get<std::string>());
  if (!method) throw std::runtime_error("unknown method in summary record");
  record.method = *method;
  for (const auto& p : j.at("parts")) {
    StructuredSummary::Part part;
    part.section = label_from_string(p.at("section").get<std::string>());
    part.tokens = tokenize(p.at("summary").get<std::string>());
    record.parts.push_back(std::move(part));
  }
  return record;
}

std::vector<SummaryRecord> read_summaries_file(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<SummaryRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(parse_summary_record(line));
  }
  return records;
}

}  // namespace susie
