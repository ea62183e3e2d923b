#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "susie/corpus.hpp"
#include "susie/rouge.hpp"
#include "susie/summarize.hpp"

namespace susie {

// A per-article summary: one part per summarized unit, in selected_types
// order (flat summaries have a single whole-article part).
struct StructuredSummary {
  std::string pmcid;
  struct Part {
    std::optional<SectionType> section;  // nullopt == whole
    TokenList tokens;
  };
  std::vector<Part> parts;
  std::size_t failed_parts = 0;

  TokenList flattened_tokens() const;
};

// Plain-text rendering with bold-marker section headers:
//   **Methods** we searched ...
// Whole-article parts are rendered without a header. Labels never enter
// scored token sequences.
std::string render_summary_text(const StructuredSummary& summary);

// Summarizes each qualifying selected section separately (body presence is
// enough; no abstract counterpart is required at inference). Inputs are cut
// to susie_source_budget, each request gets cfg.output_budget. A backend
// failure on one section leaves an empty part and is counted in
// failed_parts rather than aborting the article.
StructuredSummary summarize_susie(const StructuredArticle& article, Summarizer& s,
                                  const BuildConfig& cfg);

// Builds the flat source (per-type cut of floor(L/n), concatenated in
// selected_types order) and requests one summary. nullopt when no selected
// type is present in the body (empty yield). Backend errors propagate.
std::optional<StructuredSummary> summarize_flat(const StructuredArticle& article,
                                                Summarizer& s,
                                                const BuildConfig& cfg);

// Evaluation reference: the article's selected-type abstract sections
// concatenated in selected_types order. Identical for both methods.
TokenList evaluation_reference(const StructuredArticle& article,
                               const BuildConfig& cfg);

// A named way to obtain per-worker summarizer handles.
struct BackendSpec {
  std::string name;
  std::function<std::unique_ptr<Summarizer>()> make;
};

struct ComparisonCell {
  MetricSummary rouge1, rouge2, rougeL;
  std::size_t failed_articles = 0;
};

struct ComparisonReport {
  struct Row {
    std::string backend;
    ComparisonCell flat;
    ComparisonCell susie;
  };
  std::vector<Row> rows;
};

// Runs every backend with both methods over the corpus and scores the
// flattened summaries against the shared per-article reference with
// ROUGE-1/2/L F1. Per-article failures are excluded and counted.
ComparisonReport compare_methods(const std::vector<StructuredArticle>& corpus,
                                 const std::vector<BackendSpec>& backends,
                                 const BuildConfig& cfg, unsigned workers = 1,
                                 const std::atomic<bool>* stop = nullptr);

// Table-3-shaped grid; the best method per backend and metric carries
// ** markers. 4-decimal scores.
std::string render_comparison(const ComparisonReport& report);

}  // namespace susie
