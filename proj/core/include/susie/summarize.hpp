#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "susie/text.hpp"

namespace susie {

struct SummarizeRequest {
  std::string id;  // unique within a session
  TokenList source_tokens;
  std::size_t max_output_tokens = 120;
  // Filled by evaluation-time pipelines for reference-aware baselines
  // (the greedy oracle). Never sent over the external wire.
  TokenList reference_tokens;
};

struct SummarizeResponse {
  std::string id;  // echoes the request
  TokenList summary_tokens;
};

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  virtual std::string name() const = 0;
  virtual SummarizeResponse summarize(const SummarizeRequest& req) = 0;
};

// Half-open [start,end) token index ranges; the spans partition the source.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

// A sentence ends at a token whose last character is '.', '!' or '?'.
// Trailing tokens without terminal punctuation form a final sentence.
std::vector<SentenceSpan> split_sentences(const TokenList& tokens);

// First max_output_tokens tokens of the source.
SummarizeResponse lead_summarize(const SummarizeRequest& req);

// Scores each sentence by the mean source-corpus frequency of its
// normalized content tokens, then takes sentences greedily from the top
// (ties to the earlier sentence) until the next pick would exceed the
// budget. Selected sentences keep their original order.
SummarizeResponse freq_extractive_summarize(
    const SummarizeRequest& req,
    const std::unordered_set<std::string>& stoplist = {});

// Greedily grows a sentence subset maximizing ROUGE-1 F1 against the
// reference; stops when no in-budget sentence improves F1. Empty reference
// gives an empty summary.
TokenList oracle_extractive_summarize(const TokenList& source_tokens,
                                      const TokenList& reference_tokens,
                                      std::size_t budget);

class LeadSummarizer final : public Summarizer {
 public:
  std::string name() const override { return "lead"; }
  SummarizeResponse summarize(const SummarizeRequest& req) override {
    return lead_summarize(req);
  }
};

class FreqExtractiveSummarizer final : public Summarizer {
 public:
  explicit FreqExtractiveSummarizer(std::unordered_set<std::string> stoplist = {})
      : stoplist_(std::move(stoplist)) {}
  std::string name() const override { return "freq"; }
  SummarizeResponse summarize(const SummarizeRequest& req) override {
    return freq_extractive_summarize(req, stoplist_);
  }

 private:
  std::unordered_set<std::string> stoplist_;
};

class OracleExtractiveSummarizer final : public Summarizer {
 public:
  std::string name() const override { return "oracle"; }
  SummarizeResponse summarize(const SummarizeRequest& req) override {
    return {req.id, oracle_extractive_summarize(req.source_tokens,
                                                req.reference_tokens,
                                                req.max_output_tokens)};
  }
};

}  // namespace susie
