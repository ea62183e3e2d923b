#pragma once

#include <cstddef>
#include <vector>

#include "susie/text.hpp"

namespace susie {

struct RougeScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

RougeScore make_rouge_score(double precision, double recall);

// Clipped n-gram overlap, n in {1,2}. Tokens are normalized (lowercased,
// outer punctuation stripped, empties removed) before counting. Zero
// denominators score 0.
RougeScore rouge_n(const TokenList& candidate, const TokenList& reference, int n);

// Longest-common-subsequence overlap with the same normalization. The LCS
// length is computed by the exact dynamic program.
RougeScore rouge_l(const TokenList& candidate, const TokenList& reference);

// LCS length of two already-normalized sequences. Exposed for scoring
// loops that normalize once.
std::size_t lcs_length(const TokenList& a, const TokenList& b);

struct MetricSummary {
  double mean_f1 = 0;
  std::size_t scored = 0;
  std::size_t skipped = 0;  // pairs whose reference normalized to nothing
};

struct EvalReport {
  MetricSummary rouge1;
  MetricSummary rouge2;
  MetricSummary rougeL;
};

struct ScoredPair {
  TokenList candidate;
  TokenList reference;
};

// Mean F1 per metric over the pairs. Pairs whose reference is empty after
// normalization are skipped and counted.
EvalReport evaluate_corpus(const std::vector<ScoredPair>& pairs);

}  // namespace susie
