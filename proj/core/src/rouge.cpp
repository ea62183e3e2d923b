#include "susie/rouge.hpp"

#include <algorithm>
#include <unordered_map>

namespace susie {

RougeScore make_rouge_score(double precision, double recall) {
  RougeScore s;
  s.precision = precision;
  s.recall = recall;
  if (precision + recall > 0)
    s.f1 = 2 * precision * recall / (precision + recall);
  return s;
}

namespace {

// n-grams as joined strings; '\x1f' cannot occur inside a token.
std::unordered_map<std::string, int> ngram_counts(const TokenList& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (int k = 1; k < n; ++k) {
      gram.push_back('\x1f');
      gram += tokens[i + k];
    }
    ++counts[gram];
  }
  return counts;
}

}  // namespace

RougeScore rouge_n(const TokenList& candidate, const TokenList& reference, int n) {
  const auto cand = normalize_tokens(candidate);
  const auto ref = normalize_tokens(reference);
  const auto cand_grams = ngram_counts(cand, n);
  const auto ref_grams = ngram_counts(ref, n);

  std::size_t cand_total = 0, ref_total = 0, matched = 0;
  for (const auto& [gram, count] : cand_grams) cand_total += count;
  for (const auto& [gram, count] : ref_grams) ref_total += count;
  for (const auto& [gram, count] : cand_grams) {
    auto it = ref_grams.find(gram);
    if (it != ref_grams.end()) matched += std::min(count, it->second);
  }

  const double p = cand_total ? static_cast<double>(matched) / cand_total : 0.0;
  const double r = ref_total ? static_cast<double>(matched) / ref_total : 0.0;
  return make_rouge_score(p, r);
}

std::size_t lcs_length(const TokenList& a, const TokenList& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1])
        curr[j] = prev[j - 1] + 1;
      else
        curr[j] = std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

RougeScore rouge_l(const TokenList& candidate, const TokenList& reference) {
  const auto cand = normalize_tokens(candidate);
  const auto ref = normalize_tokens(reference);
  const auto lcs = lcs_length(cand, ref);
  const double p = cand.empty() ? 0.0 : static_cast<double>(lcs) / cand.size();
  const double r = ref.empty() ? 0.0 : static_cast<double>(lcs) / ref.size();
  return make_rouge_score(p, r);
}

EvalReport evaluate_corpus(const std::vector<ScoredPair>& pairs) {
  EvalReport report;
  double sum1 = 0, sum2 = 0, sumL = 0;
  std::size_t scored = 0, skipped = 0;
  for (const auto& pair : pairs) {
    if (normalize_tokens(pair.reference).empty()) {
      ++skipped;
      continue;
    }
    sum1 += rouge_n(pair.candidate, pair.reference, 1).f1;
    sum2 += rouge_n(pair.candidate, pair.reference, 2).f1;
    sumL += rouge_l(pair.candidate, pair.reference).f1;
    ++scored;
  }
  auto fill = [&](MetricSummary& m, double sum) {
    m.scored = scored;
    m.skipped = skipped;
    m.mean_f1 = scored ? sum / scored : 0.0;
  };
  fill(report.rouge1, sum1);
  fill(report.rouge2, sum2);
  fill(report.rougeL, sumL);
  return report;
}

}  // namespace susie
