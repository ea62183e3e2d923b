#include "susie/summarize.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "susie/rouge.hpp"

namespace susie {

std::vector<SentenceSpan> split_sentences(const TokenList& tokens) {
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    const char last = tok.empty() ? '\0' : tok.back();
    if (last == '.' || last == '!' || last == '?') {
      spans.push_back({start, i + 1});
      start = i + 1;
    }
  }
  if (start < tokens.size()) spans.push_back({start, tokens.size()});
  return spans;
}

SummarizeResponse lead_summarize(const SummarizeRequest& req) {
  SummarizeResponse resp;
  resp.id = req.id;
  resp.summary_tokens = truncate_tokens(req.source_tokens, req.max_output_tokens);
  return resp;
}

namespace {

TokenList gather_sentences(const TokenList& tokens,
                           const std::vector<SentenceSpan>& spans,
                           const std::vector<std::size_t>& picked) {
  TokenList out;
  for (auto idx : picked) {
    const auto& span = spans[idx];
    out.insert(out.end(), tokens.begin() + span.start, tokens.begin() + span.end);
  }
  return out;
}

}  // namespace

SummarizeResponse freq_extractive_summarize(
    const SummarizeRequest& req, const std::unordered_set<std::string>& stoplist) {
  const auto& tokens = req.source_tokens;
  const auto spans = split_sentences(tokens);

  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& tok : normalize_tokens(tokens))
    if (!stoplist.count(tok)) ++freq[tok];

  std::vector<double> score(spans.size(), 0.0);
  for (std::size_t s = 0; s < spans.size(); ++s) {
    double sum = 0;
    std::size_t content = 0;
    for (std::size_t i = spans[s].start; i < spans[s].end; ++i) {
      auto core = strip_outer_punct(tokens[i]);
      if (core.empty()) continue;
      auto norm = to_lower_ascii(core);
      if (stoplist.count(norm)) continue;
      sum += static_cast<double>(freq[norm]);
      ++content;
    }
    if (content) score[s] = sum / static_cast<double>(content);
  }

  std::vector<std::size_t> order(spans.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score[a] > score[b];  // stable keeps earlier sentences first on ties
  });

  std::vector<std::size_t> picked;
  std::size_t used = 0;
  for (auto idx : order) {
    const std::size_t len = spans[idx].end - spans[idx].start;
    if (used + len > req.max_output_tokens) break;
    picked.push_back(idx);
    used += len;
  }
  std::sort(picked.begin(), picked.end());

  return {req.id, gather_sentences(tokens, spans, picked)};
}

TokenList oracle_extractive_summarize(const TokenList& source_tokens,
                                      const TokenList& reference_tokens,
                                      std::size_t budget) {
  if (normalize_tokens(reference_tokens).empty()) return {};
  const auto spans = split_sentences(source_tokens);

  std::vector<bool> selected(spans.size(), false);
  std::vector<std::size_t> picked;
  std::size_t used = 0;
  double best_f1 = 0.0;

  for (;;) {
    double step_best = best_f1;
    std::size_t step_idx = spans.size();
    for (std::size_t s = 0; s < spans.size(); ++s) {
      if (selected[s]) continue;
      const std::size_t len = spans[s].end - spans[s].start;
      if (used + len > budget) continue;
      auto trial = picked;
      trial.push_back(s);
      std::sort(trial.begin(), trial.end());
      const auto summary = gather_sentences(source_tokens, spans, trial);
      const double f1 = rouge_n(summary, reference_tokens, 1).f1;
      if (f1 > step_best) {
        step_best = f1;
        step_idx = s;
      }
    }
    if (step_idx == spans.size()) break;
    selected[step_idx] = true;
    picked.push_back(step_idx);
    std::sort(picked.begin(), picked.end());
    used += spans[step_idx].end - spans[step_idx].start;
    best_f1 = step_best;
  }

  return gather_sentences(source_tokens, spans, picked);
}

}  // namespace susie
