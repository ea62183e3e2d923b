#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "susie/corpus.hpp"

namespace susie {

// Exact integer accumulator for token-length moments. Merging is
// associative and commutative, so any parallel reduction order gives the
// same result.
struct LengthAccumulator {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;

  void add(std::uint64_t value);
  void merge(const LengthAccumulator& other);
  double mean() const;  // 0 when empty
  double population_std() const;
};

struct TypeStats {
  std::uint64_t count = 0;
  double source_mean = 0, source_std = 0;
  double summary_mean = 0, summary_std = 0;
};

struct CorpusStats {
  // keyed by section label ("introduction", ..., "whole")
  std::map<std::string, TypeStats> per_type;
  std::uint64_t article_count = 0;  // distinct pmcids
  std::uint64_t example_count = 0;
  double mean_source_len = 0;
  double mean_summary_len = 0;

  double examples_per_article() const {
    return article_count ? static_cast<double>(example_count) / article_count : 0.0;
  }
};

CorpusStats compute_stats(const std::vector<TrainingExample>& examples);

// Aligned per-type table (counts, source/summary length mean and std,
// 2-decimal rounding).
std::string render_type_table(const CorpusStats& stats);

// Side-by-side corpus totals for the labeled stat groups, e.g. Flat vs
// SUSIE.
std::string render_totals_table(
    const std::vector<std::pair<std::string, CorpusStats>>& columns);

// "key value" lines for machine consumption, one stat per line.
std::string render_stats_kv(const std::string& prefix, const CorpusStats& stats);

}  // namespace susie
