#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace susie {

struct SplitRatios {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;

  void validate() const;  // ratios non-negative and summing to 1
};

struct CorpusSplit {
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;
};

// Stable 64-bit hash of (id, seed); identical across runs and platforms.
std::uint64_t split_hash(std::string_view id, std::uint64_t seed);

// Assigns each id to train/validation/test by hashing (id, seed) into
// [0,1) and comparing against the cumulative ratios. The three sets
// partition the input; order within each set follows the input order.
CorpusSplit split_corpus(const std::vector<std::string>& pmcids,
                         const SplitRatios& ratios, std::uint64_t seed);

}  // namespace susie
