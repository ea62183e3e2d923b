#include "susie/split.hpp"

#include <cmath>
#include <stdexcept>

namespace susie {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

void SplitRatios::validate() const {
  if (train < 0 || validation < 0 || test < 0)
    throw std::invalid_argument("split ratios must be non-negative");
  if (std::abs(train + validation + test - 1.0) > 1e-9)
    throw std::invalid_argument("split ratios must sum to 1");
}

std::uint64_t split_hash(std::string_view id, std::uint64_t seed) {
  return splitmix64(fnv1a64(id) ^ splitmix64(seed));
}

CorpusSplit split_corpus(const std::vector<std::string>& pmcids,
                         const SplitRatios& ratios, std::uint64_t seed) {
  ratios.validate();
  CorpusSplit split;
  // 2^64 as double; u is in [0,1)
  constexpr double kScale = 18446744073709551616.0;
  for (const auto& id : pmcids) {
    const double u = static_cast<double>(split_hash(id, seed)) / kScale;
    if (u < ratios.train)
      split.train.push_back(id);
    else if (u < ratios.train + ratios.validation)
      split.validation.push_back(id);
    else
      split.test.push_back(id);
  }
  return split;
}

}  // namespace susie
