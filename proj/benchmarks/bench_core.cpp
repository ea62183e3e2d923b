#include <benchmark/benchmark.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "susie/annotate.hpp"
#include "susie/corpus.hpp"
#include "susie/rouge.hpp"
#include "susie/split.hpp"
#include "susie/summarize.hpp"
#include "susie/text.hpp"

namespace {

using susie::TokenList;

// Deterministic pseudo-prose: words drawn from a small vocabulary with a
// sentence terminal roughly every twelfth token.
TokenList make_tokens(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> word(0, 299);
  TokenList out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string tok = "w" + std::to_string(word(rng));
    if (i % 12 == 11) tok.push_back('.');
    out.push_back(std::move(tok));
  }
  return out;
}

std::string make_text(std::size_t words, std::uint32_t seed) {
  const TokenList toks = make_tokens(words, seed);
  return susie::join_tokens(toks);
}

susie::StructuredArticle make_article() {
  using susie::SectionType;
  susie::StructuredArticle art;
  art.pmcid = "PMC0000001";
  const SectionType types[] = {
      SectionType::Introduction, SectionType::Methods, SectionType::Results,
      SectionType::Discussion, SectionType::Conclusion};
  std::uint32_t seed = 7;
  for (SectionType t : types) {
    susie::AnnotatedSection body;
    body.type = t;
    body.header = "Section";
    body.tokens = make_tokens(600, seed++);
    art.body.push_back(std::move(body));

    susie::AnnotatedSection ab;
    ab.type = t;
    ab.header = "Section";
    ab.tokens = make_tokens(80, seed++);
    art.abstract.push_back(std::move(ab));
  }
  return art;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text = make_text(2000, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::tokenize(text));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}

void BM_NormalizeTokens(benchmark::State& state) {
  const TokenList toks = make_tokens(500, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::normalize_tokens(toks));
  }
}

void BM_SplitSentences(benchmark::State& state) {
  const TokenList toks = make_tokens(600, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::split_sentences(toks));
  }
}

void BM_Rouge1(benchmark::State& state) {
  const TokenList cand = make_tokens(120, 4);
  const TokenList ref = make_tokens(120, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::rouge_n(cand, ref, 1));
  }
}

void BM_Rouge2(benchmark::State& state) {
  const TokenList cand = make_tokens(120, 4);
  const TokenList ref = make_tokens(120, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::rouge_n(cand, ref, 2));
  }
}

void BM_RougeL(benchmark::State& state) {
  const TokenList cand = make_tokens(static_cast<std::size_t>(state.range(0)), 4);
  const TokenList ref = make_tokens(120, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::rouge_l(cand, ref));
  }
}

void BM_LcsLength(benchmark::State& state) {
  const TokenList a = make_tokens(500, 6);
  const TokenList b = make_tokens(500, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::lcs_length(a, b));
  }
}

void BM_AnnotateHeader(benchmark::State& state) {
  const auto table = susie::KeywordTable::defaults();
  const char* headers[] = {
      "Introduction", "MATERIALS AND METHODS", "Results and Discussion",
      "2. Statistical analysis", "Patient outcomes at follow-up",
      "Concluding remarks"};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        susie::annotate_header(headers[i % 6], table));
    ++i;
  }
}

void BM_BuildSusie(benchmark::State& state) {
  const auto art = make_article();
  const susie::BuildConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::build_susie_examples(art, cfg));
  }
}

void BM_BuildFlat(benchmark::State& state) {
  const auto art = make_article();
  const susie::BuildConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::build_flat_example(art, cfg));
  }
}

void BM_FreqSummarize(benchmark::State& state) {
  susie::SummarizeRequest req;
  req.id = "bench";
  req.source_tokens = make_tokens(600, 8);
  req.max_output_tokens = 120;
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::freq_extractive_summarize(req));
  }
}

void BM_OracleSummarize(benchmark::State& state) {
  const TokenList source = make_tokens(600, 9);
  const TokenList ref = make_tokens(120, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::oracle_extractive_summarize(source, ref, 120));
  }
}

void BM_SplitHash(benchmark::State& state) {
  std::uint64_t i = 0;
  char id[32];
  for (auto _ : state) {
    std::snprintf(id, sizeof id, "PMC%07llu",
                  static_cast<unsigned long long>(i++ % 10000000));
    benchmark::DoNotOptimize(susie::split_hash(id, 42));
  }
}

void BM_SplitCorpus(benchmark::State& state) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(state.range(0)));
  for (int64_t i = 0; i < state.range(0); ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "PMC%07lld", static_cast<long long>(i));
    ids.emplace_back(id);
  }
  const susie::SplitRatios ratios{0.8, 0.1, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(susie::split_corpus(ids, ratios, 0));
  }
}

}  // namespace

BENCHMARK(BM_Tokenize);
BENCHMARK(BM_NormalizeTokens);
BENCHMARK(BM_SplitSentences);
BENCHMARK(BM_Rouge1);
BENCHMARK(BM_Rouge2);
BENCHMARK(BM_RougeL)->Arg(120)->Arg(500);
BENCHMARK(BM_LcsLength);
BENCHMARK(BM_AnnotateHeader);
BENCHMARK(BM_BuildSusie);
BENCHMARK(BM_BuildFlat);
BENCHMARK(BM_FreqSummarize);
BENCHMARK(BM_OracleSummarize);
BENCHMARK(BM_SplitHash);
BENCHMARK(BM_SplitCorpus)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
