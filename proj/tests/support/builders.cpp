#include "builders.hpp"

#include <cstdio>

namespace builders {

using susie::AnnotatedSection;
using susie::SectionType;
using susie::StructuredArticle;
using susie::TokenList;

TokenList numbered_tokens(const std::string& prefix, std::size_t n) {
  TokenList tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(prefix + std::to_string(i));
  return tokens;
}

AnnotatedSection section(SectionType type, std::string header, TokenList tokens) {
  AnnotatedSection sec;
  sec.type = type;
  sec.header = std::move(header);
  sec.tokens = std::move(tokens);
  return sec;
}

StructuredArticle uniform_article(const std::string& pmcid,
                                  const std::vector<SectionType>& types,
                                  std::size_t body_len, std::size_t abstract_len) {
  StructuredArticle article;
  article.pmcid = pmcid;
  article.title = "synthetic " + pmcid;
  for (std::size_t t = 0; t < types.size(); ++t) {
    const std::string tag = pmcid + "t" + std::to_string(t);
    article.body.push_back(section(
        types[t], std::string(susie::display_name(types[t])),
        numbered_tokens("b" + tag + "x", body_len)));
    if (abstract_len > 0)
      article.abstract.push_back(section(
          types[t], std::string(susie::display_name(types[t])),
          numbered_tokens("a" + tag + "x", abstract_len)));
  }
  return article;
}

namespace {

// `count` filler sentences of ten tokens each, every token unique within
// the article and the last token of each sentence carrying a period.
TokenList filler_sentences(const std::string& tag, std::size_t count) {
  TokenList tokens;
  tokens.reserve(count * 10);
  for (std::size_t s = 0; s < count; ++s) {
    for (int w = 0; w < 10; ++w) {
      std::string token = "f" + tag + "s" + std::to_string(s) + "w" +
                          std::to_string(w);
      if (w == 9) token.push_back('.');
      tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

TokenList payload_tokens_for(const std::string& tag, std::size_t count) {
  return numbered_tokens("p" + tag + "n", count);
}

}  // namespace

StructuredArticle adversarial_article(const std::string& pmcid,
                                      std::size_t filler_count,
                                      std::size_t payload_count,
                                      bool payload_first) {
  const SectionType kTypes[] = {SectionType::Introduction, SectionType::Methods,
                                SectionType::Conclusion};
  StructuredArticle article;
  article.pmcid = pmcid;
  article.title = "adversarial " + pmcid;
  for (std::size_t t = 0; t < 3; ++t) {
    const std::string tag = pmcid + "t" + std::to_string(t);
    TokenList payload = payload_tokens_for(tag, payload_count);

    TokenList body_payload = payload;
    if (!body_payload.empty()) body_payload.back().push_back('.');
    TokenList body = filler_sentences(tag, filler_count);
    if (payload_first) {
      body.insert(body.begin(), body_payload.begin(), body_payload.end());
    } else {
      body.insert(body.end(), body_payload.begin(), body_payload.end());
    }

    article.body.push_back(section(
        kTypes[t], std::string(susie::display_name(kTypes[t])), std::move(body)));
    article.abstract.push_back(
        section(kTypes[t], std::string(susie::display_name(kTypes[t])),
                std::move(payload)));
  }
  return article;
}

namespace {

std::vector<StructuredArticle> corpus_with(const char* prefix, std::size_t n,
                                           bool payload_first) {
  std::vector<StructuredArticle> corpus;
  corpus.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "%s%04zu", prefix, i);
    corpus.push_back(adversarial_article(id, 18, 30, payload_first));
  }
  return corpus;
}

}  // namespace

std::vector<StructuredArticle> adversarial_corpus(std::size_t n) {
  return corpus_with("ADV", n, false);
}

std::vector<StructuredArticle> frontloaded_corpus(std::size_t n) {
  return corpus_with("FRO", n, true);
}

}  // namespace builders
