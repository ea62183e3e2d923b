#include <doctest.h>

#include <algorithm>

#include "builders.hpp"
#include "susie/corpus.hpp"

using namespace susie;
using builders::numbered_tokens;
using builders::section;
using builders::uniform_article;

namespace {

BuildConfig default_cfg() {
    BuildConfig cfg;
    return cfg;
}

}  // namespace

TEST_CASE("susie pairs only types present on both sides") {
    StructuredArticle article;
    article.pmcid = "P1";
    article.body = {
        section(SectionType::Introduction, "Introduction", numbered_tokens("bi", 10)),
        section(SectionType::Methods, "Methods", numbered_tokens("bm", 10)),
        section(SectionType::Conclusion, "Conclusion", numbered_tokens("bc", 10)),
    };
    article.abstract = {
        section(SectionType::Literature, "Background", numbered_tokens("al", 5)),
        section(SectionType::Methods, "Methods", numbered_tokens("am", 5)),
        section(SectionType::Conclusion, "Conclusions", numbered_tokens("ac", 5)),
    };
    const auto examples = build_susie_examples(article, default_cfg());

    REQUIRE(examples.size() == 2);
    CHECK(examples[0].section_type == SectionType::Methods);
    CHECK(examples[1].section_type == SectionType::Conclusion);
    for (const auto& ex : examples) {
        CHECK(ex.method == Method::Susie);
        CHECK(ex.pmcid == "P1");
    }
}

TEST_CASE("short single-type article passes through untruncated") {
    StructuredArticle article;
    article.pmcid = "P2";
    article.body = {section(SectionType::Introduction, "Introduction",
                            numbered_tokens("b", 40))};
    article.abstract = {section(SectionType::Introduction, "Introduction",
                                numbered_tokens("a", 12))};
    const auto examples = build_susie_examples(article, default_cfg());

    REQUIRE(examples.size() == 1);
    CHECK(examples[0].source_tokens == numbered_tokens("b", 40));
    CHECK(examples[0].reference_tokens == numbered_tokens("a", 12));
}

TEST_CASE("same-type sections concatenate in document order then truncate") {
    StructuredArticle article;
    article.pmcid = "P3";
    article.body = {
        section(SectionType::Methods, "Methods", numbered_tokens("first", 300)),
        section(SectionType::Methods, "Methods cont", numbered_tokens("second", 300)),
    };
    article.abstract = {
        section(SectionType::Methods, "Methods", numbered_tokens("abs", 5))};
    BuildConfig cfg;
    cfg.selected_types = {SectionType::Methods};
    cfg.susie_source_budget = 500;

    const auto examples = build_susie_examples(article, cfg);
    REQUIRE(examples.size() == 1);
    const auto& src = examples[0].source_tokens;
    REQUIRE(src.size() == 500);

    auto expected = numbered_tokens("first", 300);
    const auto second = numbered_tokens("second", 200);
    expected.insert(expected.end(), second.begin(), second.end());
    CHECK(src == expected);
}

TEST_CASE("flat per-section caps: 600/1200/150 at L=500 gives 482") {
    StructuredArticle article;
    article.pmcid = "P4";
    article.body = {
        section(SectionType::Introduction, "Introduction", numbered_tokens("i", 600)),
        section(SectionType::Methods, "Methods", numbered_tokens("m", 1200)),
        section(SectionType::Conclusion, "Conclusion", numbered_tokens("c", 150)),
    };
    article.abstract = {
        section(SectionType::Introduction, "Introduction", numbered_tokens("ai", 30)),
        section(SectionType::Methods, "Methods", numbered_tokens("am", 30)),
        section(SectionType::Conclusion, "Conclusions", numbered_tokens("ac", 30)),
    };
    const auto example = build_flat_example(article, default_cfg());

    REQUIRE(example.has_value());
    REQUIRE(example->source_tokens.size() == 482);  // 166 + 166 + 150

    auto expected = numbered_tokens("i", 166);
    auto m = numbered_tokens("m", 166);
    auto c = numbered_tokens("c", 150);
    expected.insert(expected.end(), m.begin(), m.end());
    expected.insert(expected.end(), c.begin(), c.end());
    CHECK(example->source_tokens == expected);
    CHECK(example->section_type == std::nullopt);
    CHECK(example->method == Method::Flat);
}

TEST_CASE("flat with one qualifying section uses the whole budget") {
    const auto article =
        uniform_article("P5", {SectionType::Methods}, 400, 20);
    const auto example = build_flat_example(article, default_cfg());
    REQUIRE(example.has_value());
    CHECK(example->source_tokens.size() == 400);  // cap 500/1, untruncated
}

TEST_CASE("flat and susie coincide for one short section") {
    const auto article =
        uniform_article("P6", {SectionType::Introduction}, 120, 40);
    const auto cfg = default_cfg();
    const auto flat = build_flat_example(article, cfg);
    const auto susie = build_susie_examples(article, cfg);

    REQUIRE(flat.has_value());
    REQUIRE(susie.size() == 1);
    CHECK(flat->source_tokens == susie[0].source_tokens);
    CHECK(flat->reference_tokens == susie[0].reference_tokens);
}

TEST_CASE("flat reference is the selected abstract concatenation, truncated") {
    const auto article = uniform_article(
        "P7", {SectionType::Introduction, SectionType::Methods}, 100, 80);
    const auto example = build_flat_example(article, default_cfg());
    REQUIRE(example.has_value());
    // 80 + 80 abstract tokens, budget 100 -> first 100 of the concatenation
    REQUIRE(example->reference_tokens.size() == 100);
    const auto first = numbered_tokens("aP7t0x", 80);
    CHECK(std::equal(first.begin(), first.end(),
                     example->reference_tokens.begin()));
}

TEST_CASE("empty yield when nothing qualifies") {
    StructuredArticle article;
    article.pmcid = "P8";
    article.body = {
        section(SectionType::Other, "Misc", numbered_tokens("x", 50)),
        section(SectionType::Methods, "Methods", numbered_tokens("m", 50)),
    };
    article.abstract = {
        section(SectionType::Literature, "Background", numbered_tokens("a", 10))};
    CHECK(build_susie_examples(article, default_cfg()).empty());
    CHECK_FALSE(build_flat_example(article, default_cfg()).has_value());
}

TEST_CASE("flat length never exceeds n*floor(L/n)") {
    const std::vector<SectionType> all = {
        SectionType::Introduction, SectionType::Literature, SectionType::Methods,
        SectionType::Conclusion};
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::vector<SectionType> types(all.begin(), all.begin() + n);
        for (std::size_t body_len : {3u, 100u, 166u, 167u, 600u}) {
            BuildConfig cfg;
            cfg.selected_types = types;
            const auto article = uniform_article("P9", types, body_len, 10);
            const auto example = build_flat_example(article, cfg);
            REQUIRE(example.has_value());
            const std::size_t cap = cfg.flat_source_budget / n;
            CHECK(example->source_tokens.size() <= n * cap);
            CHECK(n * cap <= cfg.flat_source_budget);
        }
    }
}

TEST_CASE("susie invariants: budget, pairing, per-article count") {
    const auto article = uniform_article(
        "P10",
        {SectionType::Introduction, SectionType::Methods, SectionType::Conclusion},
        700, 150);
    const auto cfg = default_cfg();
    const auto examples = build_susie_examples(article, cfg);
    CHECK(examples.size() <= cfg.selected_types.size());
    for (const auto& ex : examples) {
        REQUIRE(ex.section_type.has_value());
        CHECK(ex.source_tokens.size() <= cfg.susie_source_budget);
        CHECK(ex.reference_tokens.size() <= cfg.susie_summary_budget);
        auto has_type = [&](const std::vector<AnnotatedSection>& secs) {
            return std::any_of(secs.begin(), secs.end(), [&](const auto& s) {
                return s.type == *ex.section_type;
            });
        };
        CHECK(has_type(article.body));
        CHECK(has_type(article.abstract));
    }
}

TEST_CASE("curriculum stages truncate and compose monotonically") {
    TrainingExample ex;
    ex.pmcid = "P11";
    ex.source_tokens = numbered_tokens("s", 677);
    ex.reference_tokens = numbered_tokens("r", 130);

    const auto small = apply_curriculum(ex, {50, 10});
    CHECK(small.source_tokens.size() == 50);
    CHECK(small.reference_tokens.size() == 10);

    const auto big = apply_curriculum(ex, {1000, 1000});
    CHECK(big.source_tokens == ex.source_tokens);
    CHECK(big.reference_tokens == ex.reference_tokens);

    CHECK(apply_curriculum(small, {500, 100}) == small);
    CHECK(apply_curriculum(apply_curriculum(ex, {500, 100}), {50, 10}) == small);
}

TEST_CASE("default curriculum matches the training ladder") {
    const auto stages = default_curriculum();
    REQUIRE(stages.size() == 6);
    const std::size_t sources[] = {50, 100, 200, 300, 400, 500};
    const std::size_t summaries[] = {10, 20, 40, 60, 80, 100};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(stages[i].max_source == sources[i]);
        CHECK(stages[i].max_summary == summaries[i]);
    }
    CHECK_NOTHROW(validate_curriculum(stages));
}

TEST_CASE("curriculum validation rejects non-increasing schedules") {
    CHECK_THROWS(validate_curriculum({{100, 20}, {100, 40}}));
    CHECK_THROWS(validate_curriculum({{100, 20}, {200, 20}}));
    CHECK_THROWS(validate_curriculum({{200, 20}, {100, 40}}));
    CHECK_THROWS(validate_curriculum({{0, 10}}));
    CHECK_NOTHROW(validate_curriculum({{50, 10}, {100, 20}}));
}

TEST_CASE("build config validation") {
    BuildConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.flat_source_budget = 0;
    CHECK_THROWS(cfg.validate());

    BuildConfig dup;
    dup.selected_types = {SectionType::Methods, SectionType::Methods};
    CHECK_THROWS(dup.validate());

    BuildConfig empty;
    empty.selected_types = {};
    CHECK_THROWS(empty.validate());
}

TEST_CASE("group_selected_sections honors selection order and counterparts") {
    StructuredArticle article;
    article.pmcid = "P12";
    article.body = {
        section(SectionType::Conclusion, "Conclusion", numbered_tokens("c", 5)),
        section(SectionType::Methods, "Methods", numbered_tokens("m1", 5)),
        section(SectionType::Methods, "More methods", numbered_tokens("m2", 5)),
    };
    article.abstract = {
        section(SectionType::Methods, "Methods", numbered_tokens("am", 3))};

    const auto strict = group_selected_sections(
        article, {SectionType::Conclusion, SectionType::Methods}, true);
    REQUIRE(strict.size() == 1);  // conclusion lacks an abstract counterpart
    CHECK(strict[0].type == SectionType::Methods);

    auto expected = numbered_tokens("m1", 5);
    const auto m2 = numbered_tokens("m2", 5);
    expected.insert(expected.end(), m2.begin(), m2.end());
    CHECK(strict[0].body_tokens == expected);

    const auto loose = group_selected_sections(
        article, {SectionType::Conclusion, SectionType::Methods}, false);
    REQUIRE(loose.size() == 2);
    CHECK(loose[0].type == SectionType::Conclusion);  // selection order
    CHECK(loose[1].type == SectionType::Methods);
}

TEST_CASE("method and section labels round-trip") {
    CHECK(to_string(Method::Flat) == "flat");
    CHECK(to_string(Method::Susie) == "susie");
    CHECK(*method_from_string("flat") == Method::Flat);
    CHECK(*method_from_string("susie") == Method::Susie);
    CHECK_FALSE(method_from_string("bogus").has_value());
    CHECK(section_label(std::nullopt) == "whole");
    CHECK(section_label(SectionType::Methods) == "methods");
}
