#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "builders.hpp"
#include "susie/store.hpp"

using namespace susie;
using builders::numbered_tokens;
using builders::section;
using builders::uniform_article;

TEST_CASE("article store round-trips structure and unicode") {
    std::vector<StructuredArticle> articles;
    articles.push_back(uniform_article(
        "PMC100", {SectionType::Introduction, SectionType::Methods}, 30, 10));
    StructuredArticle odd;
    odd.pmcid = "PMC101";
    odd.title = "Étude of µ-signals \"quoted\"";
    odd.body = {section(SectionType::Other, "Abbreviations",
                        {"µl", "naïve", "x±y"})};
    odd.abstract = {
        section(SectionType::Conclusion, "Conclusions", {"done", "süß"})};
    articles.push_back(odd);

    std::ostringstream out;
    write_article_store(out, articles);
    const std::string blob = out.str();
    CHECK(blob.back() == '\n');
    CHECK(std::count(blob.begin(), blob.end(), '\n') == 2);

    std::istringstream in(blob);
    const auto back = read_article_store(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == articles[0]);
    CHECK(back[1] == articles[1]);
    CHECK(back[1].body[0].tokens == odd.body[0].tokens);

    // a second serialization is byte-identical
    std::ostringstream again;
    write_article_store(again, back);
    CHECK(again.str() == blob);
}

TEST_CASE("corpus records round-trip both methods") {
    TrainingExample susie_ex;
    susie_ex.pmcid = "PMC200";
    susie_ex.method = Method::Susie;
    susie_ex.section_type = SectionType::Methods;
    susie_ex.source_tokens = numbered_tokens("s", 12);
    susie_ex.reference_tokens = numbered_tokens("r", 4);

    TrainingExample flat_ex;
    flat_ex.pmcid = "PMC201";
    flat_ex.method = Method::Flat;
    flat_ex.section_type = std::nullopt;
    flat_ex.source_tokens = {"only", "one", "sentence."};
    flat_ex.reference_tokens = {"short"};

    for (const auto& ex : {susie_ex, flat_ex}) {
        const auto line = corpus_record_line(ex);
        CHECK(line.find('\n') == std::string::npos);
        CHECK(parse_corpus_record(line) == ex);
    }
    CHECK(corpus_record_line(flat_ex).find("\"whole\"") != std::string::npos);
    CHECK(corpus_record_line(susie_ex) == corpus_record_line(susie_ex));
}

TEST_CASE("summary records round-trip parts including whole") {
    SummaryRecord rec;
    rec.pmcid = "PMC300";
    rec.method = Method::Susie;
    rec.parts.push_back({SectionType::Introduction, {"first", "part"}});
    rec.parts.push_back({SectionType::Conclusion, {"second"}});

    const auto line = summary_record_line(rec);
    const auto back = parse_summary_record(line);
    CHECK(back.pmcid == rec.pmcid);
    CHECK(back.method == rec.method);
    REQUIRE(back.parts.size() == 2);
    CHECK(back.parts[0].section == SectionType::Introduction);
    CHECK(back.parts[0].tokens == rec.parts[0].tokens);
    CHECK(back.parts[1].section == SectionType::Conclusion);

    SummaryRecord flat;
    flat.pmcid = "PMC301";
    flat.method = Method::Flat;
    flat.parts.push_back({std::nullopt, {"whole", "text"}});
    const auto flat_back = parse_summary_record(summary_record_line(flat));
    REQUIRE(flat_back.parts.size() == 1);
    CHECK_FALSE(flat_back.parts[0].section.has_value());
    CHECK(flat_back.parts[0].tokens == flat.parts[0].tokens);
}

TEST_CASE("parse errors are loud, not silent") {
    CHECK_THROWS(parse_corpus_record("not json at all"));
    CHECK_THROWS(parse_corpus_record("{\"pmcid\":\"X\"}"));
    CHECK_THROWS(parse_corpus_record(
        "{\"pmcid\":\"X\",\"method\":\"flat\",\"section_type\":\"bogus\","
        "\"source\":\"a\",\"reference\":\"b\"}"));
    CHECK_THROWS(parse_summary_record("[1,2,3]"));
    CHECK_THROWS(read_corpus_file("/nonexistent/path/corpus.jsonl"));
    CHECK_THROWS(read_summaries_file("/nonexistent/path/summaries.jsonl"));
    CHECK_THROWS(read_article_store_file("/nonexistent/path/store.jsonl"));
}

TEST_CASE("unknown method names are rejected") {
    CHECK_THROWS(parse_corpus_record(
        "{\"pmcid\":\"X\",\"method\":\"hybrid\",\"section_type\":\"whole\","
        "\"source\":\"a\",\"reference\":\"b\"}"));
}
