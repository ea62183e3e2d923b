#include "susie/pipeline.hpp"

#include <cstdio>
#include <sstream>

#include "susie/backend.hpp"
#include "susie/parallel.hpp"

namespace susie {

TokenList StructuredSummary::flattened_tokens() const {
  TokenList out;
  for (const auto& part : parts)
    out.insert(out.end(), part.tokens.begin(), part.tokens.end());
  return out;
}

std::string render_summary_text(const StructuredSummary& summary) {
  std::ostringstream out;
  bool first = true;
  for (const auto& part : summary.parts) {
    if (!first) out << "\n";
    first = false;
    if (part.section) out << "**" << display_name(*part.section) << "** ";
    out << join_tokens(part.tokens);
  }
  return out.str();
}

namespace {

std::string request_id(const std::string& pmcid,
                       const std::optional<SectionType>& section,
                       std::uint64_t seq) {
  std::string id = pmcid;
  id.push_back('#');
  id += section_label(section);
  id.push_back('#');
  id += std::to_string(seq);
  return id;
}

std::uint64_t next_seq() {
  static std::atomic<std::uint64_t> counter{0};
  return counter.fetch_add(1);
}

}  // namespace

StructuredSummary summarize_susie(const StructuredArticle& article, Summarizer& s,
                                  const BuildConfig& cfg) {
  StructuredSummary summary;
  summary.pmcid = article.pmcid;
  for (auto& group :
       group_selected_sections(article, cfg.selected_types, false)) {
    SummarizeRequest req;
    req.id = request_id(article.pmcid, group.type, next_seq());
    req.source_tokens =
        truncate_tokens(std::move(group.body_tokens), cfg.susie_source_budget);
    req.max_output_tokens = cfg.output_budget;
    req.reference_tokens = std::move(group.abstract_tokens);

    StructuredSummary::Part part;
    part.section = group.type;
    try {
      part.tokens = s.summarize(req).summary_tokens;
    } catch (const BackendError&) {
      ++summary.failed_parts;  // empty part, article continues
    }
    summary.parts.push_back(std::move(part));
  }
  return summary;
}

std::optional<StructuredSummary> summarize_flat(const StructuredArticle& article,
                                                Summarizer& s,
                                                const BuildConfig& cfg) {
  auto groups = group_selected_sections(article, cfg.selected_types, false);
  if (groups.empty()) return std::nullopt;

  const std::size_t per_section_cap = cfg.flat_source_budget / groups.size();
  SummarizeRequest req;
  req.id = request_id(article.pmcid, std::nullopt, next_seq());
  req.max_output_tokens = cfg.output_budget;
  for (auto& group : groups) {
    auto piece = truncate_tokens(std::move(group.body_tokens), per_section_cap);
    req.source_tokens.insert(req.source_tokens.end(),
                             std::make_move_iterator(piece.begin()),
                             std::make_move_iterator(piece.end()));
    req.reference_tokens.insert(req.reference_tokens.end(),
                                group.abstract_tokens.begin(),
                                group.abstract_tokens.end());
  }

  StructuredSummary summary;
  summary.pmcid = article.pmcid;
  StructuredSummary::Part part;
  part.section = std::nullopt;
  part.tokens = s.summarize(req).summary_tokens;
  summary.parts.push_back(std::move(part));
  return summary;
}

TokenList evaluation_reference(const StructuredArticle& article,
                               const BuildConfig& cfg) {
  TokenList ref;
  for (auto type : cfg.selected_types)
    for (const auto& sec : article.abstract)
      if (sec.type == type)
        ref.insert(ref.end(), sec.tokens.begin(), sec.tokens.end());
  return ref;
}

namespace {

struct ArticleScore {
  bool failed = false;
  bool skipped = false;  // empty reference
  double f1_r1 = 0, f1_r2 = 0, f1_rl = 0;
};

ComparisonCell aggregate(const std::vector<ArticleScore>& scores) {
  ComparisonCell cell;
  double sum1 = 0, sum2 = 0, sumL = 0;
  std::size_t scored = 0, skipped = 0;
  for (const auto& s : scores) {
    if (s.failed) {
      ++cell.failed_articles;
      continue;
    }
    if (s.skipped) {
      ++skipped;
      continue;
    }
    sum1 += s.f1_r1;
    sum2 += s.f1_r2;
    sumL += s.f1_rl;
    ++scored;
  }
  auto fill = [&](MetricSummary& m, double sum) {
    m.scored = scored;
    m.skipped = skipped;
    m.mean_f1 = scored ? sum / scored : 0.0;
  };
  fill(cell.rouge1, sum1);
  fill(cell.rouge2, sum2);
  fill(cell.rougeL, sumL);
  return cell;
}

}  // namespace

ComparisonReport compare_methods(const std::vector<StructuredArticle>& corpus,
                                 const std::vector<BackendSpec>& backends,
                                 const BuildConfig& cfg, unsigned workers,
                                 const std::atomic<bool>* stop) {
  ComparisonReport report;
  for (const auto& backend : backends) {
    ComparisonReport::Row row;
    row.backend = backend.name;
    for (const Method method : {Method::Flat, Method::Susie}) {
      auto scores = parallel_map<ArticleScore>(
          corpus.size(), workers, backend.make,
          [&](std::unique_ptr<Summarizer>& s, std::size_t i) {
            const auto& article = corpus[i];
            ArticleScore score;
            const auto reference = evaluation_reference(article, cfg);
            if (normalize_tokens(reference).empty()) {
              score.skipped = true;
              return score;
            }
            TokenList candidate;
            try {
              if (method == Method::Flat) {
                auto summary = summarize_flat(article, *s, cfg);
                if (!summary) {
                  score.skipped = true;
                  return score;
                }
                candidate = summary->flattened_tokens();
              } else {
                auto summary = summarize_susie(article, *s, cfg);
                if (summary.parts.empty()) {
                  // no qualifying sections; mirror the flat empty yield
                  score.skipped = true;
                  return score;
                }
                candidate = summary.flattened_tokens();
              }
            } catch (const BackendError&) {
              score.failed = true;
              return score;
            }
            score.f1_r1 = rouge_n(candidate, reference, 1).f1;
            score.f1_r2 = rouge_n(candidate, reference, 2).f1;
            score.f1_rl = rouge_l(candidate, reference).f1;
            return score;
          },
          stop);
      (method == Method::Flat ? row.flat : row.susie) = aggregate(scores);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_comparison(const ComparisonReport& report) {
  constexpr std::size_t kBackendWidth = 16;
  constexpr std::size_t kCellWidth = 12;
  std::ostringstream out;

  out << pad_right("", kBackendWidth);
  for (const char* metric : {"ROUGE-1 F1", "ROUGE-2 F1", "ROUGE-L F1"})
    out << pad_left(metric, 2 * kCellWidth);
  out << "\n" << pad_right("backend", kBackendWidth);
  for (int i = 0; i < 3; ++i)
    out << pad_left("Flat", kCellWidth) << pad_left("SUSIE", kCellWidth);
  out << "\n";

  for (const auto& row : report.rows) {
    out << pad_right(row.backend, kBackendWidth);
    const double flat[] = {row.flat.rouge1.mean_f1, row.flat.rouge2.mean_f1,
                           row.flat.rougeL.mean_f1};
    const double susie[] = {row.susie.rouge1.mean_f1, row.susie.rouge2.mean_f1,
                            row.susie.rougeL.mean_f1};
    for (int m = 0; m < 3; ++m) {
      auto cell = [&](double v, bool best) {
        return pad_left(best ? "**" + fixed4(v) + "**" : fixed4(v), kCellWidth);
      };
      out << cell(flat[m], flat[m] >= susie[m]) << cell(susie[m], susie[m] >= flat[m]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace susie
