#include "susie/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace susie {

std::string_view to_string(Method method) {
  return method == Method::Flat ? "flat" : "susie";
}

std::optional<Method> method_from_string(std::string_view name) {
  if (name == "flat") return Method::Flat;
  if (name == "susie") return Method::Susie;
  return std::nullopt;
}

std::string_view section_label(const std::optional<SectionType>& type) {
  return type ? to_string(*type) : std::string_view("whole");
}

void BuildConfig::validate() const {
  if (flat_source_budget == 0 || flat_summary_budget == 0 ||
      susie_source_budget == 0 || susie_summary_budget == 0 || output_budget == 0)
    throw std::invalid_argument("budgets must be positive");
  if (selected_types.empty())
    throw std::invalid_argument("selected_types must be non-empty");
  std::unordered_set<int> seen;
  for (auto t : selected_types)
    if (!seen.insert(static_cast<int>(t)).second)
      throw std::invalid_argument("selected_types must be duplicate-free");
}

std::vector<CurriculumStage> default_curriculum() {
  return {{50, 10}, {100, 20}, {200, 40}, {300, 60}, {400, 80}, {500, 100}};
}

void validate_curriculum(const std::vector<CurriculumStage>& schedule) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i].max_source == 0 || schedule[i].max_summary == 0)
      throw std::invalid_argument("curriculum stage lengths must be positive");
    if (i > 0 && (schedule[i].max_source <= schedule[i - 1].max_source ||
                  schedule[i].max_summary <= schedule[i - 1].max_summary))
      throw std::invalid_argument(
          "curriculum stages must be strictly increasing in both fields");
  }
}

std::vector<SectionGroup> group_selected_sections(const StructuredArticle& article,
                                                  const std::vector<SectionType>& selected,
                                                  bool require_counterpart) {
  std::vector<SectionGroup> groups;
  for (auto type : selected) {
    SectionGroup group{type, {}, {}};
    for (const auto& sec : article.body)
      if (sec.type == type)
        group.body_tokens.insert(group.body_tokens.end(), sec.tokens.begin(),
                                 sec.tokens.end());
    for (const auto& sec : article.abstract)
      if (sec.type == type)
        group.abstract_tokens.insert(group.abstract_tokens.end(),
                                     sec.tokens.begin(), sec.tokens.end());
    if (group.body_tokens.empty()) continue;
    if (require_counterpart && group.abstract_tokens.empty()) continue;
    groups.push_back(std::move(group));
  }
  return groups;
}

std::vector<TrainingExample> build_susie_examples(const StructuredArticle& article,
                                                  const BuildConfig& cfg) {
  std::vector<TrainingExample> examples;
  for (auto& group :
       group_selected_sections(article, cfg.selected_types, true)) {
    TrainingExample ex;
    ex.pmcid = article.pmcid;
    ex.method = Method::Susie;
    ex.section_type = group.type;
    ex.source_tokens =
        truncate_tokens(std::move(group.body_tokens), cfg.susie_source_budget);
    ex.reference_tokens = truncate_tokens(std::move(group.abstract_tokens),
                                          cfg.susie_summary_budget);
    examples.push_back(std::move(ex));
  }
  return examples;
}

std::optional<TrainingExample> build_flat_example(const StructuredArticle& article,
                                                  const BuildConfig& cfg) {
  auto groups = group_selected_sections(article, cfg.selected_types, true);
  if (groups.empty()) return std::nullopt;

  const std::size_t per_section_cap = cfg.flat_source_budget / groups.size();
  TrainingExample ex;
  ex.pmcid = article.pmcid;
  ex.method = Method::Flat;
  ex.section_type = std::nullopt;
  for (auto& group : groups) {
    auto piece = truncate_tokens(std::move(group.body_tokens), per_section_cap);
    ex.source_tokens.insert(ex.source_tokens.end(),
                            std::make_move_iterator(piece.begin()),
                            std::make_move_iterator(piece.end()));
    ex.reference_tokens.insert(ex.reference_tokens.end(),
                               group.abstract_tokens.begin(),
                               group.abstract_tokens.end());
  }
  ex.reference_tokens =
      truncate_tokens(std::move(ex.reference_tokens), cfg.flat_summary_budget);
  return ex;
}

TrainingExample apply_curriculum(TrainingExample example,
                                 const CurriculumStage& stage) {
  example.source_tokens =
      truncate_tokens(std::move(example.source_tokens), stage.max_source);
  example.reference_tokens =
      truncate_tokens(std::move(example.reference_tokens), stage.max_summary);
  return example;
}

}  // namespace susie
