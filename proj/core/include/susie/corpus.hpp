#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "susie/annotate.hpp"

namespace susie {

enum class Method { Flat, Susie };

std::string_view to_string(Method method);
std::optional<Method> method_from_string(std::string_view name);

struct BuildConfig {
  std::vector<SectionType> selected_types = {
      SectionType::Introduction, SectionType::Methods, SectionType::Conclusion};
  std::size_t flat_source_budget = 500;    // L
  std::size_t flat_summary_budget = 100;
  std::size_t susie_source_budget = 500;   // per section
  std::size_t susie_summary_budget = 100;  // per section
  std::size_t output_budget = 120;         // generation cap per request

  void validate() const;  // throws std::invalid_argument
};

// One (source, reference) pair. section_type is empty for flat examples
// (the whole-article pairing).
struct TrainingExample {
  std::string pmcid;
  Method method = Method::Susie;
  std::optional<SectionType> section_type;  // nullopt == whole
  TokenList source_tokens;
  TokenList reference_tokens;

  bool operator==(const TrainingExample&) const = default;
};

// Serialized name of the example's section label ("whole" for flat).
std::string_view section_label(const std::optional<SectionType>& type);

struct CurriculumStage {
  std::size_t max_source = 0;
  std::size_t max_summary = 0;
};

// Default training schedule, (50,10) up to (500,100).
std::vector<CurriculumStage> default_curriculum();

// Stages must be strictly increasing in both fields.
void validate_curriculum(const std::vector<CurriculumStage>& schedule);

// One example per selected type present in BOTH body and abstract: the
// body sections of that type are concatenated in document order and cut to
// susie_source_budget, the abstract sections likewise to
// susie_summary_budget. Examples come out in selected_types order. An
// empty result means no selected type is present on both sides and the
// caller skips the article.
std::vector<TrainingExample> build_susie_examples(const StructuredArticle& article,
                                                  const BuildConfig& cfg);

// Single whole-article example: each qualifying per-type body concatenation
// is cut to floor(L/n) where n is the number of qualifying types, then the
// pieces are concatenated in selected_types order. The reference is the
// concatenation of the corresponding abstract sections, cut to
// flat_summary_budget. nullopt means no type qualifies (empty yield).
std::optional<TrainingExample> build_flat_example(const StructuredArticle& article,
                                                  const BuildConfig& cfg);

TrainingExample apply_curriculum(TrainingExample example,
                                 const CurriculumStage& stage);

// Per-type body/abstract concatenations used by both corpus building and
// inference. Types qualify when present in `primary`; when `require_counterpart`
// is set they must appear in `counterpart` too.
struct SectionGroup {
  SectionType type;
  TokenList body_tokens;      // document-order concatenation
  TokenList abstract_tokens;  // document-order concatenation (may be empty)
};

std::vector<SectionGroup> group_selected_sections(const StructuredArticle& article,
                                                  const std::vector<SectionType>& selected,
                                                  bool require_counterpart);

}  // namespace susie
