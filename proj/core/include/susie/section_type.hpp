#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace susie {

// The seven section classes. Other is the sink for unmatched headers.
enum class SectionType {
  Introduction,
  Literature,
  Methods,
  Results,
  Discussion,
  Conclusion,
  Other,
};

inline constexpr int kSectionTypeCount = 7;

// Serialized name: "introduction", "methods", ...
std::string_view to_string(SectionType type);

// Display name: "Introduction", "Methods", ...
std::string_view display_name(SectionType type);

// Accepts the serialized names plus a couple of CLI-friendly aliases
// ("intro", "conclusions").
std::optional<SectionType> section_type_from_string(std::string_view name);

}  // namespace susie
