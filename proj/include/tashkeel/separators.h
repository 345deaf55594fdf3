#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tashkeel {

// Separator characters grouped by split priority, tier 0 first. A line
// break is listed as '\n'.
class SeparatorTiers {
 public:
  // Sentence-final marks, line break, quotation marks, closing brackets,
  // commas.
  static SeparatorTiers defaults();

  // Throws std::invalid_argument if a character appears in two tiers.
  explicit SeparatorTiers(std::vector<std::u32string> tiers);

  // Tier of c, or -1 for non-separators.
  int tier_of(char32_t c) const;
  bool is_separator(char32_t c) const { return tier_of(c) >= 0; }
  std::size_t size() const { return tiers_.size(); }
  const std::vector<std::u32string>& tiers() const { return tiers_; }

 private:
  std::vector<std::u32string> tiers_;
};

// Splits at every separator character of any tier, strips diacritics,
// normalizes whitespace and drops empty pieces.
std::vector<std::string> split_segments(std::string_view text, const SeparatorTiers& tiers);

}  // namespace tashkeel
