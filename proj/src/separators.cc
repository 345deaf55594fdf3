#include "tashkeel/separators.h"

#include <cstdio>
#include <stdexcept>

#include "tashkeel/arabic.h"
#include "tashkeel/utf8.h"

namespace tashkeel {

SeparatorTiers SeparatorTiers::defaults() {
  return SeparatorTiers({
      U".!?؟؞۔",
      U"\n",
      U"\"»«”“",
      U")]}",
      U"،,",
  });
}

SeparatorTiers::SeparatorTiers(std::vector<std::u32string> tiers) : tiers_(std::move(tiers)) {
  for (std::size_t i = 0; i < tiers_.size(); ++i) {
    for (char32_t c : tiers_[i]) {
      for (std::size_t j = i + 1; j < tiers_.size(); ++j) {
        if (tiers_[j].find(c) != std::u32string::npos) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "separator U+%04X appears in more than one tier",
                        static_cast<unsigned>(c));
          throw std::invalid_argument(buf);
        }
      }
    }
  }
}

int SeparatorTiers::tier_of(char32_t c) const {
  for (std::size_t i = 0; i < tiers_.size(); ++i) {
    if (tiers_[i].find(c) != std::u32string::npos) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> split_segments(std::string_view text, const SeparatorTiers& tiers) {
  std::vector<std::string> segments;
  std::string current;
  auto flush = [&] {
    std::string seg = normalize_whitespace(strip_diacritics(current));
    if (!seg.empty()) segments.push_back(std::move(seg));
    current.clear();
  };
  utf8::for_each(text, [&](const utf8::Decoded& d, std::string_view bytes) {
    if (d.valid && tiers.is_separator(d.codepoint)) {
      flush();
    } else {
      current += bytes;
    }
  });
  flush();
  return segments;
}

}  // namespace tashkeel
