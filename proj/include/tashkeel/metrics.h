#pragma once

// Diacritic error rate (DER) and word error rate (WER) in the four usual
// variants: with or without letters the reference leaves unmarked, and
// with or without each word's final (case-ending) letter.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace tashkeel {

struct MetricOptions {
  bool case_ending = true;
  bool include_no_diacritic = true;

  bool operator==(const MetricOptions&) const = default;
};

// Variant order used everywhere: incl/w CE, incl/w-o CE, excl/w CE,
// excl/w-o CE.
inline constexpr std::array<MetricOptions, 4> kAllVariants = {{
    {true, true},
    {false, true},
    {true, false},
    {false, false},
}};

std::size_t variant_index(const MetricOptions& opts);
std::string variant_label(const MetricOptions& opts);

struct PairCounts {
  std::size_t counted_chars = 0;
  std::size_t wrong_chars = 0;
  std::size_t counted_words = 0;
  std::size_t wrong_words = 0;

  // Percentages; 0 when nothing was counted.
  double der() const;
  double wer() const;
  PairCounts& operator+=(const PairCounts& o);
  bool operator==(const PairCounts&) const = default;
};

using VariantCounts = std::array<PairCounts, 4>;

// Words and letters are paired by position. A letter is counted unless it
// is the word's last letter and case endings are off, or the reference
// leaves it unmarked and no-diacritic letters are excluded. A counted
// letter is wrong iff its (shadda, vowel) pair differs. Tokens without
// Arabic letters are skipped. Throws BaseTextMismatchError (with sample_id)
// if the two texts do not strip to the same words.
PairCounts compare_pair(std::string_view ref, std::string_view hyp, const MetricOptions& opts,
                        std::string_view sample_id = {});
VariantCounts compare_pair_all(std::string_view ref, std::string_view hyp, std::string_view sample_id = {});

struct EvalPair {
  std::string id;
  std::string reference;
  std::string hypothesis;
};

struct MetricsReport {
  VariantCounts variants{};
  std::size_t pairs = 0;
  // Present when hypotheses went through repair first.
  std::optional<double> hallucination_rate;

  const PairCounts& at(const MetricOptions& opts) const { return variants[variant_index(opts)]; }
  void add(const VariantCounts& counts);
  // Table with DER and WER columns grouped by variant.
  std::string to_table(std::span<const MetricOptions> shown = kAllVariants) const;
  std::string to_csv(std::span<const MetricOptions> shown = kAllVariants) const;
};

// Micro-averaged over all pairs.
MetricsReport evaluate_corpus(std::span<const EvalPair> pairs);

}  // namespace tashkeel
