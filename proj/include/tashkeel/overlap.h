#pragma once

// Cross-dataset contamination analysis by exact matching of undiacritized
// punctuation-delimited segments.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tashkeel/separators.h"

namespace tashkeel {

using SegmentSet = std::unordered_set<std::string>;

struct SimilarityScore {
  double value = 0.0;
  std::size_t overlapping_words = 0;
  std::size_t total_words = 0;
};

struct CountPercent {
  std::size_t count = 0;
  double percent = 0.0;
};

struct OverlapReport {
  std::size_t total_samples_a = 0;
  std::size_t total_samples_b = 0;
  // Samples with no words are not scored and not part of the totals.
  std::size_t skipped_empty_a = 0;
  std::size_t skipped_empty_b = 0;
  CountPercent identical_in_a;
  CountPercent identical_in_b;
  CountPercent above_threshold_in_a;
  double threshold = 0.5;

  // Plain-text table with the identical / above-threshold columns.
  std::string to_table(std::string_view name_a = "A", std::string_view name_b = "B") const;
};

std::vector<std::string> segment_sample(std::string_view sample,
                                        const SeparatorTiers& tiers = SeparatorTiers::defaults());

// Every segment of every sample, regardless of length.
SegmentSet build_segment_set(std::span<const std::string> dataset,
                             const SeparatorTiers& tiers = SeparatorTiers::defaults());

// overlapping_words sums the word counts of the sample's segments found in
// index; total_words is the word count of all the sample's segments, so a
// fully matched sample scores exactly 1.0. Throws ZeroWordSampleError for a
// sample with no words.
SimilarityScore similarity(std::string_view sample, const SegmentSet& index,
                           const SeparatorTiers& tiers = SeparatorTiers::defaults());

// A sample of B is identical when its segments, joined by single spaces,
// equal one segment of A. Throws std::invalid_argument if either dataset
// has no non-empty sample.
OverlapReport analyze(std::span<const std::string> dataset_a, std::span<const std::string> dataset_b,
                      double threshold = 0.5, const SeparatorTiers& tiers = SeparatorTiers::defaults());

}  // namespace tashkeel
