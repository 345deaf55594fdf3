#include "tashkeel/overlap.h"

#include <cstdio>
#include <stdexcept>

#include "tashkeel/arabic.h"
#include "tashkeel/chunker.h"
#include "tashkeel/errors.h"

namespace tashkeel {

std::vector<std::string> segment_sample(std::string_view sample, const SeparatorTiers& tiers) {
  return split_segments(sample, tiers);
}

SegmentSet build_segment_set(std::span<const std::string> dataset, const SeparatorTiers& tiers) {
  SegmentSet set;
  for (const std::string& sample : dataset) {
    for (std::string& segment : split_segments(sample, tiers)) set.insert(std::move(segment));
  }
  return set;
}

namespace {

SimilarityScore score_segments(const std::vector<std::string>& segments, const SegmentSet& index) {
  SimilarityScore s;
  for (const std::string& segment : segments) {
    const std::size_t n = word_count(segment);
    s.total_words += n;
    if (index.count(segment)) s.overlapping_words += n;
  }
  if (s.total_words > 0) {
    s.value = static_cast<double>(s.overlapping_words) / static_cast<double>(s.total_words);
  }
  return s;
}

CountPercent count_percent(std::size_t count, std::size_t total) {
  return {count, total ? 100.0 * static_cast<double>(count) / static_cast<double>(total) : 0.0};
}

}  // namespace

SimilarityScore similarity(std::string_view sample, const SegmentSet& index, const SeparatorTiers& tiers) {
  SimilarityScore s = score_segments(split_segments(sample, tiers), index);
  if (s.total_words == 0) throw ZeroWordSampleError("similarity of a sample with no words is undefined");
  return s;
}

OverlapReport analyze(std::span<const std::string> dataset_a, std::span<const std::string> dataset_b,
                      double threshold, const SeparatorTiers& tiers) {
  OverlapReport report;
  report.threshold = threshold;
  const SegmentSet index_a = build_segment_set(dataset_a, tiers);
  const SegmentSet index_b = build_segment_set(dataset_b, tiers);

  std::size_t identical_a = 0;
  std::size_t above_a = 0;
  for (const std::string& sample : dataset_a) {
    const SimilarityScore s = score_segments(split_segments(sample, tiers), index_b);
    if (s.total_words == 0) {
      ++report.skipped_empty_a;
      continue;
    }
    ++report.total_samples_a;
    if (s.overlapping_words == s.total_words) ++identical_a;
    if (s.value > threshold) ++above_a;
  }

  std::size_t identical_b = 0;
  for (const std::string& sample : dataset_b) {
    const std::vector<std::string> segments = split_segments(sample, tiers);
    if (segments.empty()) {
      ++report.skipped_empty_b;
      continue;
    }
    ++report.total_samples_b;
    std::string whole;
    for (const std::string& seg : segments) {
      if (!whole.empty()) whole += ' ';
      whole += seg;
    }
    if (index_a.count(whole)) ++identical_b;
  }

  if (report.total_samples_a == 0 || report.total_samples_b == 0) {
    throw std::invalid_argument("analyze: both datasets need at least one non-empty sample");
  }
  report.identical_in_a = count_percent(identical_a, report.total_samples_a);
  report.identical_in_b = count_percent(identical_b, report.total_samples_b);
  report.above_threshold_in_a = count_percent(above_a, report.total_samples_a);
  return report;
}

std::string OverlapReport::to_table(std::string_view name_a, std::string_view name_b) const {
  auto cell = [](const CountPercent& c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu (%.2f%%)", c.count, c.percent);
    return std::string(buf);
  };
  char threshold_buf[32];
  std::snprintf(threshold_buf, sizeof threshold_buf, "%.2f", threshold);
  std::string out;
  out += "| Dataset | Samples | Overlap (Identical Samples) | Overlap (Similarity > ";
  out += threshold_buf;
  out += ") |\n|---|---|---|---|\n";
  out += "| " + std::string(name_a) + " | " + std::to_string(total_samples_a) + " | " + cell(identical_in_a) +
         " | " + cell(above_threshold_in_a) + " |\n";
  out += "| " + std::string(name_b) + " | " + std::to_string(total_samples_b) + " | " + cell(identical_in_b) +
         " | - |\n";
  return out;
}

}  // namespace tashkeel
