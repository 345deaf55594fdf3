#include "tashkeel/filter.h"

#include "tashkeel/arabic.h"

namespace tashkeel {

std::string_view name_of(FilterReason reason) {
  switch (reason) {
    case FilterReason::kOk: return "Ok";
    case FilterReason::kTooManyUndiacritized: return "TooManyUndiacritized";
    case FilterReason::kTooManyPartial: return "TooManyPartial";
    case FilterReason::kTestLeakage: return "TestLeakage";
  }
  return "";
}

FilterVerdict judge(std::string_view text, const FilterThresholds& thresholds) {
  FilterVerdict v;
  for (std::string_view token : split_words(text)) {
    const WordView word = WordView::parse(token);
    if (!word.has_letters()) continue;
    switch (completeness(word)) {
      case Completeness::kNone: ++v.undiacritized_count; break;
      case Completeness::kPartial: ++v.partial_count; break;
      case Completeness::kFull: break;
    }
  }
  if (v.undiacritized_count > thresholds.max_undiacritized) {
    v.reason = FilterReason::kTooManyUndiacritized;
  } else if (v.partial_count >= thresholds.partial_reject_at) {
    v.reason = FilterReason::kTooManyPartial;
  }
  v.kept = v.reason == FilterReason::kOk;
  return v;
}

bool SegmentIndex::insert(const std::string& segment) {
  const std::size_t n = tashkeel::word_count(segment);
  if (n < min_words_) return false;
  segments_.emplace(segment, n);
  return true;
}

std::size_t SegmentIndex::word_count(const std::string& segment) const {
  const auto it = segments_.find(segment);
  return it == segments_.end() ? 0 : it->second;
}

void SegmentIndex::merge(const SegmentIndex& other) {
  for (const auto& [segment, n] : other.segments_) {
    if (n >= min_words_) segments_.emplace(segment, n);
  }
}

SegmentIndex build_segment_index(std::span<const std::string> test_set, const SeparatorTiers& tiers,
                                 std::size_t min_words) {
  SegmentIndex index(min_words);
  for (const std::string& sample : test_set) {
    for (const std::string& segment : split_segments(sample, tiers)) index.insert(segment);
  }
  return index;
}

std::string find_leak(std::string_view text, const SegmentIndex& index, const SeparatorTiers& tiers) {
  for (std::string& segment : split_segments(text, tiers)) {
    if (index.contains(segment)) return segment;
  }
  return {};
}

DedupResult dedup(std::span<const Chunk> train, const SegmentIndex& index, const SeparatorTiers& tiers) {
  DedupResult result;
  for (const Chunk& chunk : train) {
    std::string leak = find_leak(chunk.text, index, tiers);
    if (leak.empty()) {
      result.kept.push_back(chunk);
    } else {
      result.dropped.push_back({chunk, std::move(leak)});
    }
  }
  return result;
}

}  // namespace tashkeel
