#pragma once

// Sample quality filtering by diacritic completeness, and removal of
// training samples that leak test-set segments.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tashkeel/chunker.h"
#include "tashkeel/separators.h"

namespace tashkeel {

enum class FilterReason { kOk, kTooManyUndiacritized, kTooManyPartial, kTestLeakage };

std::string_view name_of(FilterReason reason);

struct FilterThresholds {
  // Reject when more than this many Arabic words carry no mark at all.
  std::size_t max_undiacritized = 2;
  // Reject when at least this many Arabic words are partially marked.
  std::size_t partial_reject_at = 3;
};

struct FilterVerdict {
  bool kept = true;
  FilterReason reason = FilterReason::kOk;
  std::size_t undiacritized_count = 0;
  std::size_t partial_count = 0;
};

// Counts completeness over the Arabic-letter tokens of a sample; other
// tokens are ignored.
FilterVerdict judge(std::string_view text, const FilterThresholds& thresholds = {});
inline FilterVerdict judge(const Chunk& chunk, const FilterThresholds& thresholds = {}) {
  return judge(chunk.text, thresholds);
}

// Undiacritized, whitespace-normalized test-set segments long enough to
// count as leakage.
class SegmentIndex {
 public:
  explicit SegmentIndex(std::size_t min_words = 3) : min_words_(min_words) {}

  // Returns false (and skips) segments shorter than min_words.
  bool insert(const std::string& segment);
  bool contains(const std::string& segment) const { return segments_.count(segment) > 0; }
  std::size_t word_count(const std::string& segment) const;

  std::size_t size() const { return segments_.size(); }
  std::size_t min_words() const { return min_words_; }
  void merge(const SegmentIndex& other);

 private:
  std::size_t min_words_;
  std::unordered_map<std::string, std::size_t> segments_;
};

SegmentIndex build_segment_index(std::span<const std::string> test_set,
                                 const SeparatorTiers& tiers = SeparatorTiers::defaults(),
                                 std::size_t min_words = 3);

struct DroppedChunk {
  Chunk chunk;
  std::string matching_segment;
};

struct DedupResult {
  std::vector<Chunk> kept;
  std::vector<DroppedChunk> dropped;
};

// Drops a chunk iff one of its own separator-delimited, undiacritized
// segments is in the index. Input order is preserved.
DedupResult dedup(std::span<const Chunk> train, const SegmentIndex& index,
                  const SeparatorTiers& tiers = SeparatorTiers::defaults());

// The first of text's segments present in the index, or empty.
std::string find_leak(std::string_view text, const SegmentIndex& index, const SeparatorTiers& tiers);

}  // namespace tashkeel
