#pragma once

// Splits documents into training samples of min..max words, cutting at the
// strongest available separator so clauses stay together.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/separators.h"

namespace tashkeel {

enum class ChunkFlag {
  kNone,
  // Last chunk of a document with fewer than min words.
  kUndersizedTail,
  // No separator inside the cut window; cut at max words.
  kHardCut,
};

std::string_view name_of(ChunkFlag flag);
ChunkFlag chunk_flag_from_name(std::string_view name);

struct Chunk {
  std::string text;
  std::size_t word_count = 0;
  std::string source_id;
  // Word offsets [span_begin, span_end) in the source document.
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
  ChunkFlag flag = ChunkFlag::kNone;

  // "<source_id>:<span_begin>-<span_end>"; unique within a corpus.
  std::string id() const;
};

struct ChunkOptions {
  std::size_t min_words = 50;
  std::size_t max_words = 60;
  SeparatorTiers tiers = SeparatorTiers::defaults();
};

// Accumulates words until the buffer holds more than max_words, then cuts
// after the word k (min_words <= k <= max_words) carrying the strongest
// separator tier, preferring the largest k within a tier. A cut position
// lies right after a token containing a separator character or followed by
// whitespace containing one (a line break). Without any separator in the
// window the chunk is cut at max_words and flagged kHardCut. Chunk text is
// the exact source slice from its first to its last word.
//
// Throws EmptyDocumentError if doc has no words, std::invalid_argument if
// min_words > max_words or max_words == 0.
std::vector<Chunk> chunk_document(std::string_view doc, std::string_view source_id,
                                  const ChunkOptions& options = {});

// Number of maximal non-whitespace runs.
std::size_t word_count(std::string_view text);

}  // namespace tashkeel
