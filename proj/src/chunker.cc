#include "tashkeel/chunker.h"

#include <stdexcept>

#include "tashkeel/arabic.h"
#include "tashkeel/errors.h"
#include "tashkeel/utf8.h"

namespace tashkeel {

std::string_view name_of(ChunkFlag flag) {
  switch (flag) {
    case ChunkFlag::kNone: return "none";
    case ChunkFlag::kUndersizedTail: return "undersized_tail";
    case ChunkFlag::kHardCut: return "hard_cut";
  }
  return "";
}

ChunkFlag chunk_flag_from_name(std::string_view name) {
  if (name == "none" || name.empty()) return ChunkFlag::kNone;
  if (name == "undersized_tail") return ChunkFlag::kUndersizedTail;
  if (name == "hard_cut") return ChunkFlag::kHardCut;
  throw FormatError("unknown chunk flag '" + std::string(name) + "'");
}

std::string Chunk::id() const {
  return source_id + ":" + std::to_string(span_begin) + "-" + std::to_string(span_end);
}

std::size_t word_count(std::string_view text) {
  std::size_t n = 0;
  for (const TextRun& run : split_runs(text)) n += run.space ? 0 : 1;
  return n;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
  // Strongest separator tier of the cut after this token, -1 if none.
  int cut_tier;
};

int strongest_tier(std::string_view s, const SeparatorTiers& tiers, int best) {
  utf8::for_each(s, [&](const utf8::Decoded& d, std::string_view) {
    if (!d.valid) return;
    const int t = tiers.tier_of(d.codepoint);
    if (t >= 0 && (best < 0 || t < best)) best = t;
  });
  return best;
}

std::vector<Token> tokenize(std::string_view doc, const SeparatorTiers& tiers) {
  std::vector<Token> tokens;
  for (const TextRun& run : split_runs(doc)) {
    if (run.space) {
      if (!tokens.empty()) tokens.back().cut_tier = strongest_tier(run.text, tiers, tokens.back().cut_tier);
    } else {
      tokens.push_back({run.text, run.offset, strongest_tier(run.text, tiers, -1)});
    }
  }
  return tokens;
}

}  // namespace

std::vector<Chunk> chunk_document(std::string_view doc, std::string_view source_id,
                                  const ChunkOptions& options) {
  if (options.max_words == 0 || options.min_words > options.max_words) {
    throw std::invalid_argument("chunk_document: need 0 < max_words and min_words <= max_words");
  }
  const std::vector<Token> tokens = tokenize(doc, options.tiers);
  if (tokens.empty()) throw EmptyDocumentError("document '" + std::string(source_id) + "' has no words");

  const std::size_t lo = std::max<std::size_t>(options.min_words, 1);
  const std::size_t hi = options.max_words;
  std::vector<Chunk> chunks;
  auto emit = [&](std::size_t begin, std::size_t end, ChunkFlag flag) {
    const Token& first = tokens[begin];
    const Token& last = tokens[end - 1];
    Chunk c;
    c.text = std::string(doc.substr(first.offset, last.offset + last.text.size() - first.offset));
    c.word_count = end - begin;
    c.source_id = std::string(source_id);
    c.span_begin = begin;
    c.span_end = end;
    c.flag = flag;
    chunks.push_back(std::move(c));
  };

  std::size_t start = 0;
  while (tokens.size() - start > hi) {
    // k words go into the chunk; the cut follows token start + k - 1.
    std::size_t best_k = 0;
    int best_tier = -1;
    for (std::size_t k = lo; k <= hi; ++k) {
      const int t = tokens[start + k - 1].cut_tier;
      if (t >= 0 && (best_tier < 0 || t <= best_tier)) {
        best_tier = t;
        best_k = k;
      }
    }
    if (best_tier < 0) {
      emit(start, start + hi, ChunkFlag::kHardCut);
      start += hi;
    } else {
      emit(start, start + best_k, ChunkFlag::kNone);
      start += best_k;
    }
  }
  const std::size_t rest = tokens.size() - start;
  emit(start, tokens.size(), rest < options.min_words ? ChunkFlag::kUndersizedTail : ChunkFlag::kNone);
  return chunks;
}

}  // namespace tashkeel
