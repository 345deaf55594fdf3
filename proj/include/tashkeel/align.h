#pragma once

// Word-level global alignment of a model's output against its input, and
// the repair that removes hallucinated words from the output.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tashkeel {

enum class OpKind { kMatch, kSubstitute, kDelete, kInsert };

std::string_view name_of(OpKind kind);

struct AlignOp {
  OpKind kind = OpKind::kMatch;
  // Delete carries only ref_index, Insert only hyp_index.
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  bool operator==(const AlignOp&) const = default;
};

struct AlignScoring {
  int match = 1;
  int mismatch = -1;
  int gap = -1;
};

struct Alignment {
  std::vector<AlignOp> ops;
  int score = 0;
};

// Needleman-Wunsch over words compared by their undiacritized, trimmed
// forms. Traceback runs from the end and prefers Match, Substitute, Delete,
// Insert among equally scoring predecessors.
Alignment nw_align(std::span<const std::string> ref, std::span<const std::string> hyp,
                   const AlignScoring& scoring = {});

// Score of an arbitrary trace under the same comparison.
int alignment_score(std::span<const AlignOp> ops, std::span<const std::string> ref,
                    std::span<const std::string> hyp, const AlignScoring& scoring = {});

struct RepairStats {
  std::size_t total_input_words = 0;
  std::size_t matched = 0;
  std::size_t substituted = 0;
  std::size_t deleted = 0;
  std::size_t inserted = 0;
  // 100 * (substituted + deleted) / total_input_words; 0 for empty input.
  double hallucination_rate = 0.0;

  RepairStats& operator+=(const RepairStats& o);
};

struct RepairResult {
  std::string repaired;
  RepairStats stats;
  std::vector<AlignOp> ops;
};

// Aligns whitespace tokens of input and output and rebuilds the output.
// Matched words keep the model's diacritics; any other input word is
// restored as given and extra output words are dropped. The result strips
// to the whitespace-normalized input.
RepairResult repair(std::string_view input_text, std::string_view output_text,
                    const AlignScoring& scoring = {});

// Throws EmptyInputError when stats cover no input words.
double hallucination_rate(const RepairStats& stats);

}  // namespace tashkeel
