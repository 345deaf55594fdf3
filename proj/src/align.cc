#include "tashkeel/align.h"

#include <algorithm>

#include "tashkeel/arabic.h"
#include "tashkeel/errors.h"

namespace tashkeel {

std::string_view name_of(OpKind kind) {
  switch (kind) {
    case OpKind::kMatch: return "match";
    case OpKind::kSubstitute: return "substitute";
    case OpKind::kDelete: return "delete";
    case OpKind::kInsert: return "insert";
  }
  return "";
}

namespace {

std::vector<std::string> comparison_keys(std::span<const std::string> words) {
  std::vector<std::string> keys;
  keys.reserve(words.size());
  for (const std::string& w : words) keys.push_back(normalize_whitespace(strip_diacritics(w)));
  return keys;
}

double rate_or_zero(const RepairStats& s) {
  return s.total_input_words ? hallucination_rate(s) : 0.0;
}

}  // namespace

Alignment nw_align(std::span<const std::string> ref, std::span<const std::string> hyp,
                   const AlignScoring& scoring) {
  const std::vector<std::string> a = comparison_keys(ref);
  const std::vector<std::string> b = comparison_keys(hyp);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t w = m + 1;
  std::vector<int> dp((n + 1) * w);
  for (std::size_t i = 0; i <= n; ++i) dp[i * w] = static_cast<int>(i) * scoring.gap;
  for (std::size_t j = 0; j <= m; ++j) dp[j] = static_cast<int>(j) * scoring.gap;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const int diag = dp[(i - 1) * w + j - 1] + (a[i - 1] == b[j - 1] ? scoring.match : scoring.mismatch);
      const int up = dp[(i - 1) * w + j] + scoring.gap;
      const int left = dp[i * w + j - 1] + scoring.gap;
      dp[i * w + j] = std::max({diag, up, left});
    }
  }

  Alignment result;
  result.score = dp[n * w + m];
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const int here = dp[i * w + j];
    if (i > 0 && j > 0) {
      const bool same = a[i - 1] == b[j - 1];
      if (here == dp[(i - 1) * w + j - 1] + (same ? scoring.match : scoring.mismatch)) {
        --i, --j;
        result.ops.push_back({same ? OpKind::kMatch : OpKind::kSubstitute, i, j});
        continue;
      }
    }
    if (i > 0 && here == dp[(i - 1) * w + j] + scoring.gap) {
      --i;
      result.ops.push_back({OpKind::kDelete, i, std::nullopt});
    } else {
      --j;
      result.ops.push_back({OpKind::kInsert, std::nullopt, j});
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

int alignment_score(std::span<const AlignOp> ops, std::span<const std::string> ref,
                    std::span<const std::string> hyp, const AlignScoring& scoring) {
  int score = 0;
  for (const AlignOp& op : ops) {
    if (op.kind == OpKind::kDelete || op.kind == OpKind::kInsert) {
      score += scoring.gap;
      continue;
    }
    const bool same = normalize_whitespace(strip_diacritics(ref[*op.ref_index])) ==
                      normalize_whitespace(strip_diacritics(hyp[*op.hyp_index]));
    score += same ? scoring.match : scoring.mismatch;
  }
  return score;
}

RepairStats& RepairStats::operator+=(const RepairStats& o) {
  total_input_words += o.total_input_words;
  matched += o.matched;
  substituted += o.substituted;
  deleted += o.deleted;
  inserted += o.inserted;
  hallucination_rate = rate_or_zero(*this);
  return *this;
}

RepairResult repair(std::string_view input_text, std::string_view output_text, const AlignScoring& scoring) {
  std::vector<std::string> ref;
  std::vector<std::string> hyp;
  for (std::string_view w : split_words(input_text)) ref.emplace_back(w);
  for (std::string_view w : split_words(output_text)) hyp.emplace_back(w);

  RepairResult result;
  result.ops = nw_align(ref, hyp, scoring).ops;
  RepairStats& stats = result.stats;
  stats.total_input_words = ref.size();
  for (const AlignOp& op : result.ops) {
    const std::string* word = nullptr;
    switch (op.kind) {
      case OpKind::kMatch:
        ++stats.matched;
        word = &hyp[*op.hyp_index];
        break;
      case OpKind::kSubstitute:
        ++stats.substituted;
        word = &ref[*op.ref_index];
        break;
      case OpKind::kDelete:
        ++stats.deleted;
        word = &ref[*op.ref_index];
        break;
      case OpKind::kInsert:
        ++stats.inserted;
        break;
    }
    if (!word) continue;
    if (!result.repaired.empty()) result.repaired += ' ';
    result.repaired += *word;
  }
  stats.hallucination_rate = rate_or_zero(stats);
  return result;
}

double hallucination_rate(const RepairStats& stats) {
  if (stats.total_input_words == 0) throw EmptyInputError("hallucination rate of an empty input");
  return 100.0 * static_cast<double>(stats.substituted + stats.deleted) /
         static_cast<double>(stats.total_input_words);
}

}  // namespace tashkeel
