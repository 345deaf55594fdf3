#include "tashkeel/metrics.h"

#include <cstdio>

#include "tashkeel/arabic.h"
#include "tashkeel/errors.h"

namespace tashkeel {

std::size_t variant_index(const MetricOptions& opts) {
  return (opts.include_no_diacritic ? 0 : 2) + (opts.case_ending ? 0 : 1);
}

std::string variant_label(const MetricOptions& opts) {
  std::string label = opts.include_no_diacritic ? "Including No Diacritic" : "Excluding No Diacritic";
  label += opts.case_ending ? ", w/case ending" : ", w/o case ending";
  return label;
}

double PairCounts::der() const {
  return counted_chars ? 100.0 * static_cast<double>(wrong_chars) / static_cast<double>(counted_chars) : 0.0;
}

double PairCounts::wer() const {
  return counted_words ? 100.0 * static_cast<double>(wrong_words) / static_cast<double>(counted_words) : 0.0;
}

PairCounts& PairCounts::operator+=(const PairCounts& o) {
  counted_chars += o.counted_chars;
  wrong_chars += o.wrong_chars;
  counted_words += o.counted_words;
  wrong_words += o.wrong_words;
  return *this;
}

VariantCounts compare_pair_all(std::string_view ref, std::string_view hyp, std::string_view sample_id) {
  const auto ref_words = split_words(ref);
  const auto hyp_words = split_words(hyp);
  auto mismatch = [&](const std::string& what) {
    throw BaseTextMismatchError(std::string(sample_id), what + "; repair the hypothesis first");
  };
  if (ref_words.size() != hyp_words.size()) {
    mismatch("reference has " + std::to_string(ref_words.size()) + " words, hypothesis " +
             std::to_string(hyp_words.size()));
  }

  VariantCounts counts{};
  for (std::size_t w = 0; w < ref_words.size(); ++w) {
    if (strip_diacritics(ref_words[w]) != strip_diacritics(hyp_words[w])) {
      mismatch("word " + std::to_string(w + 1) + " differs: '" + std::string(ref_words[w]) + "' vs '" +
               std::string(hyp_words[w]) + "'");
    }
    const WordView r = WordView::parse(ref_words[w]);
    const WordView h = WordView::parse(hyp_words[w]);
    const auto& rg = r.graphemes();
    const auto& hg = h.graphemes();
    if (rg.size() != hg.size()) mismatch("letter count differs in word " + std::to_string(w + 1));
    if (rg.empty()) continue;

    for (const MetricOptions& opts : kAllVariants) {
      std::size_t counted = 0;
      std::size_t wrong = 0;
      for (std::size_t i = 0; i < rg.size(); ++i) {
        if (!opts.case_ending && i + 1 == rg.size()) continue;
        if (!opts.include_no_diacritic && rg[i].mark.unmarked()) continue;
        ++counted;
        if (rg[i].mark != hg[i].mark) ++wrong;
      }
      PairCounts& c = counts[variant_index(opts)];
      c.counted_chars += counted;
      c.wrong_chars += wrong;
      if (counted > 0) {
        ++c.counted_words;
        if (wrong > 0) ++c.wrong_words;
      }
    }
  }
  return counts;
}

PairCounts compare_pair(std::string_view ref, std::string_view hyp, const MetricOptions& opts,
                        std::string_view sample_id) {
  return compare_pair_all(ref, hyp, sample_id)[variant_index(opts)];
}

void MetricsReport::add(const VariantCounts& counts) {
  for (std::size_t i = 0; i < variants.size(); ++i) variants[i] += counts[i];
  ++pairs;
}

MetricsReport evaluate_corpus(std::span<const EvalPair> pairs) {
  MetricsReport report;
  for (const EvalPair& p : pairs) report.add(compare_pair_all(p.reference, p.hypothesis, p.id));
  return report;
}

std::string MetricsReport::to_table(std::span<const MetricOptions> shown) const {
  std::string out = "| Variant | DER | WER | Letters | Wrong letters | Words | Wrong words |\n";
  out += "|---|---|---|---|---|---|---|\n";
  char buf[256];
  for (const MetricOptions& opts : shown) {
    const PairCounts& c = at(opts);
    std::snprintf(buf, sizeof buf, "| %s | %.4f | %.4f | %zu | %zu | %zu | %zu |\n", variant_label(opts).c_str(),
                  c.der(), c.wer(), c.counted_chars, c.wrong_chars, c.counted_words, c.wrong_words);
    out += buf;
  }
  if (hallucination_rate) {
    std::snprintf(buf, sizeof buf, "Hallucinations: %.4f%%\n", *hallucination_rate);
    out += buf;
  }
  return out;
}

std::string MetricsReport::to_csv(std::span<const MetricOptions> shown) const {
  std::string out =
      "include_no_diacritic,case_ending,der,wer,counted_chars,wrong_chars,counted_words,wrong_words\n";
  char buf[256];
  for (const MetricOptions& opts : shown) {
    const PairCounts& c = at(opts);
    std::snprintf(buf, sizeof buf, "%d,%d,%.6f,%.6f,%zu,%zu,%zu,%zu\n", opts.include_no_diacritic ? 1 : 0,
                  opts.case_ending ? 1 : 0, c.der(), c.wer(), c.counted_chars, c.wrong_chars, c.counted_words,
                  c.wrong_words);
    out += buf;
  }
  return out;
}

}  // namespace tashkeel
