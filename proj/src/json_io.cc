#include "tashkeel/json_io.h"

#include "tashkeel/errors.h"

namespace tashkeel {

std::string string_field(const Json& j, std::string_view key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw FormatError("record lacks string field '" + std::string(key) + "'");
  }
  return it->get<std::string>();
}

Json to_json(const Chunk& chunk) {
  return Json{{"id", chunk.id()},
              {"source_id", chunk.source_id},
              {"start", chunk.span_begin},
              {"end", chunk.span_end},
              {"word_count", chunk.word_count},
              {"flag", name_of(chunk.flag)},
              {"text", chunk.text}};
}

Chunk chunk_from_json(const Json& j, std::string_view fallback_id) {
  if (!j.is_object()) throw FormatError("chunk record must be a JSON object");
  Chunk c;
  c.text = string_field(j, "text");
  c.word_count = word_count(c.text);
  try {
    if (j.contains("source_id")) {
      c.source_id = j.at("source_id").get<std::string>();
    } else if (j.contains("id")) {
      c.source_id = j.at("id").get<std::string>();
    } else {
      c.source_id = std::string(fallback_id);
    }
    c.span_begin = j.value("start", std::size_t{0});
    c.span_end = j.value("end", c.span_begin + c.word_count);
    c.flag = chunk_flag_from_name(j.value("flag", std::string("none")));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("chunk record: ") + e.what());
  }
  return c;
}

Json to_json(const FilterVerdict& v) {
  return Json{{"kept", v.kept},
              {"reason", name_of(v.reason)},
              {"undiacritized", v.undiacritized_count},
              {"partial", v.partial_count}};
}

Json to_json(const AlignOp& op) {
  Json j{{"op", name_of(op.kind)}};
  j["ref"] = op.ref_index ? Json(*op.ref_index) : Json(nullptr);
  j["hyp"] = op.hyp_index ? Json(*op.hyp_index) : Json(nullptr);
  return j;
}

Json to_json(const RepairStats& s) {
  return Json{{"total_input_words", s.total_input_words},
              {"matched", s.matched},
              {"substituted", s.substituted},
              {"deleted", s.deleted},
              {"inserted", s.inserted},
              {"hallucination_rate", s.hallucination_rate}};
}

Json to_json(const TemplateRecord& r) {
  return Json{{"system", r.system}, {"input", r.input}, {"output", r.output}};
}

namespace {

Json to_json(const CountPercent& c) { return Json{{"count", c.count}, {"percent", c.percent}}; }

}  // namespace

Json to_json(const OverlapReport& r) {
  return Json{{"total_samples_a", r.total_samples_a},
              {"total_samples_b", r.total_samples_b},
              {"skipped_empty_a", r.skipped_empty_a},
              {"skipped_empty_b", r.skipped_empty_b},
              {"identical_in_a", to_json(r.identical_in_a)},
              {"identical_in_b", to_json(r.identical_in_b)},
              {"above_threshold_in_a", to_json(r.above_threshold_in_a)},
              {"threshold", r.threshold}};
}

Json to_json(const PairCounts& c) {
  return Json{{"der", c.der()},
              {"wer", c.wer()},
              {"counted_chars", c.counted_chars},
              {"wrong_chars", c.wrong_chars},
              {"counted_words", c.counted_words},
              {"wrong_words", c.wrong_words}};
}

Json to_json(const MetricsReport& r) {
  Json grid = Json::object();
  for (const MetricOptions& opts : kAllVariants) {
    const char* nd = opts.include_no_diacritic ? "including_no_diacritic" : "excluding_no_diacritic";
    const char* ce = opts.case_ending ? "with_case_ending" : "without_case_ending";
    grid[nd][ce] = to_json(r.at(opts));
  }
  Json j{{"pairs", r.pairs}, {"metrics", std::move(grid)}};
  j["hallucination_rate"] = r.hallucination_rate ? Json(*r.hallucination_rate) : Json(nullptr);
  return j;
}

Json to_json(const CorpusStats& s) {
  Json sizes = Json::object();
  for (const auto& [size, count] : s.size_distribution) sizes[std::to_string(size)] = count;
  return Json{{"samples", s.samples},
              {"words", s.words},
              {"arabic_words", s.arabic_words},
              {"full_words", s.full_words},
              {"partial_words", s.partial_words},
              {"undiacritized_words", s.undiacritized_words},
              {"coverage_histogram", s.coverage_histogram},
              {"samples_without_arabic", s.samples_without_arabic},
              {"size_distribution", std::move(sizes)}};
}

Json to_json(const NormalizeStats& s) {
  return Json{{"chars_removed", s.chars_removed},
              {"sukun_dropped_madd", s.sukun_dropped_madd},
              {"sukun_dropped_lam", s.sukun_dropped_lam},
              {"stopwords_fixed", s.stopwords_fixed},
              {"iltiqa_resolved", s.iltiqa_resolved},
              {"duplicate_vowels", s.marks.duplicate_vowels},
              {"shadda_sukun_conflicts", s.marks.shadda_sukun_conflicts},
              {"orphan_marks", s.marks.orphan_marks}};
}

}  // namespace tashkeel
