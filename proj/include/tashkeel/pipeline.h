#pragma once

// Settings and record types shared by the dataset-production and
// evaluation workflows.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "tashkeel/chunker.h"
#include "tashkeel/filter.h"
#include "tashkeel/normalize.h"

namespace tashkeel {

extern const std::string_view kDefaultSystemPrompt;

struct PipelineConfig {
  ChunkOptions chunking;
  FilterThresholds filter;
  double similarity_threshold = 0.5;
  // Empty paths select the built-in tables.
  std::string stopword_lexicon_path;
  std::string iltiqa_exceptions_path;
  std::string system_prompt{kDefaultSystemPrompt};

  // Throws std::invalid_argument on min_words > max_words or a threshold
  // outside [0, 1].
  void validate() const;
  // Reads the lexicon and exception files, if configured.
  NormalizeConfig normalize_config() const;
};

// Keys: min_words, max_words, max_undiacritized, max_partial,
// similarity_threshold, separator_tiers (array of strings),
// stopword_lexicon, iltiqa_exceptions, system_prompt. Missing keys keep
// their defaults; unknown keys are a FormatError.
PipelineConfig load_pipeline_config(const std::string& path);
PipelineConfig parse_pipeline_config(std::string_view json_text);

// One fine-tuning example: the model is asked to diacritize input and the
// expected answer is output.
struct TemplateRecord {
  std::string system;
  std::string input;
  std::string output;
};

// input is output with all diacritics removed.
TemplateRecord templatize(std::string_view diacritized, std::string_view system = kDefaultSystemPrompt);

struct CorpusStats {
  std::size_t samples = 0;
  std::size_t words = 0;
  std::size_t arabic_words = 0;
  std::size_t full_words = 0;
  std::size_t partial_words = 0;
  std::size_t undiacritized_words = 0;
  // Samples binned by the share of their Arabic words that are fully
  // diacritized: bin i covers [10i, 10i+10) percent, bin 9 includes 100.
  std::array<std::size_t, 10> coverage_histogram{};
  std::size_t samples_without_arabic = 0;
  // Sample word count -> number of samples.
  std::map<std::size_t, std::size_t> size_distribution;

  void add(std::string_view sample);
  CorpusStats& operator+=(const CorpusStats& o);
  std::string to_table() const;
};

}  // namespace tashkeel
