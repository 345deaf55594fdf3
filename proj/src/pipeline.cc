#include "tashkeel/pipeline.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tashkeel/arabic.h"
#include "tashkeel/errors.h"
#include "tashkeel/json_io.h"
#include "tashkeel/utf8.h"

namespace tashkeel {

const std::string_view kDefaultSystemPrompt =
    "You are an expert in Arabic diacritization (tashkeel). Add the complete "
    "diacritics to the Arabic text given by the user. Return the same text with "
    "the same words in the same order, changing nothing but the diacritics.";

void PipelineConfig::validate() const {
  if (chunking.max_words == 0 || chunking.min_words > chunking.max_words) {
    throw std::invalid_argument("config: need 0 < max_words and min_words <= max_words");
  }
  if (!(similarity_threshold >= 0.0 && similarity_threshold <= 1.0)) {
    throw std::invalid_argument("config: similarity_threshold must lie in [0, 1]");
  }
}

NormalizeConfig PipelineConfig::normalize_config() const {
  NormalizeConfig config = NormalizeConfig::defaults();
  if (!stopword_lexicon_path.empty()) config.stopword_lexicon = load_stopword_lexicon_file(stopword_lexicon_path);
  if (!iltiqa_exceptions_path.empty()) {
    config.iltiqa_exceptions = load_iltiqa_exceptions_file(iltiqa_exceptions_path);
  }
  return config;
}

PipelineConfig parse_pipeline_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("config: top level must be an object");
  PipelineConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "min_words") {
        config.chunking.min_words = value.get<std::size_t>();
      } else if (key == "max_words") {
        config.chunking.max_words = value.get<std::size_t>();
      } else if (key == "max_undiacritized") {
        config.filter.max_undiacritized = value.get<std::size_t>();
      } else if (key == "max_partial") {
        config.filter.partial_reject_at = value.get<std::size_t>();
      } else if (key == "similarity_threshold") {
        config.similarity_threshold = value.get<double>();
      } else if (key == "separator_tiers") {
        std::vector<std::u32string> tiers;
        for (const auto& t : value) tiers.push_back(utf8::to_u32(t.get<std::string>()));
        config.chunking.tiers = SeparatorTiers(std::move(tiers));
      } else if (key == "stopword_lexicon") {
        config.stopword_lexicon_path = value.get<std::string>();
      } else if (key == "iltiqa_exceptions") {
        config.iltiqa_exceptions_path = value.get<std::string>();
      } else if (key == "system_prompt") {
        config.system_prompt = value.get<std::string>();
      } else {
        throw FormatError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return config;
}

PipelineConfig load_pipeline_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pipeline_config(buf.str());
}

TemplateRecord templatize(std::string_view diacritized, std::string_view system) {
  return {std::string(system), strip_diacritics(diacritized), std::string(diacritized)};
}

void CorpusStats::add(std::string_view sample) {
  ++samples;
  std::size_t n_words = 0;
  std::size_t n_arabic = 0;
  std::size_t n_full = 0;
  for (std::string_view token : split_words(sample)) {
    ++n_words;
    const WordView word = WordView::parse(token);
    if (!word.has_letters()) continue;
    ++n_arabic;
    switch (completeness(word)) {
      case Completeness::kFull: ++n_full; break;
      case Completeness::kPartial: ++partial_words; break;
      case Completeness::kNone: ++undiacritized_words; break;
    }
  }
  words += n_words;
  arabic_words += n_arabic;
  full_words += n_full;
  ++size_distribution[n_words];
  if (n_arabic == 0) {
    ++samples_without_arabic;
    return;
  }
  const std::size_t bin = std::min<std::size_t>(9, n_full * 10 / n_arabic);
  ++coverage_histogram[bin];
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& o) {
  samples += o.samples;
  words += o.words;
  arabic_words += o.arabic_words;
  full_words += o.full_words;
  partial_words += o.partial_words;
  undiacritized_words += o.undiacritized_words;
  for (std::size_t i = 0; i < coverage_histogram.size(); ++i) coverage_histogram[i] += o.coverage_histogram[i];
  samples_without_arabic += o.samples_without_arabic;
  for (const auto& [size, count] : o.size_distribution) size_distribution[size] += count;
  return *this;
}

std::string CorpusStats::to_table() const {
  std::string out;
  char buf[128];
  auto line = [&](const char* name, std::size_t value) {
    std::snprintf(buf, sizeof buf, "%-24s %zu\n", name, value);
    out += buf;
  };
  line("samples", samples);
  line("words", words);
  line("arabic words", arabic_words);
  line("  fully diacritized", full_words);
  line("  partially diacritized", partial_words);
  line("  undiacritized", undiacritized_words);
  out += "\nfull-word coverage per sample\n";
  for (std::size_t i = 0; i < coverage_histogram.size(); ++i) {
    std::snprintf(buf, sizeof buf, "  %3zu-%3zu%%  %zu\n", i * 10, i == 9 ? 100 : i * 10 + 9, coverage_histogram[i]);
    out += buf;
  }
  line("  no arabic words", samples_without_arabic);
  out += "\nsample size (words)\n";
  for (const auto& [size, count] : size_distribution) {
    std::snprintf(buf, sizeof buf, "  %5zu  %zu\n", size, count);
    out += buf;
  }
  return out;
}

}  // namespace tashkeel
