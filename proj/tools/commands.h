#pragma once

#include <string>

#include "CLI11.hpp"
#include "tashkeel/pipeline.h"

namespace tashkeel::cli {

struct Globals {
  std::string config_path;
  unsigned jobs = 1;
};

// Command-line values that override the config file when given.
struct Overrides {
  std::size_t min_words = 0, max_words = 0, max_undiacritized = 0, max_partial = 0;
  double similarity_threshold = 0.0;
  CLI::Option* min_words_opt = nullptr;
  CLI::Option* max_words_opt = nullptr;
  CLI::Option* max_undiacritized_opt = nullptr;
  CLI::Option* max_partial_opt = nullptr;
  CLI::Option* similarity_opt = nullptr;

  void add_chunking(CLI::App* cmd);
  void add_filter(CLI::App* cmd);
  void add_similarity(CLI::App* cmd);
};

// Defaults, then the --config file, then explicit flags. Invalid settings
// throw std::invalid_argument.
PipelineConfig resolve_config(const Globals& globals, const Overrides& overrides);

void add_dataset_commands(CLI::App& app, Globals& globals);
void add_evaluation_commands(CLI::App& app, Globals& globals);

}  // namespace tashkeel::cli
