#include <cstdlib>
#include <iostream>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "cli_io.h"
#include "commands.h"
#include "tashkeel/errors.h"

namespace {

// TASHKEEL_LOG selects the level: trace, debug, info, warn (default),
// error, critical or off.
void setup_logging() {
  auto logger = spdlog::stderr_logger_mt("tashkeel");
  logger->set_pattern("tashkeel: [%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("TASHKEEL_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tashkeel::cli;
  setup_logging();

  Globals globals;
  CLI::App app{"Arabic diacritization dataset and evaluation tool", "tashkeel"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", globals.config_path, "JSON settings file");
  app.add_option("-j,--jobs", globals.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  add_dataset_commands(app, globals);
  add_evaluation_commands(app, globals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const std::invalid_argument& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitData;
  }
  return 0;
}
