// Corpus preparation: clean, chunk, filter, dedup, templatize, stats,
// overlap.

#include <filesystem>
#include <memory>

#include <spdlog/spdlog.h>

#include "cli_io.h"
#include "commands.h"
#include "tashkeel/chunker.h"
#include "tashkeel/errors.h"
#include "tashkeel/filter.h"
#include "tashkeel/normalize.h"
#include "tashkeel/overlap.h"

namespace tashkeel::cli {

void Overrides::add_chunking(CLI::App* cmd) {
  min_words_opt = cmd->add_option("--min-words", min_words, "Smallest chunk the separator search may produce");
  max_words_opt = cmd->add_option("--max-words", max_words, "Largest chunk size");
}

void Overrides::add_filter(CLI::App* cmd) {
  max_undiacritized_opt =
      cmd->add_option("--max-undiacritized", max_undiacritized, "Reject above this many bare Arabic words");
  max_partial_opt = cmd->add_option("--max-partial", max_partial, "Reject at this many partially marked words");
}

void Overrides::add_similarity(CLI::App* cmd) {
  similarity_opt = cmd->add_option("--similarity-threshold", similarity_threshold,
                                   "Count samples whose similarity exceeds this value");
}

namespace {

bool given(const CLI::Option* opt) { return opt && opt->count() > 0; }

}  // namespace

PipelineConfig resolve_config(const Globals& globals, const Overrides& o) {
  PipelineConfig c = globals.config_path.empty() ? PipelineConfig{} : load_pipeline_config(globals.config_path);
  if (given(o.min_words_opt)) c.chunking.min_words = o.min_words;
  if (given(o.max_words_opt)) c.chunking.max_words = o.max_words;
  if (given(o.max_undiacritized_opt)) c.filter.max_undiacritized = o.max_undiacritized;
  if (given(o.max_partial_opt)) c.filter.partial_reject_at = o.max_partial;
  if (given(o.similarity_opt)) c.similarity_threshold = o.similarity_threshold;
  c.validate();
  return c;
}

namespace {

struct IoArgs {
  std::string input = "-";
  std::string output = "-";
};

void add_io(CLI::App* cmd, IoArgs& io) {
  cmd->add_option("-i,--input", io.input, "Input file, - for stdin")->capture_default_str();
  cmd->add_option("-o,--output", io.output, "Output file, - for stdout")->capture_default_str();
}

// Chunk records echo through filter and dedup unchanged, so downstream
// stages see whatever fields upstream wrote.
struct ChunkLine {
  std::string raw;
  Chunk chunk;
};

ChunkLine parse_chunk_line(const Item& item, const std::string& text_field) {
  Json j = parse_record(item);
  if (text_field != "text") {
    j["text"] = string_field_at(j, text_field, item.line);
  }
  try {
    return {item.text, chunk_from_json(j, "line" + std::to_string(item.line))};
  } catch (const FormatError& e) {
    throw FormatError("line " + std::to_string(item.line) + ": " + e.what());
  }
}

// -------------------------------------------------------------------------

struct CleanArgs {
  IoArgs io;
  bool no_style = false, no_stopwords = false, no_iltiqa = false;
  std::string stopword_lexicon, iltiqa_exceptions, stats_path;
};

void run_clean(const Globals& g, const CleanArgs& a) {
  PipelineConfig pc = resolve_config(g, {});
  if (!a.stopword_lexicon.empty()) pc.stopword_lexicon_path = a.stopword_lexicon;
  if (!a.iltiqa_exceptions.empty()) pc.iltiqa_exceptions_path = a.iltiqa_exceptions;
  NormalizeConfig nc = pc.normalize_config();
  nc.enable_style_unification = !a.no_style;
  nc.enable_stopword_fix = !a.no_stopwords;
  nc.enable_iltiqa = !a.no_iltiqa;

  Input in(a.io.input);
  Output out(a.io.output);
  NormalizeStats total;
  std::size_t lines = 0;
  ordered_map(
      line_source(in.stream(), false), g.jobs, [&](const Item& item) { return clean_text(item.text, nc); },
      [&](NormalizeResult r) {
        out.stream() << r.text << '\n';
        total += r.stats;
        ++lines;
      });
  out.close();
  spdlog::info("clean: {} lines, {} characters removed, {} stopwords fixed, {} iltiqa resolved", lines,
               total.chars_removed, total.stopwords_fixed, total.iltiqa_resolved);
  if (!a.stats_path.empty()) write_text_file(a.stats_path, to_json(total).dump(2) + "\n");
}

// -------------------------------------------------------------------------

struct ChunkArgs {
  IoArgs io;
  Overrides overrides;
  bool jsonl = false;
  std::string text_field = "text";
  std::string source_id;
};

void run_chunk(const Globals& g, const ChunkArgs& a) {
  const PipelineConfig pc = resolve_config(g, a.overrides);
  std::string stem = a.source_id;
  if (stem.empty()) stem = a.io.input == "-" ? "stdin" : std::filesystem::path(a.io.input).stem().string();

  Input in(a.io.input);
  Output out(a.io.output);
  std::size_t docs = 0, chunks = 0, tails = 0, hard = 0, skipped = 0;
  ordered_map(
      a.jsonl ? line_source(in.stream(), true) : document_source(in.stream()), g.jobs,
      [&](const Item& item) -> std::vector<Chunk> {
        std::string id, text;
        if (a.jsonl) {
          const Json j = parse_record(item);
          id = record_id(j, item.line);
          text = string_field_at(j, a.text_field, item.line);
        } else {
          id = stem + "/" + std::to_string(item.ordinal);
          text = item.text;
        }
        try {
          return chunk_document(text, id, pc.chunking);
        } catch (const EmptyDocumentError&) {
          return {};
        }
      },
      [&](std::vector<Chunk> result) {
        ++docs;
        if (result.empty()) ++skipped;
        for (const Chunk& c : result) {
          out.stream() << to_json(c).dump() << '\n';
          ++chunks;
          tails += c.flag == ChunkFlag::kUndersizedTail;
          hard += c.flag == ChunkFlag::kHardCut;
        }
      });
  out.close();
  if (skipped) spdlog::warn("chunk: skipped {} documents without words", skipped);
  spdlog::info("chunk: {} documents -> {} chunks ({} undersized tails, {} hard cuts)", docs, chunks, tails, hard);
}

// -------------------------------------------------------------------------

struct FilterArgs {
  IoArgs io;
  Overrides overrides;
  std::string text_field = "text";
  std::string drop_log;
};

void run_filter(const Globals& g, const FilterArgs& a) {
  const PipelineConfig pc = resolve_config(g, a.overrides);
  Input in(a.io.input);
  Output out(a.io.output);
  std::unique_ptr<Output> log;
  if (!a.drop_log.empty()) log = std::make_unique<Output>(a.drop_log);
  std::size_t kept = 0, dropped = 0;
  ordered_map(
      line_source(in.stream(), true), g.jobs,
      [&](const Item& item) {
        ChunkLine cl = parse_chunk_line(item, a.text_field);
        const FilterVerdict v = judge(cl.chunk, pc.filter);
        return std::pair{std::move(cl), v};
      },
      [&](std::pair<ChunkLine, FilterVerdict> r) {
        const auto& [cl, v] = r;
        if (v.kept) {
          out.stream() << cl.raw << '\n';
          ++kept;
          return;
        }
        ++dropped;
        if (log) {
          Json entry{{"id", cl.chunk.id()}};
          entry.update(to_json(v));
          entry.erase("kept");
          log->stream() << entry.dump() << '\n';
        }
      });
  out.close();
  if (log) log->close();
  spdlog::info("filter: kept {}, dropped {}", kept, dropped);
}

// -------------------------------------------------------------------------

struct DedupArgs {
  IoArgs io;
  std::string text_field = "text";
  std::string test_path;
  std::string test_field;
  std::string drop_log;
  std::size_t min_segment_words = 3;
};

void run_dedup(const Globals& g, const DedupArgs& a) {
  const PipelineConfig pc = resolve_config(g, {});
  const std::vector<std::string> test = read_samples(a.test_path, a.test_field);
  const SegmentIndex index = build_segment_index(test, pc.chunking.tiers, a.min_segment_words);
  spdlog::info("dedup: indexed {} test segments from {} samples", index.size(), test.size());

  Input in(a.io.input);
  Output out(a.io.output);
  std::unique_ptr<Output> log;
  if (!a.drop_log.empty()) log = std::make_unique<Output>(a.drop_log);
  std::size_t kept = 0, dropped = 0;
  ordered_map(
      line_source(in.stream(), true), g.jobs,
      [&](const Item& item) {
        ChunkLine cl = parse_chunk_line(item, a.text_field);
        std::string leak = find_leak(cl.chunk.text, index, pc.chunking.tiers);
        return std::pair{std::move(cl), std::move(leak)};
      },
      [&](std::pair<ChunkLine, std::string> r) {
        if (r.second.empty()) {
          out.stream() << r.first.raw << '\n';
          ++kept;
          return;
        }
        ++dropped;
        if (log) {
          log->stream() << Json{{"id", r.first.chunk.id()},
                                {"reason", name_of(FilterReason::kTestLeakage)},
                                {"matching_segment", r.second}}
                               .dump()
                        << '\n';
        }
      });
  out.close();
  if (log) log->close();
  spdlog::info("dedup: kept {}, dropped {}", kept, dropped);
}

// -------------------------------------------------------------------------

struct TemplatizeArgs {
  IoArgs io;
  std::string text_field = "text";
  bool plain = false;
  std::string system_prompt;
  CLI::Option* system_opt = nullptr;
};

void run_templatize(const Globals& g, const TemplatizeArgs& a) {
  PipelineConfig pc = resolve_config(g, {});
  if (given(a.system_opt)) pc.system_prompt = a.system_prompt;
  Input in(a.io.input);
  Output out(a.io.output);
  std::size_t n = 0;
  ordered_map(
      line_source(in.stream(), true), g.jobs,
      [&](const Item& item) {
        std::string id, text;
        if (a.plain) {
          id = "line" + std::to_string(item.line);
          text = item.text;
        } else {
          const Json j = parse_record(item);
          id = record_id(j, item.line);
          text = string_field_at(j, a.text_field, item.line);
        }
        Json record{{"id", id}};
        record.update(to_json(templatize(text, pc.system_prompt)));
        return record.dump();
      },
      [&](std::string line) {
        out.stream() << line << '\n';
        ++n;
      });
  out.close();
  spdlog::info("templatize: {} records", n);
}

// -------------------------------------------------------------------------

struct StatsArgs {
  IoArgs io;
  std::string text_field = "text";
  bool plain = false;
  std::string json_path;
};

void run_stats(const Globals& g, const StatsArgs& a) {
  Input in(a.io.input);
  CorpusStats total;
  ordered_map(
      line_source(in.stream(), !a.plain), g.jobs,
      [&](const Item& item) {
        CorpusStats s;
        s.add(a.plain ? item.text : string_field_at(parse_record(item), a.text_field, item.line));
        return s;
      },
      [&](CorpusStats s) { total += s; });
  Output out(a.io.output);
  out.stream() << total.to_table();
  out.close();
  if (!a.json_path.empty()) write_text_file(a.json_path, to_json(total).dump(2) + "\n");
}

// -------------------------------------------------------------------------

struct OverlapArgs {
  Overrides overrides;
  std::string a_path, b_path, a_field, b_field;
  std::string name_a = "A", name_b = "B";
  std::string output = "-";
  std::string json_path;
};

void run_overlap(const Globals& g, const OverlapArgs& a) {
  const PipelineConfig pc = resolve_config(g, a.overrides);
  const std::vector<std::string> da = read_samples(a.a_path, a.a_field);
  const std::vector<std::string> db = read_samples(a.b_path, a.b_field);
  OverlapReport report;
  try {
    report = analyze(da, db, pc.similarity_threshold, pc.chunking.tiers);
  } catch (const std::invalid_argument& e) {
    // An empty dataset is bad data, not bad usage.
    throw FormatError(e.what());
  }
  if (report.skipped_empty_a || report.skipped_empty_b) {
    spdlog::warn("overlap: skipped {} empty samples in {}, {} in {}", report.skipped_empty_a, a.name_a,
                 report.skipped_empty_b, a.name_b);
  }
  Output out(a.output);
  out.stream() << report.to_table(a.name_a, a.name_b);
  out.close();
  if (!a.json_path.empty()) {
    Json j = to_json(report);
    j["name_a"] = a.name_a;
    j["name_b"] = a.name_b;
    write_text_file(a.json_path, j.dump(2) + "\n");
  }
}

}  // namespace

void add_dataset_commands(CLI::App& app, Globals& g) {
  {
    auto args = std::make_shared<CleanArgs>();
    auto* cmd = app.add_subcommand("clean", "Normalize raw text line by line");
    add_io(cmd, args->io);
    cmd->add_flag("--no-style", args->no_style, "Skip sukun style unification");
    cmd->add_flag("--no-stopwords", args->no_stopwords, "Skip the stopword lexicon fix");
    cmd->add_flag("--no-iltiqa", args->no_iltiqa, "Skip resolution of adjacent sukuns");
    cmd->add_option("--stopword-lexicon", args->stopword_lexicon, "Lexicon TSV replacing the built-in one");
    cmd->add_option("--iltiqa-exceptions", args->iltiqa_exceptions, "Exception TSV replacing the built-in one");
    cmd->add_option("--stats", args->stats_path, "Write normalization counts as JSON");
    cmd->callback([&g, args] { run_clean(g, *args); });
  }
  {
    auto args = std::make_shared<ChunkArgs>();
    auto* cmd = app.add_subcommand("chunk", "Split documents into JSONL chunks");
    add_io(cmd, args->io);
    args->overrides.add_chunking(cmd);
    cmd->add_flag("--jsonl", args->jsonl, "Input is JSONL documents instead of blank-line separated text");
    cmd->add_option("--text-field", args->text_field, "Document text field for --jsonl")->capture_default_str();
    cmd->add_option("--source-id", args->source_id, "Prefix of plain-text document ids");
    cmd->callback([&g, args] { run_chunk(g, *args); });
  }
  {
    auto args = std::make_shared<FilterArgs>();
    auto* cmd = app.add_subcommand("filter", "Drop chunks with incomplete diacritization");
    add_io(cmd, args->io);
    args->overrides.add_filter(cmd);
    cmd->add_option("--text-field", args->text_field, "Chunk text field")->capture_default_str();
    cmd->add_option("--drop-log", args->drop_log, "Write one JSONL line per dropped chunk");
    cmd->callback([&g, args] { run_filter(g, *args); });
  }
  {
    auto args = std::make_shared<DedupArgs>();
    auto* cmd = app.add_subcommand("dedup", "Drop chunks sharing a segment with a test set");
    add_io(cmd, args->io);
    cmd->add_option("--test", args->test_path, "Test set file")->required();
    cmd->add_option("--test-field", args->test_field, "JSONL field of test samples; plain lines when empty");
    cmd->add_option("--text-field", args->text_field, "Chunk text field")->capture_default_str();
    cmd->add_option("--min-segment-words", args->min_segment_words, "Shortest test segment that counts")
        ->capture_default_str();
    cmd->add_option("--drop-log", args->drop_log, "Write one JSONL line per dropped chunk");
    cmd->callback([&g, args] { run_dedup(g, *args); });
  }
  {
    auto args = std::make_shared<TemplatizeArgs>();
    auto* cmd = app.add_subcommand("templatize", "Turn chunks into system/input/output records");
    add_io(cmd, args->io);
    cmd->add_option("--text-field", args->text_field, "Chunk text field")->capture_default_str();
    cmd->add_flag("--plain", args->plain, "Input is one sample per line");
    args->system_opt = cmd->add_option("--system-prompt", args->system_prompt, "Instruction text");
    cmd->callback([&g, args] { run_templatize(g, *args); });
  }
  {
    auto args = std::make_shared<StatsArgs>();
    auto* cmd = app.add_subcommand("stats", "Word counts and diacritic coverage of a corpus");
    add_io(cmd, args->io);
    cmd->add_option("--text-field", args->text_field, "Sample text field")->capture_default_str();
    cmd->add_flag("--plain", args->plain, "Input is one sample per line");
    cmd->add_option("--json", args->json_path, "Also write the statistics as JSON");
    cmd->callback([&g, args] { run_stats(g, *args); });
  }
  {
    auto args = std::make_shared<OverlapArgs>();
    auto* cmd = app.add_subcommand("overlap", "Segment overlap between two datasets");
    cmd->add_option("--a", args->a_path, "Dataset A")->required();
    cmd->add_option("--b", args->b_path, "Dataset B")->required();
    cmd->add_option("--a-field", args->a_field, "JSONL field of A; plain lines when empty");
    cmd->add_option("--b-field", args->b_field, "JSONL field of B; plain lines when empty");
    cmd->add_option("--name-a", args->name_a, "Label of A")->capture_default_str();
    cmd->add_option("--name-b", args->name_b, "Label of B")->capture_default_str();
    cmd->add_option("-o,--output", args->output, "Table output")->capture_default_str();
    cmd->add_option("--json", args->json_path, "Also write the report as JSON");
    args->overrides.add_similarity(cmd);
    cmd->callback([&g, args] { run_overlap(g, *args); });
  }
}

}  // namespace tashkeel::cli
