// Model-output handling: repair, eval, baseline train / predict.

#include <fstream>
#include <memory>

#include <spdlog/spdlog.h>

#include "cli_io.h"
#include "commands.h"
#include "tashkeel/align.h"
#include "tashkeel/arabic.h"
#include "tashkeel/baseline.h"
#include "tashkeel/errors.h"
#include "tashkeel/metrics.h"

namespace tashkeel::cli {
namespace {

struct RepairArgs {
  std::string input = "-", output = "-";
  std::string input_field = "input", output_field = "output";
  std::string summary_path;
};

void run_repair(const Globals& g, const RepairArgs& a) {
  Input in(a.input);
  Output out(a.output);
  RepairStats total;
  ordered_map(
      line_source(in.stream(), true), g.jobs,
      [&](const Item& item) {
        const Json j = parse_record(item);
        const RepairResult r = repair(string_field_at(j, a.input_field, item.line),
                                      string_field_at(j, a.output_field, item.line));
        Json ops = Json::array();
        for (const AlignOp& op : r.ops) ops.push_back(to_json(op));
        Json record{{"id", record_id(j, item.line)},
                    {"repaired", r.repaired},
                    {"ops", std::move(ops)},
                    {"stats", to_json(r.stats)}};
        return std::pair{record.dump(), r.stats};
      },
      [&](std::pair<std::string, RepairStats> r) {
        out.stream() << r.first << '\n';
        total += r.second;
      });
  out.close();
  spdlog::info("repair: {} input words, hallucination rate {:.4f}%", total.total_input_words,
               total.hallucination_rate);
  if (!a.summary_path.empty()) write_text_file(a.summary_path, to_json(total).dump(2) + "\n");
}

// -------------------------------------------------------------------------

struct EvalArgs {
  std::string input;
  std::string reference_path, hypothesis_path;
  std::string reference_field = "reference", hypothesis_field = "hypothesis", input_field = "input";
  bool repair_first = false;
  std::string output = "-", json_path, csv_path;
  // Unset shows both settings of the switch.
  std::optional<bool> case_ending, include_no_diacritic;
};

// Pairs from either a JSONL file or two line-parallel plain files.
struct RawPair {
  std::string id;
  std::string reference, hypothesis;
  // Undiacritized model input, when known; used for repair.
  std::optional<std::string> input;
};

std::vector<RawPair> read_pairs(const EvalArgs& a) {
  std::vector<RawPair> pairs;
  if (!a.input.empty()) {
    Input in(a.input);
    for (const Item& item : read_all(line_source(in.stream(), true))) {
      const Json j = parse_record(item);
      RawPair p{record_id(j, item.line), string_field_at(j, a.reference_field, item.line),
                string_field_at(j, a.hypothesis_field, item.line), std::nullopt};
      if (j.contains(a.input_field)) p.input = string_field_at(j, a.input_field, item.line);
      pairs.push_back(std::move(p));
    }
    return pairs;
  }
  Input ref(a.reference_path), hyp(a.hypothesis_path);
  const std::vector<Item> refs = read_all(line_source(ref.stream(), false));
  const std::vector<Item> hyps = read_all(line_source(hyp.stream(), false));
  if (refs.size() != hyps.size()) {
    throw FormatError("reference has " + std::to_string(refs.size()) + " lines, hypothesis has " +
                      std::to_string(hyps.size()));
  }
  for (std::size_t i = 0; i < refs.size(); ++i) {
    pairs.push_back({"line" + std::to_string(i + 1), refs[i].text, hyps[i].text, std::nullopt});
  }
  return pairs;
}

void run_eval(const Globals& g, const EvalArgs& a) {
  const bool plain = !a.reference_path.empty() || !a.hypothesis_path.empty();
  if (a.input.empty() ? (a.reference_path.empty() || a.hypothesis_path.empty()) : plain) {
    throw std::invalid_argument("give either --input or both --reference and --hypothesis");
  }
  const std::vector<RawPair> raw = read_pairs(a);
  std::vector<EvalPair> pairs(raw.size());
  std::vector<RepairStats> repairs(raw.size());
  std::vector<VariantCounts> counts(raw.size());
  std::size_t index = 0;
  // The map runs over pair indices so the shared vectors stay in order.
  ordered_map(
      [&](Item& item) {
        if (index == raw.size()) return false;
        item.ordinal = index++;
        return true;
      },
      g.jobs,
      [&](const Item& item) {
        const RawPair& p = raw[item.ordinal];
        std::string hyp = p.hypothesis;
        RepairStats stats;
        if (a.repair_first) {
          RepairResult r = repair(p.input ? *p.input : strip_diacritics(p.reference), hyp);
          hyp = std::move(r.repaired);
          stats = r.stats;
        }
        return std::tuple{item.ordinal, stats, compare_pair_all(p.reference, hyp, p.id)};
      },
      [&](std::tuple<std::size_t, RepairStats, VariantCounts> r) {
        repairs[std::get<0>(r)] = std::get<1>(r);
        counts[std::get<0>(r)] = std::get<2>(r);
      });
  MetricsReport report;
  RepairStats total;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    report.add(counts[i]);
    total += repairs[i];
  }
  if (a.repair_first) report.hallucination_rate = total.hallucination_rate;

  std::vector<MetricOptions> shown;
  for (const MetricOptions& o : kAllVariants) {
    if (a.case_ending && *a.case_ending != o.case_ending) continue;
    if (a.include_no_diacritic && *a.include_no_diacritic != o.include_no_diacritic) continue;
    shown.push_back(o);
  }
  Output out(a.output);
  out.stream() << report.to_table(shown);
  out.close();
  if (!a.json_path.empty()) write_text_file(a.json_path, to_json(report).dump(2) + "\n");
  if (!a.csv_path.empty()) write_text_file(a.csv_path, report.to_csv(shown));
}

// -------------------------------------------------------------------------

struct TrainArgs {
  std::string input = "-", model = "-";
  std::string text_field;
};

void run_train(const Globals&, const TrainArgs& a) {
  const LookupModel m = LookupModel::train(read_samples(a.input, a.text_field));
  Output out(a.model);
  m.save(out.stream());
  out.close();
  spdlog::info("baseline: {} training words, {} distinct words", m.training_word_count(), m.vocabulary_size());
}

struct PredictArgs {
  std::string input = "-", output = "-", model;
  std::string text_field, out_field = "hypothesis";
};

void run_predict(const Globals& g, const PredictArgs& a) {
  LookupModel m = [&] {
    Input in(a.model);
    return LookupModel::load(in.stream());
  }();
  Input in(a.input);
  Output out(a.output);
  const bool plain = a.text_field.empty();
  ordered_map(
      line_source(in.stream(), !plain), g.jobs,
      [&](const Item& item) {
        if (plain) return m.predict(item.text);
        Json j = parse_record(item);
        j[a.out_field] = m.predict(string_field_at(j, a.text_field, item.line));
        return j.dump();
      },
      [&](std::string line) { out.stream() << line << '\n'; });
  out.close();
}

}  // namespace

void add_evaluation_commands(CLI::App& app, Globals& g) {
  {
    auto args = std::make_shared<RepairArgs>();
    auto* cmd = app.add_subcommand("repair", "Remove hallucinated words from model outputs");
    cmd->add_option("-i,--input", args->input, "JSONL records with input and output text")->capture_default_str();
    cmd->add_option("-o,--output", args->output, "JSONL repaired records")->capture_default_str();
    cmd->add_option("--input-field", args->input_field, "Undiacritized input field")->capture_default_str();
    cmd->add_option("--output-field", args->output_field, "Model output field")->capture_default_str();
    cmd->add_option("--summary", args->summary_path, "Write corpus repair counts as JSON");
    cmd->callback([&g, args] { run_repair(g, *args); });
  }
  {
    auto args = std::make_shared<EvalArgs>();
    auto* cmd = app.add_subcommand("eval", "Diacritic and word error rates");
    cmd->add_option("-i,--input", args->input, "JSONL pairs");
    cmd->add_option("--reference", args->reference_path, "Plain reference file, one sample per line");
    cmd->add_option("--hypothesis", args->hypothesis_path, "Plain hypothesis file, line-parallel");
    cmd->add_option("--reference-field", args->reference_field, "JSONL reference field")->capture_default_str();
    cmd->add_option("--hypothesis-field", args->hypothesis_field, "JSONL hypothesis field")->capture_default_str();
    cmd->add_option("--input-field", args->input_field, "JSONL model input field for --repair")
        ->capture_default_str();
    cmd->add_flag("--repair", args->repair_first, "Repair hypotheses first and report hallucinations");
    cmd->add_option("-o,--output", args->output, "Table output")->capture_default_str();
    cmd->add_option("--json", args->json_path, "Also write the report as JSON");
    cmd->add_option("--csv", args->csv_path, "Also write the shown variants as CSV");
    cmd->add_flag_callback("--case-ending", [args] { args->case_ending = true; }, "Only with case endings");
    cmd->add_flag_callback("--no-case-ending", [args] { args->case_ending = false; }, "Only without case endings");
    cmd->add_flag_callback("--include-no-diacritic", [args] { args->include_no_diacritic = true; },
                           "Only variants counting bare reference letters");
    cmd->add_flag_callback("--exclude-no-diacritic", [args] { args->include_no_diacritic = false; },
                           "Only variants skipping bare reference letters");
    cmd->callback([&g, args] { run_eval(g, *args); });
  }
  {
    auto* baseline = app.add_subcommand("baseline", "Word-lookup diacritizer");
    baseline->require_subcommand(1);
    auto train = std::make_shared<TrainArgs>();
    auto* t = baseline->add_subcommand("train", "Learn the most frequent form of each word");
    t->add_option("-i,--input", train->input, "Diacritized corpus")->capture_default_str();
    t->add_option("-o,--model", train->model, "Model file")->capture_default_str();
    t->add_option("--text-field", train->text_field, "JSONL text field; plain lines when empty");
    t->callback([&g, train] { run_train(g, *train); });

    auto predict = std::make_shared<PredictArgs>();
    auto* p = baseline->add_subcommand("predict", "Diacritize text with a trained model");
    p->add_option("-m,--model", predict->model, "Model file")->required();
    p->add_option("-i,--input", predict->input, "Text to diacritize")->capture_default_str();
    p->add_option("-o,--output", predict->output, "Output")->capture_default_str();
    p->add_option("--text-field", predict->text_field, "JSONL input field; plain lines when empty");
    p->add_option("--out-field", predict->out_field, "JSONL field receiving the prediction")->capture_default_str();
    p->callback([&g, predict] { run_predict(g, *predict); });
  }
}

}  // namespace tashkeel::cli
