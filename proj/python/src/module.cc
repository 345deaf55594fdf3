#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>

#include "tashkeel/align.h"
#include "tashkeel/arabic.h"
#include "tashkeel/baseline.h"
#include "tashkeel/chunker.h"
#include "tashkeel/errors.h"
#include "tashkeel/filter.h"
#include "tashkeel/json_io.h"
#include "tashkeel/metrics.h"
#include "tashkeel/normalize.h"
#include "tashkeel/overlap.h"
#include "tashkeel/pipeline.h"

namespace py = pybind11;
using namespace tashkeel;

namespace {

// Results cross over as plain dicts and lists, built from the same JSON
// the command-line tool writes.
py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get_ref<const std::string&>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& v : j) out.append(to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: return py::none();
  }
}

py::list ops_to_py(const std::vector<AlignOp>& ops) {
  py::list out;
  for (const AlignOp& op : ops) out.append(to_py(to_json(op)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arabic diacritization dataset and evaluation core";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> base;
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> mismatch;
  base.call_once_and_store_result([&] { return py::exception<Error>(m, "TashkeelError", PyExc_ValueError); });
  mismatch.call_once_and_store_result(
      [&] { return py::exception<BaseTextMismatchError>(m, "BaseTextMismatchError", base.get_stored().ptr()); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BaseTextMismatchError& e) {
      py::object err = mismatch.get_stored()(e.what());
      err.attr("sample_id") = e.sample_id();
      py::set_error(mismatch.get_stored(), err);
    } catch (const Error& e) {
      py::set_error(base.get_stored(), e.what());
    }
  });

  m.def("strip_diacritics", [](std::string_view t) { return strip_diacritics(t); }, py::arg("text"));
  m.def("canonicalize", [](std::string_view t) { return canonicalize(t); }, py::arg("text"));

  m.def(
      "clean_text",
      [](std::string_view text, bool style, bool stopwords, bool iltiqa) {
        NormalizeConfig cfg = NormalizeConfig::defaults();
        cfg.enable_style_unification = style;
        cfg.enable_stopword_fix = stopwords;
        cfg.enable_iltiqa = iltiqa;
        NormalizeResult r;
        {
          py::gil_scoped_release release;
          r = clean_text(text, cfg);
        }
        return py::make_tuple(r.text, to_py(to_json(r.stats)));
      },
      py::arg("text"), py::arg("style") = true, py::arg("stopwords") = true, py::arg("iltiqa") = true,
      "Normalize text; returns (cleaned, stats).");

  m.def(
      "chunk_document",
      [](std::string_view doc, std::string_view source_id, std::size_t min_words, std::size_t max_words) {
        ChunkOptions opts;
        opts.min_words = min_words;
        opts.max_words = max_words;
        py::list out;
        for (const Chunk& c : chunk_document(doc, source_id, opts)) out.append(to_py(to_json(c)));
        return out;
      },
      py::arg("doc"), py::arg("source_id") = "doc", py::arg("min_words") = 50, py::arg("max_words") = 60);

  m.def(
      "judge",
      [](std::string_view text, std::size_t max_undiacritized, std::size_t max_partial) {
        return to_py(to_json(judge(text, FilterThresholds{max_undiacritized, max_partial})));
      },
      py::arg("text"), py::arg("max_undiacritized") = 2, py::arg("max_partial") = 3);

  py::class_<SegmentIndex>(m, "SegmentIndex", "Test-set segments for leakage checks")
      .def(py::init([](const std::vector<std::string>& test_set, std::size_t min_words) {
             return build_segment_index(test_set, SeparatorTiers::defaults(), min_words);
           }),
           py::arg("test_set"), py::arg("min_words") = 3)
      .def("__len__", &SegmentIndex::size)
      .def(
          "find_leak",
          [](const SegmentIndex& index, std::string_view text) -> std::optional<std::string> {
            std::string leak = find_leak(text, index, SeparatorTiers::defaults());
            if (leak.empty()) return std::nullopt;
            return leak;
          },
          py::arg("text"), "First segment of text found in the index, or None.");

  m.def(
      "similarity",
      [](std::string_view sample, const std::vector<std::string>& other) {
        return similarity(sample, build_segment_set(other)).value;
      },
      py::arg("sample"), py::arg("other"));

  m.def(
      "analyze_overlap",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b, double threshold) {
        OverlapReport r;
        {
          py::gil_scoped_release release;
          r = analyze(a, b, threshold);
        }
        return to_py(to_json(r));
      },
      py::arg("a"), py::arg("b"), py::arg("threshold") = 0.5);

  m.def(
      "nw_align",
      [](const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
        const Alignment a = nw_align(ref, hyp);
        return py::make_tuple(a.score, ops_to_py(a.ops));
      },
      py::arg("ref"), py::arg("hyp"), "Returns (score, ops).");

  m.def(
      "repair",
      [](std::string_view input, std::string_view output) {
        const RepairResult r = repair(input, output);
        py::dict out;
        out["repaired"] = r.repaired;
        out["ops"] = ops_to_py(r.ops);
        out["stats"] = to_py(to_json(r.stats));
        return out;
      },
      py::arg("input"), py::arg("output"));

  m.def(
      "compare_pair",
      [](std::string_view ref, std::string_view hyp, bool case_ending, bool include_no_diacritic) {
        return to_py(to_json(compare_pair(ref, hyp, MetricOptions{case_ending, include_no_diacritic})));
      },
      py::arg("reference"), py::arg("hypothesis"), py::arg("case_ending") = true,
      py::arg("include_no_diacritic") = true);

  m.def(
      "evaluate",
      [](const std::vector<std::string>& refs, const std::vector<std::string>& hyps) {
        if (refs.size() != hyps.size()) throw py::value_error("references and hypotheses differ in length");
        std::vector<EvalPair> pairs;
        for (std::size_t i = 0; i < refs.size(); ++i) pairs.push_back({std::to_string(i), refs[i], hyps[i]});
        MetricsReport r;
        {
          py::gil_scoped_release release;
          r = evaluate_corpus(pairs);
        }
        return to_py(to_json(r));
      },
      py::arg("references"), py::arg("hypotheses"), "Micro-averaged report; sample ids are list indices.");

  m.def(
      "templatize",
      [](std::string_view text, std::optional<std::string> system) {
        return to_py(to_json(system ? templatize(text, *system) : templatize(text)));
      },
      py::arg("text"), py::arg("system") = py::none());

  py::class_<LookupModel>(m, "LookupModel", "Most frequent diacritized form per word")
      .def_static(
          "train", [](const std::vector<std::string>& corpus) { return LookupModel::train(corpus); },
          py::arg("corpus"))
      .def("predict", &LookupModel::predict, py::arg("text"))
      .def_property_readonly("vocabulary_size", &LookupModel::vocabulary_size)
      .def_property_readonly("training_word_count", &LookupModel::training_word_count)
      .def(
          "save",
          [](const LookupModel& model, const std::string& path) {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::ios_base::failure("cannot write " + path);
            model.save(out);
          },
          py::arg("path"))
      .def_static(
          "load",
          [](const std::string& path) {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw std::ios_base::failure("cannot open " + path);
            return LookupModel::load(in);
          },
          py::arg("path"));
}
