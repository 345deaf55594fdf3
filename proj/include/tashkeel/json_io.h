#pragma once

// JSON forms of the records exchanged between pipeline stages.

#include <json.hpp>

#include "tashkeel/align.h"
#include "tashkeel/chunker.h"
#include "tashkeel/filter.h"
#include "tashkeel/metrics.h"
#include "tashkeel/normalize.h"
#include "tashkeel/overlap.h"
#include "tashkeel/pipeline.h"

namespace tashkeel {

using Json = nlohmann::ordered_json;

Json to_json(const Chunk& chunk);
// Accepts full chunk records and bare {id?, text} records; missing span
// fields are derived from the text. Throws FormatError without "text".
Chunk chunk_from_json(const Json& j, std::string_view fallback_id = {});

Json to_json(const FilterVerdict& verdict);
Json to_json(const AlignOp& op);
Json to_json(const RepairStats& stats);
Json to_json(const TemplateRecord& record);
Json to_json(const OverlapReport& report);
Json to_json(const PairCounts& counts);
// Nested grid: including/excluding_no_diacritic -> with/without_case_ending
// -> {der, wer, counts}.
Json to_json(const MetricsReport& report);
Json to_json(const CorpusStats& stats);
Json to_json(const NormalizeStats& stats);

// Required string member; FormatError naming the key otherwise.
std::string string_field(const Json& j, std::string_view key);

}  // namespace tashkeel
