#include "tashkeel/baseline.h"

#include <charconv>
#include <sstream>

#include "tashkeel/arabic.h"
#include "tashkeel/errors.h"

namespace tashkeel {

namespace {

constexpr std::string_view kHeaderTag = "#tashkeel-lookup-model";
constexpr int kFormatVersion = 1;

std::size_t parse_count(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("model line " + std::to_string(line) + ": bad count '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

LookupModel LookupModel::train(std::span<const std::string> corpus) {
  std::map<std::string, std::map<std::string, std::size_t>, std::less<>> counts;
  LookupModel model;
  for (const std::string& text : corpus) {
    for (std::string_view token : split_words(text)) {
      const WordView word = WordView::parse(token);
      if (!word.has_letters()) continue;
      ++counts[word.stripped_core()][word.render_core()];
      ++model.training_words_;
    }
  }
  if (counts.empty()) throw EmptyCorpusError("baseline training corpus has no Arabic words");
  for (auto& [key, forms] : counts) {
    // forms iterates in ascending byte order, which is codepoint order for
    // UTF-8, so keeping the first maximum implements the tie-break.
    const std::pair<const std::string, std::size_t>* best = nullptr;
    for (const auto& entry : forms) {
      if (!best || entry.second > best->second) best = &entry;
    }
    model.table_.emplace(key, Entry{best->first, best->second});
  }
  return model;
}

const LookupModel::Entry* LookupModel::find(std::string_view stripped) const {
  const auto it = table_.find(stripped);
  return it == table_.end() ? nullptr : &it->second;
}

std::string LookupModel::predict(std::string_view text) const {
  std::string out;
  out.reserve(text.size() * 2);
  for (const TextRun& run : split_runs(text)) {
    if (run.space || !is_arabic_word(run.text)) {
      out += run.text;
      continue;
    }
    const WordView word = WordView::parse(run.text);
    const Entry* entry = find(word.stripped_core());
    if (!entry) {
      out += run.text;
      continue;
    }
    out += word.leading();
    out += entry->form;
    out += word.trailing();
  }
  return out;
}

void LookupModel::save(std::ostream& out) const {
  out << kHeaderTag << "\tversion=" << kFormatVersion << "\ttraining_words=" << training_words_
      << "\tvocabulary=" << table_.size() << '\n';
  for (const auto& [key, entry] : table_) out << key << '\t' << entry.form << '\t' << entry.count << '\n';
}

LookupModel LookupModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeaderTag, 0) != 0) {
    throw FormatError("model: missing '#tashkeel-lookup-model' header");
  }
  LookupModel model;
  std::size_t declared_vocabulary = 0;
  bool version_ok = false;
  std::istringstream header(line.substr(kHeaderTag.size()));
  std::string field;
  while (std::getline(header, field, '\t')) {
    const std::size_t eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string name = field.substr(0, eq);
    const std::size_t value = parse_count(std::string_view(field).substr(eq + 1), 1);
    if (name == "version") version_ok = value == kFormatVersion;
    if (name == "training_words") model.training_words_ = value;
    if (name == "vocabulary") declared_vocabulary = value;
  }
  if (!version_ok) throw FormatError("model: unsupported format version");

  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw FormatError("model line " + std::to_string(number) + ": expected 3 fields");
    std::string key = line.substr(0, t1);
    std::string form = line.substr(t1 + 1, t2 - t1 - 1);
    const std::size_t count = parse_count(std::string_view(line).substr(t2 + 1), number);
    if (strip_diacritics(form) != key || count == 0) {
      throw FormatError("model line " + std::to_string(number) + ": form does not strip to key or zero count");
    }
    if (!model.table_.emplace(std::move(key), Entry{std::move(form), count}).second) {
      throw FormatError("model line " + std::to_string(number) + ": duplicate key");
    }
  }
  if (model.table_.size() != declared_vocabulary) {
    throw FormatError("model: header declares " + std::to_string(declared_vocabulary) + " entries, found " +
                      std::to_string(model.table_.size()));
  }
  return model;
}

}  // namespace tashkeel
