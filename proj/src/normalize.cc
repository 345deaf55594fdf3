#include "tashkeel/normalize.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tashkeel/errors.h"
#include "tashkeel/utf8.h"

namespace tashkeel {

namespace internal {
extern const std::string_view kDefaultStopwordsTsv;
extern const std::string_view kDefaultIltiqaTsv;
}  // namespace internal

NormalizeConfig NormalizeConfig::defaults() {
  NormalizeConfig config;
  config.stopword_lexicon = default_stopword_lexicon();
  config.iltiqa_exceptions = default_iltiqa_exceptions();
  return config;
}

NormalizeStats& NormalizeStats::operator+=(const NormalizeStats& o) {
  chars_removed += o.chars_removed;
  sukun_dropped_madd += o.sukun_dropped_madd;
  sukun_dropped_lam += o.sukun_dropped_lam;
  stopwords_fixed += o.stopwords_fixed;
  iltiqa_resolved += o.iltiqa_resolved;
  marks += o.marks;
  return *this;
}

namespace {

bool removable(char32_t c) {
  if (c < 0x20) return c != '\t' && c != '\n' && c != '\v' && c != '\f' && c != '\r';
  if (c == 0x7F || (c >= 0x80 && c <= 0x9F && c != 0x85)) return true;
  switch (c) {
    case cp::kTatweel: case 0x00AD: case 0x200B: case 0x200E: case 0x200F: case 0xFEFF:
      return true;
    default:
      return (c >= 0x202A && c <= 0x202E) || (c >= 0x2066 && c <= 0x2069);
  }
}

// Applies fn to every word of text. Words fn reports as unchanged are
// copied verbatim, so untouched text stays byte-identical.
template <typename Fn>
std::string transform_words(std::string_view text, DecomposeStats* marks, Fn&& fn) {
  std::string out;
  out.reserve(text.size());
  for (const TextRun& run : split_runs(text)) {
    if (run.space || !is_arabic_word(run.text)) {
      out += run.text;
      continue;
    }
    WordView word = WordView::parse(run.text, marks);
    if (fn(word)) {
      out += word.render();
    } else {
      out += run.text;
    }
  }
  return out;
}

std::size_t final_consonant(const std::vector<GraphemeUnit>& g) {
  const std::size_t n = g.size();
  // Plural waw followed by a silent alif (alif al-fariqa).
  if (n >= 2 && g[n - 1].base == cp::kAlif && g[n - 1].mark.unmarked() && g[n - 2].base == cp::kWaw) {
    return n - 2;
  }
  return n - 1;
}

bool is_madd_after_matching_vowel(const std::vector<GraphemeUnit>& g, std::size_t i) {
  if (i == 0) return false;
  const Diacritic& prev = g[i - 1].mark;
  switch (g[i].base) {
    case cp::kAlif: case cp::kAlifMaqsura: return prev.has(Vowel::kFatha);
    case cp::kWaw: return prev.has(Vowel::kDamma);
    case cp::kYa: return prev.has(Vowel::kKasra);
    default: return false;
  }
}

bool opens_with_wasl(const WordView& w) {
  if (!w.leading().empty()) return false;
  const auto& g = w.graphemes();
  if (g.size() < 2) return false;
  if (g[0].base == cp::kAlifWasla) return true;
  if (g[0].base != cp::kAlif || !g[0].mark.unmarked()) return false;
  if (g[1].base == cp::kLam && g.size() >= 3) return true;
  return g[1].mark.has(Vowel::kSukun) || g[1].mark.shadda;
}

std::string letters_of(const std::vector<GraphemeUnit>& g) {
  std::string out;
  for (const auto& u : g) utf8::append(out, u.base);
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Yields (line number, line) for non-blank, non-comment lines.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(number, std::string_view(line));
  }
}

}  // namespace

std::string clean_chars(std::string_view text, NormalizeStats* stats) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool line_has_content = false;
  utf8::for_each(text, [&](const utf8::Decoded& d, std::string_view bytes) {
    if (!d.valid || removable(d.codepoint)) {
      if (stats) ++stats->chars_removed;
      return;
    }
    if (d.codepoint == '\n') {
      out += '\n';
      pending_space = false;
      line_has_content = false;
      return;
    }
    if (is_whitespace(d.codepoint)) {
      pending_space = line_has_content;
      return;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    line_has_content = true;
    out += bytes;
  });
  return out;
}

NormalizeResult clean_text(std::string_view text, const NormalizeConfig& config) {
  NormalizeResult result;
  NormalizeStats& stats = result.stats;
  std::string s = clean_chars(text, &stats);
  s = canonicalize(s, &stats.marks);
  if (config.enable_style_unification) s = unify_style(s, &stats);
  if (config.enable_stopword_fix) s = fix_stopwords(s, config.stopword_lexicon, &stats);
  if (config.enable_iltiqa) s = resolve_iltiqa(s, config.iltiqa_exceptions, &stats);
  result.text = std::move(s);
  return result;
}

std::string unify_style(std::string_view text, NormalizeStats* stats) {
  return transform_words(text, stats ? &stats->marks : nullptr, [&](WordView& word) {
    auto& g = word.mutable_graphemes();
    const auto article = definite_article_alif(g);
    bool changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].mark.has(Vowel::kSukun)) continue;
      const char32_t c = g[i].base;
      const bool elongation = c == cp::kAlif || c == cp::kAlifMaqsura ||
                              ((c == cp::kWaw || c == cp::kYa) && is_madd_after_matching_vowel(g, i));
      const bool article_lam =
          article && i == *article + 1 && i + 1 < g.size() && is_sun_letter(g[i + 1].base);
      if (!elongation && !article_lam) continue;
      g[i].mark.vowel.reset();
      changed = true;
      if (stats) ++(elongation ? stats->sukun_dropped_madd : stats->sukun_dropped_lam);
    }
    return changed;
  });
}

std::string fix_stopwords(std::string_view text, const StopwordLexicon& lexicon,
                          NormalizeStats* stats) {
  if (lexicon.empty()) return std::string(text);
  std::string out;
  out.reserve(text.size());
  for (const TextRun& run : split_runs(text)) {
    if (run.space || !is_arabic_word(run.text)) {
      out += run.text;
      continue;
    }
    const WordView word = WordView::parse(run.text);
    const auto it = lexicon.find(word.stripped_core());
    if (it == lexicon.end() || word.render_core() == it->second) {
      out += run.text;
      continue;
    }
    out += word.leading();
    out += it->second;
    out += word.trailing();
    if (stats) ++stats->stopwords_fixed;
  }
  return out;
}

std::string resolve_iltiqa(std::string_view text, const std::vector<IltiqaException>& exceptions,
                           NormalizeStats* stats) {
  const std::vector<TextRun> runs = split_runs(text);
  std::vector<std::optional<WordView>> words(runs.size());
  std::vector<bool> changed(runs.size(), false);
  auto word_at = [&](std::size_t i) -> WordView* {
    if (runs[i].space || !is_arabic_word(runs[i].text)) return nullptr;
    if (!words[i]) words[i] = WordView::parse(runs[i].text, stats ? &stats->marks : nullptr);
    return &*words[i];
  };

  std::vector<const IltiqaException*> by_length;
  for (const auto& e : exceptions) by_length.push_back(&e);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [](const auto* a, const auto* b) { return a->suffix.size() > b->suffix.size(); });

  for (std::size_t i = 0; i + 2 < runs.size(); ++i) {
    if (!runs[i + 1].space || runs[i + 1].text.find('\n') != std::string_view::npos) continue;
    WordView* first = word_at(i);
    if (!first || !first->trailing().empty()) continue;
    auto& g = first->mutable_graphemes();
    const std::size_t f = final_consonant(g);
    if (!g[f].mark.has(Vowel::kSukun)) continue;
    const WordView* second = word_at(i + 2);
    if (!second || !opens_with_wasl(*second)) continue;

    std::optional<Vowel> vowel = Vowel::kKasra;
    if (is_madd_after_matching_vowel(g, f)) {
      vowel.reset();
    } else {
      const std::string letters = letters_of(g);
      for (const IltiqaException* e : by_length) {
        if (letters.size() >= e->suffix.size() &&
            letters.compare(letters.size() - e->suffix.size(), e->suffix.size(), e->suffix) == 0) {
          vowel = e->replacement;
          break;
        }
      }
    }
    g[f].mark.vowel = vowel;
    changed[i] = true;
    if (stats) ++stats->iltiqa_resolved;
  }

  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (changed[i]) {
      out += words[i]->render();
    } else {
      out += runs[i].text;
    }
  }
  return out;
}

StopwordLexicon load_stopword_lexicon(std::istream& in) {
  StopwordLexicon lexicon;
  for_each_data_line(in, [&](std::size_t number, std::string_view line) {
    const auto fields = split_tabs(line);
    auto fail = [&](const std::string& why) {
      throw FormatError("stopword lexicon line " + std::to_string(number) + ": " + why);
    };
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      fail("expected stripped<TAB>diacritized");
    }
    const std::string key(fields[0]);
    if (has_diacritics(key)) fail("key contains diacritics");
    if (strip_diacritics(fields[1]) != key) fail("form does not strip to its key");
    std::string form = canonicalize(fields[1]);
    const auto [it, inserted] = lexicon.emplace(key, form);
    if (!inserted && it->second != form) fail("conflicting duplicate of '" + key + "'");
  });
  return lexicon;
}

StopwordLexicon load_stopword_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open stopword lexicon " + path);
  return load_stopword_lexicon(in);
}

const StopwordLexicon& default_stopword_lexicon() {
  static const StopwordLexicon lexicon = [] {
    std::istringstream in{std::string(internal::kDefaultStopwordsTsv)};
    return load_stopword_lexicon(in);
  }();
  return lexicon;
}

std::vector<IltiqaException> load_iltiqa_exceptions(std::istream& in) {
  std::vector<IltiqaException> exceptions;
  for_each_data_line(in, [&](std::size_t number, std::string_view line) {
    const auto fields = split_tabs(line);
    auto fail = [&](const std::string& why) {
      throw FormatError("iltiqa exception line " + std::to_string(number) + ": " + why);
    };
    if (fields.size() != 2 || fields[0].empty()) fail("expected suffix<TAB>vowel");
    if (has_diacritics(fields[0])) fail("suffix contains diacritics");
    IltiqaException e{std::string(fields[0]), std::nullopt};
    if (fields[1] != "none") {
      e.replacement = vowel_from_name(fields[1]);
      if (!e.replacement || (*e.replacement != Vowel::kFatha && *e.replacement != Vowel::kDamma &&
                             *e.replacement != Vowel::kKasra)) {
        fail("replacement must be fatha, damma, kasra or none");
      }
    }
    exceptions.push_back(std::move(e));
  });
  return exceptions;
}

std::vector<IltiqaException> load_iltiqa_exceptions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open iltiqa exception table " + path);
  return load_iltiqa_exceptions(in);
}

const std::vector<IltiqaException>& default_iltiqa_exceptions() {
  static const std::vector<IltiqaException> exceptions = [] {
    std::istringstream in{std::string(internal::kDefaultIltiqaTsv)};
    return load_iltiqa_exceptions(in);
  }();
  return exceptions;
}

}  // namespace tashkeel
