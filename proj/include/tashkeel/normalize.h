#pragma once

// Corpus text cleaning: character cleanup, diacritization-style
// unification, stop-word correction and resolution of two adjacent
// vowelless consonants across a word boundary (iltiqa as-sakinayn).

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/arabic.h"

namespace tashkeel {

// Stripped word -> its one admissible diacritized form (canonical order).
using StopwordLexicon = std::map<std::string, std::string, std::less<>>;

struct IltiqaException {
  // Undiacritized word ending, e.g. "هم".
  std::string suffix;
  // Vowel replacing the closing sukun; nullopt leaves the letter bare.
  std::optional<Vowel> replacement;
};

struct NormalizeConfig {
  bool enable_style_unification = true;
  bool enable_stopword_fix = true;
  bool enable_iltiqa = true;
  StopwordLexicon stopword_lexicon;
  std::vector<IltiqaException> iltiqa_exceptions;

  // All passes enabled with the shipped lexicon and exception table.
  static NormalizeConfig defaults();
};

struct NormalizeStats {
  std::size_t chars_removed = 0;
  std::size_t sukun_dropped_madd = 0;
  std::size_t sukun_dropped_lam = 0;
  std::size_t stopwords_fixed = 0;
  std::size_t iltiqa_resolved = 0;
  DecomposeStats marks;

  NormalizeStats& operator+=(const NormalizeStats& o);
};

struct NormalizeResult {
  std::string text;
  NormalizeStats stats;
};

// Removes control and invisible format characters and tatweel, collapses
// whitespace runs to one space (newlines kept, lines trimmed) and drops
// malformed UTF-8 bytes. Arabic letters, marks and all other printable
// characters pass through.
std::string clean_chars(std::string_view text, NormalizeStats* stats = nullptr);

// clean_chars, mark canonicalization, then every pass enabled in config:
// unify_style, fix_stopwords, resolve_iltiqa, in that order.
NormalizeResult clean_text(std::string_view text, const NormalizeConfig& config);

// Drops sukun on alif and alif maqsura, on waw after damma and ya after
// kasra, and on the definite article's lam before a sun letter. Never adds
// marks.
std::string unify_style(std::string_view text, NormalizeStats* stats = nullptr);

// Replaces every token whose undiacritized core is a lexicon key with the
// lexicon form. Attached punctuation is kept.
std::string fix_stopwords(std::string_view text, const StopwordLexicon& lexicon,
                          NormalizeStats* stats = nullptr);

// For adjacent words w1 w2 where w1 ends in sukun and w2 opens with a
// hamzat al-wasl cluster (definite article, or bare alif before a letter
// carrying sukun or shadda), revowels the end of w1: a madd letter after
// its matching vowel is left bare, then the longest matching exception
// suffix applies, otherwise kasra. Punctuation or a line break between the
// words blocks the rule.
std::string resolve_iltiqa(std::string_view text, const std::vector<IltiqaException>& exceptions,
                           NormalizeStats* stats = nullptr);

// Lexicon file: UTF-8, "stripped<TAB>diacritized" per line, '#' comments.
// Throws FormatError with the line number on malformed entries.
StopwordLexicon load_stopword_lexicon(std::istream& in);
StopwordLexicon load_stopword_lexicon_file(const std::string& path);
const StopwordLexicon& default_stopword_lexicon();

// Exception file: "suffix<TAB>fatha|damma|kasra|none" per line.
std::vector<IltiqaException> load_iltiqa_exceptions(std::istream& in);
std::vector<IltiqaException> load_iltiqa_exceptions_file(const std::string& path);
const std::vector<IltiqaException>& default_iltiqa_exceptions();

}  // namespace tashkeel
