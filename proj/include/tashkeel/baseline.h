#pragma once

// Context-free lookup diacritizer: every undiacritized word maps to its
// most frequent diacritized form in the training corpus.

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace tashkeel {

class LookupModel {
 public:
  struct Entry {
    std::string form;
    std::size_t count = 0;
  };

  // Counts canonicalized word cores; the most frequent form wins, ties go
  // to the smallest codepoint sequence. Throws EmptyCorpusError if the
  // corpus contains no Arabic word.
  static LookupModel train(std::span<const std::string> corpus);

  // Known words are replaced by their stored form, attached punctuation
  // kept; everything else passes through unchanged.
  std::string predict(std::string_view text) const;

  const Entry* find(std::string_view stripped) const;
  std::size_t vocabulary_size() const { return table_.size(); }
  std::size_t training_word_count() const { return training_words_; }
  const std::map<std::string, Entry, std::less<>>& table() const { return table_; }

  // Versioned TSV: a header line, then "stripped<TAB>form<TAB>count" rows
  // sorted by the stripped key.
  void save(std::ostream& out) const;
  static LookupModel load(std::istream& in);

 private:
  std::map<std::string, Entry, std::less<>> table_;
  std::size_t training_words_ = 0;
};

}  // namespace tashkeel
