#pragma once

// Unicode model of diacritized Arabic text: character classes, per-letter
// diacritic annotations, and the word view every other module works on.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tashkeel {

namespace cp {
inline constexpr char32_t kHamza = 0x0621;
inline constexpr char32_t kAlifMadda = 0x0622;
inline constexpr char32_t kAlifHamzaAbove = 0x0623;
inline constexpr char32_t kAlifHamzaBelow = 0x0625;
inline constexpr char32_t kAlif = 0x0627;
inline constexpr char32_t kBa = 0x0628;
inline constexpr char32_t kTaMarbuta = 0x0629;
inline constexpr char32_t kFa = 0x0641;
inline constexpr char32_t kKaf = 0x0643;
inline constexpr char32_t kLam = 0x0644;
inline constexpr char32_t kWaw = 0x0648;
inline constexpr char32_t kAlifMaqsura = 0x0649;
inline constexpr char32_t kYa = 0x064A;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kAlifWasla = 0x0671;

inline constexpr char32_t kFathatan = 0x064B;
inline constexpr char32_t kDammatan = 0x064C;
inline constexpr char32_t kKasratan = 0x064D;
inline constexpr char32_t kFatha = 0x064E;
inline constexpr char32_t kDamma = 0x064F;
inline constexpr char32_t kKasra = 0x0650;
inline constexpr char32_t kShadda = 0x0651;
inline constexpr char32_t kSukun = 0x0652;
}  // namespace cp

enum class CharClass {
  kArabicLetter,
  kDiacriticMark,
  kArabicPunctuation,
  kLatinOrDigit,
  kWhitespace,
  kOther,
};

// Total over all scalar values. The diacritic class is exactly the eight
// marks U+064B..U+0652; tatweel, dagger alif and Quranic annotation signs
// are kOther.
CharClass classify_char(char32_t c);

inline bool is_diacritic(char32_t c) { return c >= cp::kFathatan && c <= cp::kSukun; }
inline bool is_arabic_letter(char32_t c) {
  return classify_char(c) == CharClass::kArabicLetter;
}
inline bool is_whitespace(char32_t c) { return classify_char(c) == CharClass::kWhitespace; }

// The fourteen letters that assimilate the lam of the definite article.
bool is_sun_letter(char32_t c);

enum class Vowel : std::uint8_t {
  kFatha,
  kDamma,
  kKasra,
  kSukun,
  kFathatan,
  kDammatan,
  kKasratan,
};

std::optional<Vowel> vowel_of(char32_t mark);
char32_t codepoint_of(Vowel v);
std::string_view name_of(Vowel v);
std::optional<Vowel> vowel_from_name(std::string_view name);

// Annotation of one letter. shadda together with kSukun never occurs: the
// decomposer drops the sukun and counts the conflict.
struct Diacritic {
  bool shadda = false;
  std::optional<Vowel> vowel;

  bool unmarked() const { return !shadda && !vowel; }
  bool has(Vowel v) const { return vowel == v; }
  bool operator==(const Diacritic&) const = default;
};

struct GraphemeUnit {
  char32_t base = 0;
  Diacritic mark;

  bool operator==(const GraphemeUnit&) const = default;
};

// Noise counters filled while attaching marks to letters.
struct DecomposeStats {
  std::size_t duplicate_vowels = 0;
  std::size_t shadda_sukun_conflicts = 0;
  // Marks with no base letter to attach to. Kept verbatim in the text.
  std::size_t orphan_marks = 0;

  DecomposeStats& operator+=(const DecomposeStats& o);
  std::size_t total() const { return duplicate_vowels + shadda_sukun_conflicts + orphan_marks; }
};

// Splits one word into grapheme units. Every Arabic letter opens a unit and
// the marks that follow attach to the most recent unit, in any order; a
// repeated vowel keeps the last one. Non-letter characters are skipped.
// Throws LeadingMarkError when a mark precedes the first letter.
std::vector<GraphemeUnit> decompose(std::string_view word, DecomposeStats* stats = nullptr);

// Emits base, shadda, vowel for every unit.
std::string compose(std::span<const GraphemeUnit> units);

// Removes the eight diacritic codepoints; every other byte is kept as is.
std::string strip_diacritics(std::string_view text);
bool has_diacritics(std::string_view text);

// Rewrites every letter's marks in canonical order (shadda, then vowel)
// while keeping all other characters and all whitespace byte-identical.
// This is compose(decompose(w)) lifted to whole texts.
std::string canonicalize(std::string_view text, DecomposeStats* stats = nullptr);

// A word (whitespace-free token) split into grapheme units plus the
// non-letter text around and between them, so it can be re-emitted after
// the annotations are edited.
class WordView {
 public:
  // Never throws: leading marks, if any, stay verbatim in leading().
  static WordView parse(std::string_view raw, DecomposeStats* stats = nullptr);

  std::string_view raw() const { return raw_; }
  const std::vector<GraphemeUnit>& graphemes() const { return graphemes_; }
  std::vector<GraphemeUnit>& mutable_graphemes() { return graphemes_; }
  bool has_letters() const { return !graphemes_.empty(); }
  bool has_leading_marks() const { return leading_marks_; }

  // Non-letter text before the first letter and after the last letter's
  // marks, typically attached punctuation.
  std::string_view leading() const { return gaps_.front(); }
  std::string_view trailing() const {
    return graphemes_.empty() ? std::string_view() : std::string_view(gaps_.back());
  }

  // Canonical text of the whole word with the current annotations.
  std::string render() const;
  // Same, without leading() and trailing().
  std::string render_core() const;
  // Undiacritized core; the lookup key for lexicons.
  std::string stripped_core() const;

 private:
  std::string raw_;
  std::vector<GraphemeUnit> graphemes_;
  // gaps_[i] precedes graphemes_[i]; gaps_.back() follows the last one.
  std::vector<std::string> gaps_;
  bool leading_marks_ = false;
};

enum class Completeness { kFull, kPartial, kNone };

std::string_view name_of(Completeness c);

// kNone when no letter carries a mark. kFull when every letter carries a
// vowel or shadda, except letters whose mark is conventionally omitted:
//   - the word-final letter (case-ending / pausal position),
//   - a bare word-initial alif (hamzat al-wasl),
//   - the alif of the definite article, and its lam before a sun letter,
//   - a madd letter after its matching short vowel (alif or alif maqsura
//     after fatha, waw after damma, ya after kasra).
// kPartial otherwise. Requires at least one letter.
Completeness completeness(const WordView& word);

// Index of the alif of a word-initial definite article, optionally after a
// one-letter proclitic (wa, fa, bi, ka, li). The article must be followed
// by at least one more letter.
std::optional<std::size_t> definite_article_alif(std::span<const GraphemeUnit> units);

// A maximal run of whitespace or non-whitespace characters.
struct TextRun {
  std::string_view text;
  std::size_t offset = 0;
  bool space = false;
};

// Splits text into alternating runs; concatenating them yields the input.
std::vector<TextRun> split_runs(std::string_view text);

// Maximal non-whitespace runs.
std::vector<std::string_view> split_words(std::string_view text);

// Words joined by single spaces.
std::string normalize_whitespace(std::string_view text);

// True if the token contains at least one Arabic letter.
bool is_arabic_word(std::string_view token);

}  // namespace tashkeel
