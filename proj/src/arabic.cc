#include "tashkeel/arabic.h"

#include <array>

#include "tashkeel/errors.h"
#include "tashkeel/utf8.h"

namespace tashkeel {

CharClass classify_char(char32_t c) {
  if (c >= 0x064B && c <= 0x0652) return CharClass::kDiacriticMark;
  if ((c >= 0x0621 && c <= 0x063F) || (c >= 0x0641 && c <= 0x064A) || c == 0x0671) {
    return CharClass::kArabicLetter;
  }
  switch (c) {
    case 0x0609: case 0x060A: case 0x060C: case 0x060D: case 0x061B:
    case 0x061E: case 0x061F: case 0x066A: case 0x066B: case 0x066C:
    case 0x066D: case 0x06D4: case 0xFD3E: case 0xFD3F:
      return CharClass::kArabicPunctuation;
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return CharClass::kWhitespace;
    default:
      break;
  }
  if (c >= 0x2000 && c <= 0x200A) return CharClass::kWhitespace;
  if ((c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) {
    return CharClass::kLatinOrDigit;
  }
  if (c >= 0x00C0 && c <= 0x024F && c != 0x00D7 && c != 0x00F7) return CharClass::kLatinOrDigit;
  if ((c >= 0x0660 && c <= 0x0669) || (c >= 0x06F0 && c <= 0x06F9)) return CharClass::kLatinOrDigit;
  return CharClass::kOther;
}

bool is_sun_letter(char32_t c) {
  switch (c) {
    case 0x062A: case 0x062B: case 0x062F: case 0x0630: case 0x0631:
    case 0x0632: case 0x0633: case 0x0634: case 0x0635: case 0x0636:
    case 0x0637: case 0x0638: case 0x0644: case 0x0646:
      return true;
    default:
      return false;
  }
}

namespace {

struct VowelInfo {
  Vowel vowel;
  char32_t codepoint;
  std::string_view name;
};

constexpr std::array<VowelInfo, 7> kVowels = {{
    {Vowel::kFatha, cp::kFatha, "fatha"},
    {Vowel::kDamma, cp::kDamma, "damma"},
    {Vowel::kKasra, cp::kKasra, "kasra"},
    {Vowel::kSukun, cp::kSukun, "sukun"},
    {Vowel::kFathatan, cp::kFathatan, "fathatan"},
    {Vowel::kDammatan, cp::kDammatan, "dammatan"},
    {Vowel::kKasratan, cp::kKasratan, "kasratan"},
}};

void attach_mark(Diacritic& mark, char32_t c, DecomposeStats* stats) {
  if (c == cp::kShadda) {
    mark.shadda = true;
    if (mark.has(Vowel::kSukun)) {
      mark.vowel.reset();
      if (stats) ++stats->shadda_sukun_conflicts;
    }
    return;
  }
  const Vowel v = *vowel_of(c);
  if (v == Vowel::kSukun && mark.shadda) {
    if (stats) ++stats->shadda_sukun_conflicts;
    return;
  }
  if (mark.vowel && stats) ++stats->duplicate_vowels;
  mark.vowel = v;
}

void append_unit(std::string& out, const GraphemeUnit& u) {
  utf8::append(out, u.base);
  if (u.mark.shadda) utf8::append(out, cp::kShadda);
  if (u.mark.vowel) utf8::append(out, codepoint_of(*u.mark.vowel));
}

}  // namespace

std::optional<Vowel> vowel_of(char32_t mark) {
  for (const auto& info : kVowels) {
    if (info.codepoint == mark) return info.vowel;
  }
  return std::nullopt;
}

char32_t codepoint_of(Vowel v) { return kVowels[static_cast<std::size_t>(v)].codepoint; }

std::string_view name_of(Vowel v) { return kVowels[static_cast<std::size_t>(v)].name; }

std::optional<Vowel> vowel_from_name(std::string_view name) {
  for (const auto& info : kVowels) {
    if (info.name == name) return info.vowel;
  }
  return std::nullopt;
}

DecomposeStats& DecomposeStats::operator+=(const DecomposeStats& o) {
  duplicate_vowels += o.duplicate_vowels;
  shadda_sukun_conflicts += o.shadda_sukun_conflicts;
  orphan_marks += o.orphan_marks;
  return *this;
}

WordView WordView::parse(std::string_view raw, DecomposeStats* stats) {
  WordView w;
  w.raw_ = std::string(raw);
  w.gaps_.emplace_back();
  utf8::for_each(raw, [&](const utf8::Decoded& d, std::string_view bytes) {
    if (d.valid && is_diacritic(d.codepoint)) {
      if (w.graphemes_.empty()) {
        w.leading_marks_ = true;
        w.gaps_.back() += bytes;
        if (stats) ++stats->orphan_marks;
      } else {
        attach_mark(w.graphemes_.back().mark, d.codepoint, stats);
      }
    } else if (d.valid && is_arabic_letter(d.codepoint)) {
      w.graphemes_.push_back({d.codepoint, {}});
      w.gaps_.emplace_back();
    } else {
      w.gaps_.back() += bytes;
    }
  });
  return w;
}

std::string WordView::render() const {
  if (graphemes_.empty()) return gaps_.front();
  std::string out = gaps_.front();
  out += render_core();
  out += gaps_.back();
  return out;
}

std::string WordView::render_core() const {
  std::string out;
  for (std::size_t i = 0; i < graphemes_.size(); ++i) {
    if (i > 0) out += gaps_[i];
    append_unit(out, graphemes_[i]);
  }
  return out;
}

std::string WordView::stripped_core() const {
  std::string out;
  for (std::size_t i = 0; i < graphemes_.size(); ++i) {
    if (i > 0) out += strip_diacritics(gaps_[i]);
    utf8::append(out, graphemes_[i].base);
  }
  return out;
}

std::vector<GraphemeUnit> decompose(std::string_view word, DecomposeStats* stats) {
  WordView w = WordView::parse(word, stats);
  if (w.has_leading_marks()) {
    throw LeadingMarkError("diacritic precedes the first letter in '" + std::string(word) + "'");
  }
  return std::move(w.mutable_graphemes());
}

std::string compose(std::span<const GraphemeUnit> units) {
  std::string out;
  out.reserve(units.size() * 4);
  for (const auto& u : units) append_unit(out, u);
  return out;
}

std::string strip_diacritics(std::string_view text) {
  // U+064B..U+0652 encode as D9 8B..D9 92; 0xD9 is always a lead byte.
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto b = static_cast<unsigned char>(text[i]);
    if (b == 0xD9 && i + 1 < text.size()) {
      const auto n = static_cast<unsigned char>(text[i + 1]);
      if (n >= 0x8B && n <= 0x92) {
        ++i;
        continue;
      }
    }
    out += text[i];
  }
  return out;
}

bool has_diacritics(std::string_view text) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (static_cast<unsigned char>(text[i]) == 0xD9) {
      const auto n = static_cast<unsigned char>(text[i + 1]);
      if (n >= 0x8B && n <= 0x92) return true;
    }
  }
  return false;
}

std::string canonicalize(std::string_view text, DecomposeStats* stats) {
  std::string out;
  out.reserve(text.size());
  for (const TextRun& run : split_runs(text)) {
    if (run.space || !has_diacritics(run.text)) {
      out += run.text;
    } else {
      out += WordView::parse(run.text, stats).render();
    }
  }
  return out;
}

std::string_view name_of(Completeness c) {
  switch (c) {
    case Completeness::kFull: return "full";
    case Completeness::kPartial: return "partial";
    case Completeness::kNone: return "none";
  }
  return "";
}

std::optional<std::size_t> definite_article_alif(std::span<const GraphemeUnit> units) {
  auto article_at = [&](std::size_t i) {
    return units.size() > i + 2 && units[i].base == cp::kAlif && units[i + 1].base == cp::kLam;
  };
  if (article_at(0)) return 0;
  if (!units.empty()) {
    switch (units[0].base) {
      case cp::kWaw: case cp::kFa: case cp::kBa: case cp::kKaf: case cp::kLam:
        if (article_at(1)) return 1;
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

namespace {

bool mark_conventionally_omitted(std::span<const GraphemeUnit> g, std::size_t i,
                                 std::optional<std::size_t> article) {
  if (i + 1 == g.size()) return true;
  const char32_t c = g[i].base;
  if (article) {
    if (i == *article) return true;
    if (i == *article + 1 && is_sun_letter(g[i + 1].base)) return true;
  }
  if (i == 0) return c == cp::kAlif || c == cp::kAlifWasla;
  const Diacritic& prev = g[i - 1].mark;
  if (c == cp::kAlif || c == cp::kAlifMaqsura) return prev.has(Vowel::kFatha);
  if (c == cp::kWaw) return prev.has(Vowel::kDamma);
  if (c == cp::kYa) return prev.has(Vowel::kKasra);
  return false;
}

}  // namespace

Completeness completeness(const WordView& word) {
  const auto& g = word.graphemes();
  if (g.empty()) throw std::invalid_argument("completeness: word has no Arabic letter");
  bool any_marked = false;
  bool missing = false;
  const auto article = definite_article_alif(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].mark.unmarked()) {
      any_marked = true;
    } else if (!mark_conventionally_omitted(g, i, article)) {
      missing = true;
    }
  }
  if (!any_marked) return Completeness::kNone;
  return missing ? Completeness::kPartial : Completeness::kFull;
}

std::vector<TextRun> split_runs(std::string_view text) {
  std::vector<TextRun> runs;
  std::size_t pos = 0;
  std::size_t start = 0;
  bool in_space = false;
  while (pos < text.size()) {
    const utf8::Decoded d = utf8::decode(text, pos);
    const bool space = d.valid && is_whitespace(d.codepoint);
    if (pos == 0) {
      in_space = space;
    } else if (space != in_space) {
      runs.push_back({text.substr(start, pos - start), start, in_space});
      start = pos;
      in_space = space;
    }
    pos += d.length;
  }
  if (!text.empty()) runs.push_back({text.substr(start), start, in_space});
  return runs;
}

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  for (const TextRun& run : split_runs(text)) {
    if (!run.space) words.push_back(run.text);
  }
  return words;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::string_view w : split_words(text)) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool is_arabic_word(std::string_view token) {
  bool found = false;
  utf8::for_each(token, [&](const utf8::Decoded& d, std::string_view) {
    if (d.valid && is_arabic_letter(d.codepoint)) found = true;
  });
  return found;
}

}  // namespace tashkeel
