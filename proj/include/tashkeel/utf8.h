#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace tashkeel::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t codepoint;
  // Bytes consumed; always >= 1 so a decoding loop makes progress.
  std::size_t length;
  bool valid;
};

// Decodes the scalar value starting at text[pos]. Malformed, overlong and
// surrogate sequences decode as a single invalid byte.
Decoded decode(std::string_view text, std::size_t pos);

void append(std::string& out, char32_t c);
std::string encode(char32_t c);

std::u32string to_u32(std::string_view text);
std::string from_u32(std::u32string_view text);

// Calls fn(Decoded, std::string_view bytes) for every scalar value.
template <typename Fn>
void for_each(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const Decoded d = decode(text, pos);
    fn(d, text.substr(pos, d.length));
    pos += d.length;
  }
}

}  // namespace tashkeel::utf8
