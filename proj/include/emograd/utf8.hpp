#pragma once

#include <string>
#include <string_view>

namespace emograd::utf8 {

// Invalid sequences decode to U+FFFD.
std::u32string decode(std::string_view bytes);

void append(std::string& out, char32_t cp);

std::string encode(std::u32string_view text);

// Same set as Python's str.split() with no arguments.
bool is_space(char32_t c);

// ASCII punctuation (Python's string.punctuation).
bool is_ascii_punct(char32_t c);

// Unicode punctuation used by the metric tokenizer: ASCII punctuation, the
// Latin-1 punctuation signs, General Punctuation (U+2010-U+205E) and CJK
// symbols and punctuation (U+3001-U+303F).
bool is_punct(char32_t c);

// Case mapping covers ASCII and Latin-1 letters; other code points are
// treated as uncased.
bool is_upper(char32_t c);
bool is_lower(char32_t c);
char32_t to_lower(char32_t c);

std::string to_lower(std::string_view text);

}  // namespace emograd::utf8
