#include "emograd/metrics.hpp"
#include "emograd/utf8.hpp"

namespace emograd::metrics {

Tokens tokenize(std::string_view text) {
  Tokens out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };
  for (char32_t c : utf8::decode(text)) {
    if (utf8::is_space(c)) {
      flush();
    } else if (utf8::is_punct(c)) {
      flush();
      std::string p;
      utf8::append(p, c);
      out.push_back(std::move(p));
    } else {
      utf8::append(current, utf8::to_lower(c));
    }
  }
  flush();
  return out;
}

}  // namespace emograd::metrics
