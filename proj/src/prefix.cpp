#include "emograd/prefix.hpp"

#include "emograd/error.hpp"

namespace emograd {

std::string_view to_string(PrefixStyle s) { return s == PrefixStyle::FineGrained ? "fine" : "range"; }

std::optional<PrefixStyle> parse_prefix_style(std::string_view text) {
  if (text == "fine") return PrefixStyle::FineGrained;
  if (text == "range") return PrefixStyle::SentimentRange;
  return std::nullopt;
}

std::string prefix_head(Emotion from, Emotion to) {
  std::string out(label(from));
  out += " to ";
  out += label(to);
  out += ": ";
  return out;
}

std::string prefix_head(SentimentRange from, SentimentRange to) {
  std::string out(token(from));
  out += " to ";
  out += token(to);
  out += ": ";
  return out;
}

PrefixedExample make_prefix(const LabeledPair& pair, PrefixStyle style) {
  PrefixedExample ex;
  ex.style = style;
  ex.prefix = style == PrefixStyle::FineGrained ? prefix_head(pair.input_emotion, pair.target_emotion)
                                                : prefix_head(pair.input_range(), pair.target_range());
  ex.input_text = pair.pair.input_text;
  ex.target_text = pair.pair.target_text;
  return ex;
}

ParsedPrefix parse_prefix(std::string_view text, std::optional<PrefixStyle> style) {
  const auto colon = text.find(": ");
  if (colon == std::string_view::npos) {
    throw PrefixParseError(std::string(text.substr(0, 40)), "no ': ' after transition head");
  }
  const std::string_view head = text.substr(0, colon);

  const auto s1 = head.find(' ');
  const auto s2 = s1 == std::string_view::npos ? s1 : head.find(' ', s1 + 1);
  if (s1 == std::string_view::npos || s2 == std::string_view::npos ||
      head.find(' ', s2 + 1) != std::string_view::npos) {
    throw PrefixParseError(std::string(head), "transition head is not '<from> to <to>'");
  }
  const std::string_view from = head.substr(0, s1);
  const std::string_view word = head.substr(s1 + 1, s2 - s1 - 1);
  const std::string_view to = head.substr(s2 + 1);
  if (word != "to") throw PrefixParseError(std::string(word), "expected 'to' in transition head, got");

  ParsedPrefix out;
  out.remainder = std::string(text.substr(colon + 2));

  const auto fe = parse_emotion(from);
  const auto te = parse_emotion(to);
  const auto fr = parse_range(from);
  const auto tr = parse_range(to);

  auto as_fine = [&] {
    if (!fe) throw PrefixParseError(std::string(from), "unknown emotion");
    if (!te) throw PrefixParseError(std::string(to), "unknown emotion");
    out.style = PrefixStyle::FineGrained;
    out.from = *fe;
    out.to = *te;
  };
  auto as_range = [&] {
    if (!fr) throw PrefixParseError(std::string(from), "unknown sentiment range");
    if (!tr) throw PrefixParseError(std::string(to), "unknown sentiment range");
    out.style = PrefixStyle::SentimentRange;
    out.from = *fr;
    out.to = *tr;
  };

  if (style) {
    *style == PrefixStyle::FineGrained ? as_fine() : as_range();
  } else if (fe && te) {
    as_fine();
  } else if (fr && tr) {
    as_range();
  } else if (!fe && !fr) {
    throw PrefixParseError(std::string(from), "unknown emotion or range");
  } else if (!te && !tr) {
    throw PrefixParseError(std::string(to), "unknown emotion or range");
  } else {
    throw PrefixParseError(std::string(to), "endpoint kind does not match");
  }
  return out;
}

}  // namespace emograd
