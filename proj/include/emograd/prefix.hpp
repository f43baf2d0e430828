#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "emograd/emotion.hpp"
#include "emograd/pipeline.hpp"

namespace emograd {

enum class PrefixStyle { FineGrained, SentimentRange };

std::string_view to_string(PrefixStyle s);
std::optional<PrefixStyle> parse_prefix_style(std::string_view text);  // "fine" | "range"

struct PrefixedExample {
  PrefixStyle style = PrefixStyle::FineGrained;
  std::string prefix;  // "<from> to <to>: "
  std::string input_text;
  std::string target_text;

  std::string source() const { return prefix + input_text; }
};

// FineGrained: "anger to disappointment: <input>"
// SentimentRange: "high_neg to low_neg: <input>"
PrefixedExample make_prefix(const LabeledPair& pair, PrefixStyle style);

std::string prefix_head(Emotion from, Emotion to);
std::string prefix_head(SentimentRange from, SentimentRange to);

using PrefixEndpoint = std::variant<Emotion, SentimentRange>;

struct ParsedPrefix {
  PrefixStyle style;
  PrefixEndpoint from;
  PrefixEndpoint to;
  std::string remainder;
};

// Splits "<X> to <Y>: rest" at the first ": ". Both endpoints must be emotion
// labels or both range tokens; "neutral" is both, so without `style` a head
// made only of emotion labels is read as fine-grained. Throws
// PrefixParseError carrying the offending token.
ParsedPrefix parse_prefix(std::string_view text, std::optional<PrefixStyle> style = std::nullopt);

}  // namespace emograd
