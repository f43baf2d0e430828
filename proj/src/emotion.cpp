#include "emograd/emotion.hpp"

#include <stdexcept>
#include <string>

namespace emograd {
namespace {

constexpr std::array<std::string_view, kEmotionCount> kLabels = {
    "admiration", "amusement",   "anger",       "annoyance",     "approval",
    "caring",     "confusion",   "curiosity",   "desire",        "disappointment",
    "disapproval", "disgust",    "embarrassment", "excitement",  "fear",
    "gratitude",  "grief",       "joy",         "love",          "nervousness",
    "optimism",   "pride",       "realization", "relief",        "remorse",
    "sadness",    "surprise",    "neutral",
};

constexpr std::array<std::string_view, kRangeCount> kRangeTokens = {
    "high_neg", "low_neg", "neutral", "low_pos", "high_pos"};

}  // namespace

Emotion emotion_at(std::size_t i) {
  if (i >= kEmotionCount) {
    throw std::out_of_range("emotion index " + std::to_string(i) + " out of range");
  }
  return static_cast<Emotion>(i);
}

std::string_view label(Emotion e) { return kLabels[index_of(e)]; }

std::optional<Emotion> parse_emotion(std::string_view text) {
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (kLabels[i] == text) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

const std::array<Emotion, kEmotionCount>& all_emotions() {
  static const auto all = [] {
    std::array<Emotion, kEmotionCount> a{};
    for (std::size_t i = 0; i < kEmotionCount; ++i) a[i] = static_cast<Emotion>(i);
    return a;
  }();
  return all;
}

std::string_view token(SentimentRange r) { return kRangeTokens[static_cast<std::size_t>(r)]; }

std::optional<SentimentRange> parse_range(std::string_view text) {
  for (std::size_t i = 0; i < kRangeCount; ++i) {
    if (kRangeTokens[i] == text) return static_cast<SentimentRange>(i);
  }
  return std::nullopt;
}

const std::array<SentimentRange, kRangeCount>& all_ranges() {
  static constexpr std::array<SentimentRange, kRangeCount> all = {
      SentimentRange::HighNeg, SentimentRange::LowNeg, SentimentRange::Neutral,
      SentimentRange::LowPos, SentimentRange::HighPos};
  return all;
}

}  // namespace emograd
