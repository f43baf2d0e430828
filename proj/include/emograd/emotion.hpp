#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace emograd {

// The 28 GoEmotions labels. Enumerator order is the canonical index order:
// alphabetical, with neutral last.
enum class Emotion : std::uint8_t {
  admiration,
  amusement,
  anger,
  annoyance,
  approval,
  caring,
  confusion,
  curiosity,
  desire,
  disappointment,
  disapproval,
  disgust,
  embarrassment,
  excitement,
  fear,
  gratitude,
  grief,
  joy,
  love,
  nervousness,
  optimism,
  pride,
  realization,
  relief,
  remorse,
  sadness,
  surprise,
  neutral,
};

inline constexpr std::size_t kEmotionCount = 28;

constexpr std::size_t index_of(Emotion e) { return static_cast<std::size_t>(e); }

// Throws std::out_of_range for i >= kEmotionCount.
Emotion emotion_at(std::size_t i);

std::string_view label(Emotion e);

std::optional<Emotion> parse_emotion(std::string_view text);

const std::array<Emotion, kEmotionCount>& all_emotions();

// Five sentiment-intensity ranges, ordered from most negative to most positive.
enum class SentimentRange : std::uint8_t { HighNeg, LowNeg, Neutral, LowPos, HighPos };

inline constexpr std::size_t kRangeCount = 5;

// Magnitude independent of sign: Neutral=0, Low*=1, High*=2.
constexpr int tier(SentimentRange r) {
  switch (r) {
    case SentimentRange::HighNeg:
    case SentimentRange::HighPos:
      return 2;
    case SentimentRange::LowNeg:
    case SentimentRange::LowPos:
      return 1;
    case SentimentRange::Neutral:
      return 0;
  }
  return 0;
}

constexpr int polarity(SentimentRange r) {
  switch (r) {
    case SentimentRange::HighNeg:
    case SentimentRange::LowNeg:
      return -1;
    case SentimentRange::Neutral:
      return 0;
    case SentimentRange::LowPos:
    case SentimentRange::HighPos:
      return 1;
  }
  return 0;
}

// Prefix tokens: high_neg, low_neg, neutral, low_pos, high_pos.
std::string_view token(SentimentRange r);

std::optional<SentimentRange> parse_range(std::string_view text);

const std::array<SentimentRange, kRangeCount>& all_ranges();

}  // namespace emograd
