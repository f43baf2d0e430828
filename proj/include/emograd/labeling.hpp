#pragma once

#include <array>
#include <optional>

#include "emograd/emotion.hpp"

namespace emograd {

// Classifier confidences per emotion; emotions never set read as 0.
class EmotionScores {
 public:
  EmotionScores() { values_.fill(0.0); }

  // Throws std::invalid_argument unless 0 <= confidence <= 1.
  void set(Emotion e, double confidence);

  double get(Emotion e) const { return values_[index_of(e)]; }

  bool empty() const { return count_ == 0; }

 private:
  std::array<double, kEmotionCount> values_{};
  std::size_t count_ = 0;
};

struct LabelDecision {
  std::optional<Emotion> label;
  double top_score = 0.0;
  double threshold = 0.5;
};

inline constexpr double kDefaultThreshold = 0.5;

// Highest-confidence emotion if it is strictly above `threshold`; ties go to
// the lowest canonical index. Throws std::invalid_argument for a threshold
// outside [0, 1].
LabelDecision dominant_emotion(const EmotionScores& scores, double threshold = kDefaultThreshold);

}  // namespace emograd
