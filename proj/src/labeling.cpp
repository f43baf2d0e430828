#include "emograd/labeling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace emograd {

void EmotionScores::set(Emotion e, double confidence) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw std::invalid_argument("confidence for " + std::string(label(e)) + " outside [0,1]: " +
                                std::to_string(confidence));
  }
  values_[index_of(e)] = confidence;
  ++count_;
}

LabelDecision dominant_emotion(const EmotionScores& scores, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold outside [0,1]: " + std::to_string(threshold));
  }
  LabelDecision decision;
  decision.threshold = threshold;
  if (scores.empty()) return decision;

  Emotion best = Emotion::admiration;
  double best_score = scores.get(best);
  for (Emotion e : all_emotions()) {
    if (scores.get(e) > best_score) {
      best = e;
      best_score = scores.get(e);
    }
  }
  decision.top_score = best_score;
  if (best_score > threshold) decision.label = best;
  return decision;
}

}  // namespace emograd
