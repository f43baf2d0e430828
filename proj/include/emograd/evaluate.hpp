#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emograd/emotion.hpp"

namespace emograd {

struct EvalRecord {
  std::string id;
  std::string prediction;
  std::string reference;
  Emotion target_emotion = Emotion::neutral;
  std::optional<Emotion> prediction_emotion;  // none when the classifier gave no label
};

struct ExactScores {
  double exact_sr = 0.0;
  double exact_fe = 0.0;
};

// Unlabeled predictions count as misses in both. Throws std::invalid_argument
// on empty input.
ExactScores exact_scores(std::span<const EvalRecord> records);

struct RecordScores {
  std::string id;
  bool fe_match = false;
  bool sr_match = false;
  double sentence_bleu = 0.0;
  double rouge_l = 0.0;
  double meteor = 0.0;
};

struct EvalReport {
  std::size_t n = 0;
  std::size_t n_labeled = 0;
  double exact_sr = 0.0;
  double exact_fe = 0.0;
  double bleu = 0.0;     // corpus level
  double rouge_l = 0.0;  // mean over records
  double meteor = 0.0;   // mean over records
  std::vector<RecordScores> records;
};

struct EvalOptions {
  double rouge_beta = 1.0;
};

// Throws std::invalid_argument on empty input.
EvalReport evaluate(std::span<const EvalRecord> records, const EvalOptions& options = {});

// Aligned table with "Emotion-Transition" and "Paraphrasing" column groups.
std::string format_report_table(const EvalReport& report);

}  // namespace emograd
