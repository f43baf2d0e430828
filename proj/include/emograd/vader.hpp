#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "emograd/emotion.hpp"

namespace emograd::vader {

// Reference constants (vaderSentiment 3.3.2).
inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr int kMaxExclamations = 4;
inline constexpr double kQuestionIncrement = 0.18;
inline constexpr double kQuestionCap = 0.96;
inline constexpr double kNormalizationAlpha = 15.0;

struct SentimentLexicon {
  std::unordered_map<std::string, double> valence;
  std::unordered_map<std::string, double> boosters;
  std::unordered_set<std::string> negations;
  std::unordered_map<std::string, double> idioms;
  // Single-codepoint emoji (UTF-8) -> textual description.
  std::unordered_map<std::string, std::string> emoji;

  // Loads `vader_lexicon.txt`, `vader_rules.json` and, when present,
  // `emoji_utf8_lexicon.txt` from `dir`.
  static SentimentLexicon load(const std::filesystem::path& dir);
};

// token<TAB>valence[<TAB>ignored...] per line. Blank lines are skipped; any
// other malformed line throws DataError naming the line number.
std::unordered_map<std::string, double> read_valence_table(std::istream& in,
                                                           std::string_view source = "lexicon");

void read_rules_json(std::istream& in, SentimentLexicon& lexicon);

std::unordered_map<std::string, std::string> read_emoji_table(std::istream& in);

// Directory holding the bundled lexicon: $EMOGRAD_DATA_DIR, else the
// compiled-in default.
std::filesystem::path default_data_dir();

const SentimentLexicon& default_lexicon();

struct PolarityScores {
  double neg = 0.0;
  double neu = 0.0;
  double pos = 0.0;
  double compound = 0.0;
};

// s / sqrt(s^2 + alpha), clamped to [-1, 1].
double normalize(double score, double alpha = kNormalizationAlpha);

PolarityScores score_text(const SentimentLexicon& lexicon, std::string_view text);

// Per-emotion median of compound scores; emotions without texts are omitted.
std::map<Emotion, double> median_by_emotion(
    const SentimentLexicon& lexicon, const std::vector<std::pair<std::string, Emotion>>& corpus);

std::map<Emotion, double> median_by_emotion(const std::vector<std::pair<double, Emotion>>& scored);

}  // namespace emograd::vader
