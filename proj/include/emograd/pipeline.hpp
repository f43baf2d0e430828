#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "emograd/emotion.hpp"
#include "emograd/labeling.hpp"
#include "emograd/random.hpp"
#include "emograd/taxonomy.hpp"

namespace emograd {

enum class Source { paws, mrpc, quora, other };

std::string_view to_string(Source s);
std::optional<Source> parse_source(std::string_view text);

struct ParaphrasePair {
  std::string id;
  std::string input_text;
  std::string target_text;
  Source source = Source::other;

  friend bool operator==(const ParaphrasePair&, const ParaphrasePair&) = default;
};

// A pair with both sides labeled. Ranges are always derived from the
// emotions, so they cannot drift out of sync.
struct LabeledPair {
  ParaphrasePair pair;
  Emotion input_emotion = Emotion::neutral;
  Emotion target_emotion = Emotion::neutral;

  SentimentRange input_range() const { return range_of(input_emotion); }
  SentimentRange target_range() const { return range_of(target_emotion); }

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct TransitionKey {
  Emotion from;
  Emotion to;

  friend bool operator==(const TransitionKey&, const TransitionKey&) = default;
};

inline TransitionKey transition_of(const LabeledPair& p) { return {p.input_emotion, p.target_emotion}; }

struct Rejection {
  std::string id;
  std::string reason;  // "unlabeled" or "missing-scores"
};

struct JoinResult {
  std::vector<LabeledPair> labeled;
  std::vector<Rejection> rejected;
};

using DecisionIndex = std::unordered_map<std::string, LabelDecision>;

JoinResult join_labels(std::span<const ParaphrasePair> pairs, const DecisionIndex& input_decisions,
                       const DecisionIndex& target_decisions);

// Keeps pairs whose emotions differ and where neither side is neutral.
std::vector<LabeledPair> filter_transitions(std::span<const LabeledPair> pairs);

enum class IntensityOrder {
  tier,    // compare range tiers; equal tiers are dropped
  median,  // compare |median score|; equal magnitudes are dropped
};

std::string_view to_string(IntensityOrder o);
std::optional<IntensityOrder> parse_intensity_order(std::string_view text);

struct OrientOptions {
  IntensityOrder order = IntensityOrder::tier;
  // Drop pairs whose (oriented) transition is not an edge of `graph`.
  bool graph_valid_only = false;
  const TransitionGraph* graph = nullptr;  // default_graph() when null
};

// Every returned pair lowers intensity: increasing pairs have both texts and
// both emotions swapped, equal-intensity pairs are removed.
std::vector<LabeledPair> orient_lowering(std::span<const LabeledPair> pairs,
                                         const OrientOptions& options = {});

template <typename T>
struct Split {
  std::vector<T> train;
  std::vector<T> test;
};

// floor(n * fraction) with a small tolerance for binary rounding, so that
// e.g. 0.29 * 100 gives 29.
inline std::size_t fraction_count_floor(std::size_t n, double fraction) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * fraction + 1e-9));
}

inline std::size_t fraction_count_ceil(std::size_t n, double fraction) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(n) * fraction - 1e-9));
}

// Seeded shuffle, then the first floor(n * train_fraction) items go to train.
// Throws std::invalid_argument unless 0 < train_fraction < 1.
template <typename T>
Split<T> split(std::span<const T> items, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("train fraction must be in (0, 1)");
  }
  std::vector<T> shuffled(items.begin(), items.end());
  Rng rng(seed);
  shuffle(std::span<T>(shuffled), rng);
  const std::size_t n_train = fraction_count_floor(shuffled.size(), train_fraction);
  Split<T> out;
  out.train.assign(std::make_move_iterator(shuffled.begin()),
                   std::make_move_iterator(shuffled.begin() + static_cast<std::ptrdiff_t>(n_train)));
  out.test.assign(std::make_move_iterator(shuffled.begin() + static_cast<std::ptrdiff_t>(n_train)),
                  std::make_move_iterator(shuffled.end()));
  return out;
}

struct FewShotCaps {
  std::size_t train = 12;
  std::size_t test = 3;
};

// Keeps the first `caps.train` / `caps.test` pairs of every transition type,
// in the given order. Smaller caps therefore select a prefix of larger ones.
Split<LabeledPair> cap_few_shot(std::span<const LabeledPair> train, std::span<const LabeledPair> test,
                                FewShotCaps caps = {});

struct DatasetStats {
  std::size_t total = 0;
  std::size_t transiting_with_neutral = 0;
  std::size_t transiting_without_neutral = 0;
  std::size_t lowering = 0;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

// total: pairs read; with_neutral: labeled pairs whose emotions differ;
// without_neutral: filter_transitions output; lowering: orient_lowering output.
DatasetStats compute_stats(std::size_t total_pairs, std::span<const LabeledPair> labeled,
                           std::span<const LabeledPair> filtered, std::span<const LabeledPair> oriented);

struct ReconstructResult {
  JoinResult joined;
  std::vector<LabeledPair> filtered;
  std::vector<LabeledPair> oriented;
  DatasetStats stats;
};

// Label join, filter and orientation in one pass over `pairs`.
ReconstructResult reconstruct(std::span<const ParaphrasePair> pairs, const DecisionIndex& input_decisions,
                              const DecisionIndex& target_decisions, const OrientOptions& options = {});

// Re-targets a seeded ceil(fraction * n) subset of `pairs` with
// select_target(input emotion, fallback = original target).
struct RetargetResult {
  std::vector<LabeledPair> pairs;
  std::vector<bool> retargeted;  // in the sampled subset; parallel to pairs
  std::vector<bool> fell_back;   // sampled, but the draw was neutral (or empty)
  std::vector<Emotion> original_targets;
};

inline constexpr double kCaseStudyFraction = 0.35;

RetargetResult retarget_case_study(std::span<const LabeledPair> pairs, const TransitionGraph& graph,
                                   std::uint64_t seed, double fraction = kCaseStudyFraction);

}  // namespace emograd
