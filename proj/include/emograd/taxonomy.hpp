#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emograd/emotion.hpp"

namespace emograd {

// One of the 11 GoEmotions adjacency clusters. Cluster 1 is {neutral}.
struct EmotionCluster {
  int id = 0;
  std::vector<Emotion> members;
};

inline constexpr int kClusterCount = 11;

const std::vector<EmotionCluster>& clusters();

const EmotionCluster& cluster_of(Emotion e);

// Median VADER compound score of GoEmotions texts labeled with `e`.
double median_score(Emotion e);

SentimentRange range_of(Emotion e);

// Cross-check rule: 0 -> Neutral, 0 < |m| < 0.44 -> Low, |m| >= 0.44 -> High.
inline constexpr double kHighTierThreshold = 0.44;
SentimentRange range_from_median(double median);

struct TransitionEdge {
  Emotion from;
  Emotion to;
  int source_cluster;
  SentimentRange from_range;
  SentimentRange to_range;

  friend bool operator==(const TransitionEdge&, const TransitionEdge&) = default;
};

struct GraphOptions {
  // Also connect emotions in different clusters when the target has the
  // same polarity (or neutral range) and a strictly lower tier.
  bool cross_cluster = false;
};

// Directed graph of intensity-lowering transitions. Immutable once built.
class TransitionGraph {
 public:
  explicit TransitionGraph(std::vector<TransitionEdge> edges);

  const std::vector<TransitionEdge>& edges() const { return edges_; }

  // Out-neighbours of `e`, sorted by canonical index.
  std::span<const Emotion> targets(Emotion e) const;

  bool has_edge(Emotion from, Emotion to) const;

 private:
  std::vector<TransitionEdge> edges_;
  std::array<std::vector<Emotion>, kEmotionCount> adjacency_;
};

// Edges: same cluster with strictly lower tier, plus a -> neutral for every
// a != neutral.
TransitionGraph build_transition_graph(const GraphOptions& options = {});

// Shared default graph.
const TransitionGraph& default_graph();

std::vector<Emotion> lowering_targets(const TransitionGraph& graph, Emotion e);

// Uniform draw over lowering_targets(e) from a generator seeded with `seed`.
// When the draw lands on neutral and `fallback` is set, the fallback is
// returned instead. Empty when there are no targets and no fallback.
std::optional<Emotion> select_target(const TransitionGraph& graph, Emotion e,
                                     std::uint64_t seed,
                                     std::optional<Emotion> fallback = std::nullopt);

// Audit dump: emotions, clusters, medians, ranges and edges as one JSON
// document (schema in README).
std::string taxonomy_json(const TransitionGraph& graph, int indent = 2);

}  // namespace emograd
