#include "emograd/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "emograd/random.hpp"

namespace emograd {
namespace {

using E = Emotion;
using R = SentimentRange;

struct EmotionRow {
  Emotion emotion;
  int cluster;
  double median;
  SentimentRange range;
};

// GoEmotions clusters, median VADER compound per emotion, and the five-way
// intensity grouping. Indexed by canonical emotion index.
constexpr std::array<EmotionRow, kEmotionCount> kRows = {{
    {E::admiration, 4, 0.6249, R::HighPos},
    {E::amusement, 2, 0.4404, R::HighPos},
    {E::anger, 11, -0.5234, R::HighNeg},
    {E::annoyance, 11, -0.296, R::LowNeg},
    {E::approval, 6, 0.296, R::LowPos},
    {E::caring, 3, 0.3412, R::LowPos},
    {E::confusion, 7, 0.0, R::Neutral},
    {E::curiosity, 7, 0.0, R::Neutral},
    {E::desire, 3, 0.4019, R::LowPos},
    {E::disappointment, 10, -0.3059, R::LowNeg},
    {E::disapproval, 11, -0.0644, R::LowNeg},
    {E::disgust, 11, -0.51805, R::HighNeg},
    {E::embarrassment, 9, -0.26655, R::LowNeg},
    {E::excitement, 2, 0.4404, R::HighPos},
    {E::fear, 8, -0.4404, R::HighNeg},
    {E::gratitude, 5, 0.5574, R::HighPos},
    {E::grief, 10, -0.5423, R::HighNeg},
    {E::joy, 2, 0.6008, R::HighPos},
    {E::love, 2, 0.6369, R::HighPos},
    {E::nervousness, 8, -0.3597, R::LowNeg},
    {E::optimism, 3, 0.5081, R::HighPos},
    {E::pride, 4, 0.4767, R::HighPos},
    {E::realization, 6, 0.0, R::Neutral},
    {E::relief, 5, 0.4391, R::LowPos},
    {E::remorse, 9, -0.0772, R::LowNeg},
    {E::sadness, 10, -0.4404, R::HighNeg},
    {E::surprise, 7, 0.0, R::Neutral},
    {E::neutral, 1, 0.0, R::Neutral},
}};

static_assert([] {
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    if (index_of(kRows[i].emotion) != i) return false;
  }
  return true;
}());

// Member order follows the published grouping table.
std::vector<EmotionCluster> make_clusters() {
  return {
      {1, {E::neutral}},
      {2, {E::amusement, E::excitement, E::joy, E::love}},
      {3, {E::optimism, E::desire, E::caring}},
      {4, {E::pride, E::admiration}},
      {5, {E::gratitude, E::relief}},
      {6, {E::approval, E::realization}},
      {7, {E::surprise, E::curiosity, E::confusion}},
      {8, {E::fear, E::nervousness}},
      {9, {E::remorse, E::embarrassment}},
      {10, {E::disappointment, E::sadness, E::grief}},
      {11, {E::disgust, E::anger, E::annoyance, E::disapproval}},
  };
}

bool lowers(Emotion from, Emotion to, const GraphOptions& options) {
  if (from == to) return false;
  const auto rf = range_of(from);
  const auto rt = range_of(to);
  if (tier(rt) >= tier(rf)) return false;
  if (kRows[index_of(from)].cluster == kRows[index_of(to)].cluster) return true;
  return options.cross_cluster && (polarity(rt) == polarity(rf) || polarity(rt) == 0);
}

}  // namespace

const std::vector<EmotionCluster>& clusters() {
  static const std::vector<EmotionCluster> all = make_clusters();
  return all;
}

const EmotionCluster& cluster_of(Emotion e) {
  return clusters()[static_cast<std::size_t>(kRows[index_of(e)].cluster - 1)];
}

double median_score(Emotion e) { return kRows[index_of(e)].median; }

SentimentRange range_of(Emotion e) { return kRows[index_of(e)].range; }

SentimentRange range_from_median(double median) {
  if (median == 0.0) return R::Neutral;
  const bool high = std::fabs(median) >= kHighTierThreshold;
  if (median < 0) return high ? R::HighNeg : R::LowNeg;
  return high ? R::HighPos : R::LowPos;
}

TransitionGraph::TransitionGraph(std::vector<TransitionEdge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair(index_of(a.from), index_of(a.to)) < std::pair(index_of(b.from), index_of(b.to));
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end(),
                           [](const auto& a, const auto& b) { return a.from == b.from && a.to == b.to; }),
               edges_.end());
  for (const auto& edge : edges_) adjacency_[index_of(edge.from)].push_back(edge.to);
}

std::span<const Emotion> TransitionGraph::targets(Emotion e) const {
  return adjacency_[index_of(e)];
}

bool TransitionGraph::has_edge(Emotion from, Emotion to) const {
  const auto& out = adjacency_[index_of(from)];
  return std::find(out.begin(), out.end(), to) != out.end();
}

TransitionGraph build_transition_graph(const GraphOptions& options) {
  std::vector<TransitionEdge> edges;
  for (Emotion from : all_emotions()) {
    if (from == E::neutral) continue;
    for (Emotion to : all_emotions()) {
      if (to == E::neutral || lowers(from, to, options)) {
        edges.push_back({from, to, cluster_of(from).id, range_of(from), range_of(to)});
      }
    }
  }
  return TransitionGraph(std::move(edges));
}

const TransitionGraph& default_graph() {
  static const TransitionGraph graph = build_transition_graph();
  return graph;
}

std::vector<Emotion> lowering_targets(const TransitionGraph& graph, Emotion e) {
  const auto out = graph.targets(e);
  return {out.begin(), out.end()};
}

std::optional<Emotion> select_target(const TransitionGraph& graph, Emotion e, std::uint64_t seed,
                                     std::optional<Emotion> fallback) {
  const auto out = graph.targets(e);
  if (out.empty()) return fallback;
  Rng rng(seed);
  const Emotion pick = out[static_cast<std::size_t>(draw_index(rng, out.size()))];
  if (pick == E::neutral && fallback) return fallback;
  return pick;
}

std::string taxonomy_json(const TransitionGraph& graph, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["emotions"] = ordered_json::array();
  for (Emotion e : all_emotions()) {
    doc["emotions"].push_back({{"index", index_of(e)},
                               {"label", label(e)},
                               {"cluster", cluster_of(e).id},
                               {"median_score", median_score(e)},
                               {"range", token(range_of(e))}});
  }
  doc["clusters"] = ordered_json::array();
  for (const auto& c : clusters()) {
    ordered_json members = ordered_json::array();
    for (Emotion e : c.members) members.push_back(label(e));
    doc["clusters"].push_back({{"id", c.id}, {"members", members}});
  }
  doc["ranges"] = ordered_json::array();
  for (SentimentRange r : all_ranges()) {
    ordered_json members = ordered_json::array();
    for (Emotion e : all_emotions()) {
      if (range_of(e) == r) members.push_back(label(e));
    }
    doc["ranges"].push_back(
        {{"range", token(r)}, {"tier", tier(r)}, {"polarity", polarity(r)}, {"members", members}});
  }
  doc["edges"] = ordered_json::array();
  for (const auto& edge : graph.edges()) {
    doc["edges"].push_back({{"from", label(edge.from)},
                            {"to", label(edge.to)},
                            {"cluster", edge.source_cluster},
                            {"from_range", token(edge.from_range)},
                            {"to_range", token(edge.to_range)}});
  }
  return doc.dump(indent);
}

}  // namespace emograd
