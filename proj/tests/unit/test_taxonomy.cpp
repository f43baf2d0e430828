#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "emograd/taxonomy.hpp"
#include "expected_tables.hpp"

namespace emograd {
namespace {

Emotion E(std::string_view s) { return *parse_emotion(s); }

TEST(Emotion, TwentyEightLabelsRoundTrip) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    const Emotion e = emotion_at(i);
    EXPECT_EQ(index_of(e), i);
    EXPECT_EQ(parse_emotion(label(e)), e);
    seen.insert(label(e));
  }
  EXPECT_EQ(seen.size(), 28u);
  EXPECT_EQ(label(emotion_at(0)), "admiration");
  EXPECT_EQ(label(emotion_at(27)), "neutral");
  EXPECT_THROW(emotion_at(28), std::out_of_range);
  EXPECT_FALSE(parse_emotion("Anger"));
  EXPECT_FALSE(parse_emotion("rage"));
}

TEST(Emotion, RangeTokens) {
  for (SentimentRange r : all_ranges()) EXPECT_EQ(parse_range(token(r)), r);
  EXPECT_EQ(token(SentimentRange::HighNeg), "high_neg");
  EXPECT_EQ(token(SentimentRange::LowPos), "low_pos");
  EXPECT_FALSE(parse_range("high negative"));
  EXPECT_EQ(tier(SentimentRange::HighPos), 2);
  EXPECT_EQ(tier(SentimentRange::LowNeg), 1);
  EXPECT_EQ(tier(SentimentRange::Neutral), 0);
  EXPECT_EQ(polarity(SentimentRange::LowNeg), -1);
  EXPECT_EQ(polarity(SentimentRange::HighPos), 1);
}

TEST(Taxonomy, ClustersMatchTable) {
  const auto& expected = testing::expected_clusters();
  ASSERT_EQ(clusters().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(clusters()[i].id, expected[i].id);
    std::set<std::string_view> got, want(expected[i].members.begin(), expected[i].members.end());
    for (Emotion e : clusters()[i].members) got.insert(label(e));
    EXPECT_EQ(got, want) << "cluster " << expected[i].id;
  }
  for (Emotion e : all_emotions()) {
    int hits = 0;
    for (const auto& c : clusters()) hits += static_cast<int>(std::count(c.members.begin(), c.members.end(), e));
    EXPECT_EQ(hits, 1) << label(e);
  }
  EXPECT_EQ(cluster_of(Emotion::anger).id, 11);
  EXPECT_EQ(cluster_of(Emotion::neutral).id, 1);
}

TEST(Taxonomy, MediansMatchTable) {
  for (const auto& [name, m] : testing::expected_medians()) EXPECT_EQ(median_score(E(name)), m) << name;
}

TEST(Taxonomy, RangesMatchTable) {
  std::size_t total = 0;
  for (const auto& [tok, members] : testing::expected_ranges()) {
    for (auto name : members) EXPECT_EQ(range_of(E(name)), *parse_range(tok)) << name;
    total += members.size();
  }
  EXPECT_EQ(total, 28u);
}

TEST(Taxonomy, TierRuleReproducesRanges) {
  for (Emotion e : all_emotions()) EXPECT_EQ(range_from_median(median_score(e)), range_of(e)) << label(e);
  EXPECT_EQ(range_from_median(0.44), SentimentRange::HighPos);
  EXPECT_EQ(range_from_median(-0.44), SentimentRange::HighNeg);
  EXPECT_EQ(range_from_median(0.4399), SentimentRange::LowPos);
  EXPECT_EQ(range_from_median(-0.0001), SentimentRange::LowNeg);
  EXPECT_EQ(range_from_median(0.0), SentimentRange::Neutral);
}

TEST(Graph, SpotChecks) {
  const auto& g = default_graph();
  EXPECT_EQ(lowering_targets(g, Emotion::anger),
            (std::vector<Emotion>{Emotion::annoyance, Emotion::disapproval, Emotion::neutral}));
  EXPECT_EQ(lowering_targets(g, Emotion::fear), (std::vector<Emotion>{Emotion::nervousness, Emotion::neutral}));
  EXPECT_EQ(lowering_targets(g, Emotion::surprise), (std::vector<Emotion>{Emotion::neutral}));
  EXPECT_TRUE(lowering_targets(g, Emotion::neutral).empty());
  EXPECT_EQ(lowering_targets(g, Emotion::grief),
            (std::vector<Emotion>{Emotion::disappointment, Emotion::neutral}));
  EXPECT_EQ(lowering_targets(g, Emotion::love), (std::vector<Emotion>{Emotion::neutral}));
  EXPECT_EQ(lowering_targets(g, Emotion::optimism),
            (std::vector<Emotion>{Emotion::caring, Emotion::desire, Emotion::neutral}));
}

TEST(Graph, EveryEdgeFollowsTheRule) {
  const auto& g = default_graph();
  for (const auto& edge : g.edges()) {
    EXPECT_NE(edge.from, Emotion::neutral);
    EXPECT_EQ(edge.from_range, range_of(edge.from));
    EXPECT_EQ(edge.to_range, range_of(edge.to));
    if (edge.to == Emotion::neutral) continue;
    EXPECT_EQ(cluster_of(edge.from).id, cluster_of(edge.to).id);
    EXPECT_GT(tier(range_of(edge.from)), tier(range_of(edge.to)));
    EXPECT_EQ(edge.source_cluster, cluster_of(edge.from).id);
  }
  for (Emotion e : all_emotions()) {
    if (e == Emotion::neutral) continue;
    EXPECT_TRUE(g.has_edge(e, Emotion::neutral)) << label(e);
    EXPECT_FALSE(g.has_edge(e, e));
  }
}

TEST(Graph, CompleteUnderTheRule) {
  const auto& g = default_graph();
  std::size_t expected_edges = 0;
  for (Emotion a : all_emotions()) {
    for (Emotion b : all_emotions()) {
      const bool rule = a != Emotion::neutral &&
                        (b == Emotion::neutral ||
                         (cluster_of(a).id == cluster_of(b).id && tier(range_of(a)) > tier(range_of(b))));
      EXPECT_EQ(g.has_edge(a, b), rule) << label(a) << " -> " << label(b);
      expected_edges += rule;
    }
  }
  EXPECT_EQ(g.edges().size(), expected_edges);
}

TEST(Graph, CrossClusterOptionKeepsPolarity) {
  const auto g = build_transition_graph({true});
  EXPECT_TRUE(g.has_edge(Emotion::anger, Emotion::nervousness));
  EXPECT_FALSE(g.has_edge(Emotion::anger, Emotion::caring));
  for (const auto& edge : g.edges()) {
    // Neutral-range emotions still reach neutral at equal tier.
    if (edge.to == Emotion::neutral) continue;
    EXPECT_GT(tier(edge.from_range), tier(edge.to_range));
    if (edge.to_range != SentimentRange::Neutral) EXPECT_EQ(polarity(edge.from_range), polarity(edge.to_range));
  }
  for (const auto& edge : default_graph().edges()) EXPECT_TRUE(g.has_edge(edge.from, edge.to));
}

TEST(SelectTarget, DeterministicAndUniform) {
  const auto& g = default_graph();
  std::array<int, kEmotionCount> counts{};
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto t = select_target(g, Emotion::anger, seed);
    ASSERT_TRUE(t);
    ASSERT_TRUE(g.has_edge(Emotion::anger, *t));
    ++counts[index_of(*t)];
    EXPECT_EQ(select_target(g, Emotion::anger, seed), t);
  }
  for (Emotion t : {Emotion::annoyance, Emotion::disapproval, Emotion::neutral}) {
    EXPECT_NEAR(counts[index_of(t)] / 10000.0, 1.0 / 3.0, 0.03);
  }
}

TEST(SelectTarget, FallbackReplacesNeutral) {
  const auto& g = default_graph();
  EXPECT_FALSE(select_target(g, Emotion::neutral, 1));
  EXPECT_EQ(select_target(g, Emotion::neutral, 1, Emotion::joy), Emotion::joy);
  // surprise has only the neutral edge.
  EXPECT_EQ(select_target(g, Emotion::surprise, 5), Emotion::neutral);
  EXPECT_EQ(select_target(g, Emotion::surprise, 5, Emotion::confusion), Emotion::confusion);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = select_target(g, Emotion::fear, seed, Emotion::fear);
    ASSERT_TRUE(t);
    EXPECT_NE(*t, Emotion::neutral);
  }
}

TEST(TaxonomyJson, Shape) {
  const auto j = nlohmann::json::parse(taxonomy_json(default_graph()));
  ASSERT_EQ(j.at("emotions").size(), 28u);
  EXPECT_EQ(j.at("clusters").size(), 11u);
  EXPECT_EQ(j.at("ranges").size(), 5u);
  EXPECT_EQ(j.at("edges").size(), default_graph().edges().size());
  const auto& grief = j.at("emotions").at(index_of(Emotion::grief));
  EXPECT_EQ(grief.at("label"), "grief");
  EXPECT_EQ(grief.at("median_score"), -0.5423);
  EXPECT_EQ(grief.at("range"), "high_neg");
  EXPECT_EQ(grief.at("cluster"), 10);
}

}  // namespace
}  // namespace emograd
