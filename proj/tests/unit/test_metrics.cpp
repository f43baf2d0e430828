#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>

#include <json.hpp>

#include "emograd/evaluate.hpp"
#include "emograd/metrics.hpp"
#include "emograd/random.hpp"
#include "emograd/records.hpp"
#include "fixtures.hpp"

namespace emograd::metrics {
namespace {

Tokens T(std::initializer_list<const char*> words) { return Tokens(words.begin(), words.end()); }

TEST(Tokenize, Rules) {
  EXPECT_EQ(tokenize("He is angry."), T({"he", "is", "angry", "."}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" \t\n ").empty());
  EXPECT_EQ(tokenize("don't stop"), T({"don", "'", "t", "stop"}));
  EXPECT_EQ(tokenize("Wait...NOW!"), T({"wait", ".", ".", ".", "now", "!"}));
  EXPECT_EQ(tokenize("caf\xC3\x89 \xE2\x80\x94 ok"), T({"caf\xC3\xA9", "\xE2\x80\x94", "ok"}));
  EXPECT_EQ(tokenize("a\xC2\xA0" "b"), T({"a", "b"}));  // no-break space
}

TEST(Porter, MatchesReferenceFixture) {
  const auto rows = testing::read_tsv(testing::fixture_path("porter_reference.tsv"));
  ASSERT_GT(rows.size(), 500u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 2u);
    EXPECT_EQ(porter_stem(row[0]), row[1]) << row[0];
  }
}

TEST(Porter, ClassicExamples) {
  EXPECT_EQ(porter_stem("caresses"), "caress");
  EXPECT_EQ(porter_stem("running"), "run");
  EXPECT_EQ(porter_stem("relational"), "relat");
  EXPECT_EQ(porter_stem("generalizations"), "gener");
  EXPECT_EQ(porter_stem(""), "");
}

TEST(Bleu, Identity) {
  const Tokens s = T({"the", "cat", "sat", "on", "the", "mat"});
  const std::vector<Tokens> one = {s};
  EXPECT_DOUBLE_EQ(bleu(one, one), 1.0);
}

TEST(Bleu, Disjoint) {
  const std::vector<Tokens> r = {T({"a", "b", "c", "d"})}, h = {T({"w", "x", "y", "z"})};
  EXPECT_EQ(bleu(r, h), 0.0);
}

TEST(Bleu, RepeatedBigramsClipToZero) {
  // Clipped counts are 5/7, 3/6, 1/5, 0/4: the 4-gram precision is zero.
  NgramStats s;
  s.add(T({"the", "cat", "sat", "on", "the", "mat"}), T({"the", "cat", "the", "cat", "on", "the", "mat"}));
  EXPECT_EQ(s.matches, (std::array<std::size_t, 4>{5, 3, 1, 0}));
  EXPECT_EQ(s.totals, (std::array<std::size_t, 4>{7, 6, 5, 4}));
  EXPECT_EQ(s.bleu(), 0.0);
}

TEST(Bleu, BrevityPenalty) {
  NgramStats s;
  s.add(T({"a", "b", "c", "d", "e", "f", "g", "h"}), T({"a", "b", "c", "d"}));
  EXPECT_DOUBLE_EQ(s.brevity_penalty(), std::exp(1.0 - 8.0 / 4.0));
  EXPECT_DOUBLE_EQ(s.bleu(), std::exp(-1.0));
}

TEST(Bleu, Errors) {
  const std::vector<Tokens> one = {T({"a"})}, two = {T({"a"}), T({"b"})};
  EXPECT_THROW(bleu(one, two), std::invalid_argument);
  EXPECT_THROW(bleu(std::vector<Tokens>{}, std::vector<Tokens>{}), std::invalid_argument);
}

TEST(Bleu, OrderInvariant) {
  std::vector<Tokens> r = {T({"the", "cat", "sat", "on", "the", "mat"}), T({"a", "dog", "ran", "in", "the", "park"})};
  std::vector<Tokens> h = {T({"the", "cat", "is", "on", "the", "mat"}), T({"a", "dog", "ran", "through", "the", "park"})};
  const double forward = bleu(r, h);
  std::swap(r[0], r[1]);
  std::swap(h[0], h[1]);
  EXPECT_EQ(bleu(r, h), forward);
}

TEST(SentenceBleu, Smoothed) {
  EXPECT_DOUBLE_EQ(sentence_bleu(T({"a", "b", "c", "d"}), T({"a", "b", "c", "d"})), 1.0);
  // One matching unigram, no higher-order matches: (1/2 * 1/2 * 1/1 * 1/1)^(1/4) with add-one.
  const double v = sentence_bleu(T({"a", "x"}), T({"a", "y"}));
  EXPECT_NEAR(v, std::pow(0.5 * 0.5 * 1.0 * 1.0, 0.25), 1e-15);
  EXPECT_EQ(sentence_bleu(T({"a"}), T({"b"})), 0.0);
  EXPECT_EQ(sentence_bleu(T({"a"}), Tokens{}), 0.0);
}

TEST(RougeL, Examples) {
  EXPECT_DOUBLE_EQ(rouge_l(T({"the", "cat", "sat"}), T({"the", "cat", "ran"})), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(rouge_l(T({"a", "b"}), T({"a", "b"})), 1.0);
  EXPECT_EQ(rouge_l(T({"a", "b"}), T({"c"})), 0.0);
  EXPECT_EQ(rouge_l(Tokens{}, T({"c"})), 0.0);
  // beta > 1 weights recall: P = 1, R = 1/2.
  const double f2 = rouge_l(T({"a", "b", "c", "d"}), T({"a", "b"}), 2.0);
  EXPECT_DOUBLE_EQ(f2, 5.0 * 1.0 * 0.5 / (0.5 + 4.0 * 1.0));
  EXPECT_THROW(rouge_l(T({"a"}), T({"a"}), 0.0), std::invalid_argument);
}

TEST(Meteor, Examples) {
  EXPECT_DOUBLE_EQ(meteor(T({"the", "cat"}), T({"the", "cat"})), 0.9375);
  EXPECT_DOUBLE_EQ(meteor(T({"the", "cat", "sat", "on", "mat"}), T({"on", "mat", "the", "cat", "sat"})), 0.968);
  EXPECT_EQ(meteor(T({"a"}), T({"b"})), 0.0);
  EXPECT_EQ(meteor(Tokens{}, T({"b"})), 0.0);
  const auto a = meteor_align(T({"the", "cat", "sat", "on", "mat"}), T({"on", "mat", "the", "cat", "sat"}));
  EXPECT_EQ(a.matches, 5u);
  EXPECT_EQ(a.chunks, 2u);
  EXPECT_TRUE(a.exhaustive);
}

TEST(Meteor, StemStage) {
  const auto a = meteor_align(T({"the", "dogs", "were", "running"}), T({"the", "dog", "runs"}));
  EXPECT_EQ(a.exact_matches, 1u);
  EXPECT_EQ(a.matches, 3u);
  // "the dog" is contiguous; "runs" aligns to "running" after a gap.
  EXPECT_EQ(a.chunks, 2u);
}

TEST(MetricCases, MatchOracle) {
  const auto doc = nlohmann::json::parse(testing::read_file(testing::fixture_path("metric_cases.json")));
  const auto& cases = doc.at("cases");
  ASSERT_GE(cases.size(), 10u);
  std::vector<Tokens> refs, hyps;
  for (const auto& c : cases) {
    const Tokens r = tokenize(c.at("reference").get<std::string>());
    const Tokens h = tokenize(c.at("hypothesis").get<std::string>());
    SCOPED_TRACE(c.at("hypothesis").get<std::string>());
    EXPECT_NEAR(bleu(std::vector<Tokens>{r}, std::vector<Tokens>{h}), c.at("bleu").get<double>(), 1e-9);
    EXPECT_NEAR(rouge_l(r, h), c.at("rouge_l").get<double>(), 1e-9);
    EXPECT_NEAR(meteor(r, h), c.at("meteor").get<double>(), 1e-9);
    const auto a = meteor_align(r, h);
    EXPECT_EQ(a.matches, c.at("meteor_matches").get<std::size_t>());
    EXPECT_EQ(a.chunks, c.at("meteor_chunks").get<std::size_t>());
    refs.push_back(r);
    hyps.push_back(h);
  }
  EXPECT_NEAR(bleu(refs, hyps), doc.at("corpus_bleu_all").get<double>(), 1e-9);
}

// ---- brute-force cross-checks on short random sequences ----

Tokens random_tokens(Rng& rng, std::size_t max_len) {
  static const char* vocab[] = {"the", "cat", "cats", "sat", "sit", "run", "runs", "running", "on", "a"};
  Tokens t(draw_index(rng, max_len + 1));
  for (auto& w : t) w = vocab[draw_index(rng, 10)];
  return t;
}

std::size_t lcs_brute(const Tokens& a, const Tokens& b) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    Tokens sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask >> i & 1) sub.push_back(a[i]);
    }
    std::size_t j = 0;
    for (std::size_t k = 0; k < b.size() && j < sub.size(); ++k) j += b[k] == sub[j];
    if (j == sub.size()) best = std::max(best, sub.size());
  }
  return best;
}

struct BruteAlignment {
  std::size_t exact = 0, matches = 0, chunks = 0;
};

// Enumerates every one-to-one alignment and keeps the lexicographic best:
// most exact matches, then most matches, then fewest chunks.
BruteAlignment meteor_brute(const Tokens& ref, const Tokens& hyp) {
  std::vector<std::string> rs, hs;
  for (const auto& w : ref) rs.push_back(porter_stem(w));
  for (const auto& w : hyp) hs.push_back(porter_stem(w));
  BruteAlignment best;
  bool have = false;
  std::vector<long> assign(hyp.size(), -1);
  std::vector<bool> used(ref.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t h) {
    if (h == hyp.size()) {
      BruteAlignment cur;
      long prev = -2;
      bool prev_matched = false;
      for (std::size_t i = 0; i < hyp.size(); ++i) {
        if (assign[i] < 0) {
          prev_matched = false;
          continue;
        }
        ++cur.matches;
        cur.exact += hyp[i] == ref[static_cast<std::size_t>(assign[i])];
        if (!(prev_matched && assign[i] == prev + 1)) ++cur.chunks;
        prev = assign[i];
        prev_matched = true;
      }
      const auto key = [](const BruteAlignment& x) {
        return std::tuple(x.exact, x.matches, -static_cast<long>(x.chunks));
      };
      if (!have || key(cur) > key(best)) best = cur;
      have = true;
      return;
    }
    rec(h + 1);
    for (std::size_t r = 0; r < ref.size(); ++r) {
      if (used[r] || (hyp[h] != ref[r] && hs[h] != rs[r])) continue;
      used[r] = true;
      assign[h] = static_cast<long>(r);
      rec(h + 1);
      assign[h] = -1;
      used[r] = false;
    }
  };
  rec(0);
  return best;
}

TEST(BruteForce, LcsMatchesExhaustiveSearch) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Tokens a = random_tokens(rng, 6), b = random_tokens(rng, 6);
    ASSERT_EQ(lcs_length(a, b), lcs_brute(a, b));
  }
}

TEST(BruteForce, MeteorAlignmentMatchesExhaustiveSearch) {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const Tokens r = random_tokens(rng, 6), h = random_tokens(rng, 6);
    const auto got = meteor_align(r, h);
    const auto want = meteor_brute(r, h);
    ASSERT_EQ(got.exact_matches, want.exact) << i;
    ASSERT_EQ(got.matches, want.matches) << i;
    ASSERT_EQ(got.chunks, want.chunks) << i;
    ASSERT_TRUE(got.exhaustive);
    // The returned pairs realise the reported counts.
    ASSERT_EQ(got.pairs.size(), got.matches);
  }
}

TEST(Bounds, FuzzedUtf8StaysInUnitInterval) {
  Rng rng(13);
  auto random_text = [&] {
    std::string s;
    const std::size_t n = draw_index(rng, 40);
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>(draw_index(rng, 256));
    if (draw_index(rng, 2)) s += " the cat";
    return s;
  };
  std::vector<Tokens> refs, hyps;
  for (int i = 0; i < 500; ++i) {
    const Tokens r = tokenize(random_text()), h = tokenize(random_text());
    for (const auto& t : r) ASSERT_FALSE(t.empty());
    for (double v : {rouge_l(r, h), meteor(r, h), sentence_bleu(r, h)}) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
    const auto a = meteor_align(r, h);
    if (a.matches > 0) {
      const double pen = 0.5 * std::pow(static_cast<double>(a.chunks) / a.matches, 3.0);
      ASSERT_GT(pen, 0.0);
      ASSERT_LE(pen, 0.5);
    }
    refs.push_back(r);
    hyps.push_back(h);
  }
  const double b = bleu(refs, hyps);
  EXPECT_GE(b, 0.0);
  EXPECT_LE(b, 1.0);
}

TEST(Meteor, LongInputsFinish) {
  Tokens r, h;
  for (int i = 0; i < 60; ++i) {
    r.push_back(i % 3 ? "the" : "cat");
    h.push_back(i % 4 ? "the" : "cat");
  }
  const double v = meteor(r, h);
  EXPECT_GT(v, 0.0);
  EXPECT_LE(v, 1.0);
}

}  // namespace
}  // namespace emograd::metrics

namespace emograd {
namespace {

EvalRecord rec(Emotion target, std::optional<Emotion> pred, std::string text = "same text here") {
  return {"r", text, text, target, pred};
}

TEST(ExactScores, Definitions) {
  std::vector<EvalRecord> all = {rec(Emotion::anger, Emotion::anger), rec(Emotion::joy, Emotion::joy)};
  auto s = exact_scores(all);
  EXPECT_EQ(s.exact_sr, 1.0);
  EXPECT_EQ(s.exact_fe, 1.0);

  std::vector<EvalRecord> near = {rec(Emotion::anger, Emotion::disgust)};
  s = exact_scores(near);
  EXPECT_EQ(s.exact_sr, 1.0);
  EXPECT_EQ(s.exact_fe, 0.0);

  std::vector<EvalRecord> four = {rec(Emotion::anger, Emotion::anger), rec(Emotion::fear, Emotion::fear),
                                  rec(Emotion::grief, Emotion::sadness), rec(Emotion::joy, std::nullopt)};
  s = exact_scores(four);
  EXPECT_EQ(s.exact_sr, 0.75);
  EXPECT_EQ(s.exact_fe, 0.5);
  EXPECT_THROW(exact_scores({}), std::invalid_argument);
}

TEST(ExactScores, SrDominatesFeOnFuzzedSets) {
  Rng rng(99);
  for (int k = 0; k < 1000; ++k) {
    std::vector<EvalRecord> v(1 + draw_index(rng, 20));
    for (auto& r : v) {
      r.target_emotion = emotion_at(draw_index(rng, kEmotionCount));
      if (draw_index(rng, 5)) r.prediction_emotion = emotion_at(draw_index(rng, kEmotionCount));
    }
    const auto s = exact_scores(v);
    ASSERT_GE(s.exact_sr, s.exact_fe);
  }
}

TEST(Evaluate, IdentityAndDisjoint) {
  std::vector<EvalRecord> id = {rec(Emotion::anger, Emotion::anger, "the cat sat on the mat")};
  auto r = evaluate(id);
  EXPECT_EQ(r.exact_sr, 1.0);
  EXPECT_EQ(r.exact_fe, 1.0);
  EXPECT_DOUBLE_EQ(r.bleu, 1.0);
  EXPECT_DOUBLE_EQ(r.rouge_l, 1.0);
  EXPECT_GT(r.meteor, 0.94);
  EXPECT_LT(r.meteor, 1.0);

  std::vector<EvalRecord> bad = {{"x", "completely different words", "nothing shared here", Emotion::joy, Emotion::fear}};
  r = evaluate(bad);
  EXPECT_EQ(r.exact_sr, 0.0);
  EXPECT_EQ(r.exact_fe, 0.0);
  EXPECT_EQ(r.bleu, 0.0);
  EXPECT_EQ(r.rouge_l, 0.0);
  EXPECT_EQ(r.meteor, 0.0);
  EXPECT_THROW(evaluate({}), std::invalid_argument);
}

TEST(Evaluate, MatchesOracleReport) {
  const auto records = io::read_eval(testing::fixture_path("eval_records.jsonl"));
  const auto oracle = nlohmann::json::parse(testing::read_file(testing::fixture_path("eval_oracle.json")));
  const auto r = evaluate(records);
  EXPECT_EQ(r.n, oracle.at("n").get<std::size_t>());
  EXPECT_EQ(r.n_labeled, oracle.at("n_labeled").get<std::size_t>());
  for (const auto& [key, value] : std::map<std::string, double>{
           {"exact_sr", r.exact_sr}, {"exact_fe", r.exact_fe}, {"bleu", r.bleu}, {"rouge_l", r.rouge_l},
           {"meteor", r.meteor}}) {
    EXPECT_NEAR(value, oracle.at(key).get<double>(), 1e-9) << key;
  }
  ASSERT_EQ(r.records.size(), 10u);
  EXPECT_TRUE(r.records[9].fe_match);  // tie broken towards embarrassment
  const std::string table = format_report_table(r);
  EXPECT_NE(table.find("Emotion-Transition"), std::string::npos);
  EXPECT_NE(table.find("METEOR"), std::string::npos);
}

}  // namespace
}  // namespace emograd
