#include "emograd/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace emograd {
namespace {

constexpr std::array<std::string_view, 4> kSources = {"paws", "mrpc", "quora", "other"};

// >0 when `from` is more intense than `to`, <0 when less, 0 when equal.
int compare_intensity(Emotion from, Emotion to, IntensityOrder order) {
  if (order == IntensityOrder::tier) return tier(range_of(from)) - tier(range_of(to));
  const double a = std::fabs(median_score(from));
  const double b = std::fabs(median_score(to));
  return a > b ? 1 : (a < b ? -1 : 0);
}

LabeledPair flipped(const LabeledPair& p) {
  LabeledPair out = p;
  std::swap(out.pair.input_text, out.pair.target_text);
  std::swap(out.input_emotion, out.target_emotion);
  return out;
}

std::size_t key_index(const TransitionKey& k) { return index_of(k.from) * kEmotionCount + index_of(k.to); }

}  // namespace

std::string_view to_string(Source s) { return kSources[static_cast<std::size_t>(s)]; }

std::optional<Source> parse_source(std::string_view text) {
  for (std::size_t i = 0; i < kSources.size(); ++i) {
    if (kSources[i] == text) return static_cast<Source>(i);
  }
  return std::nullopt;
}

std::string_view to_string(IntensityOrder o) { return o == IntensityOrder::tier ? "tier" : "median"; }

std::optional<IntensityOrder> parse_intensity_order(std::string_view text) {
  if (text == "tier") return IntensityOrder::tier;
  if (text == "median") return IntensityOrder::median;
  return std::nullopt;
}

JoinResult join_labels(std::span<const ParaphrasePair> pairs, const DecisionIndex& input_decisions,
                       const DecisionIndex& target_decisions) {
  JoinResult out;
  for (const auto& p : pairs) {
    auto in = input_decisions.find(p.id);
    auto tg = target_decisions.find(p.id);
    if (in == input_decisions.end() || tg == target_decisions.end()) {
      out.rejected.push_back({p.id, "missing-scores"});
      continue;
    }
    if (!in->second.label || !tg->second.label) {
      out.rejected.push_back({p.id, "unlabeled"});
      continue;
    }
    out.labeled.push_back({p, *in->second.label, *tg->second.label});
  }
  return out;
}

std::vector<LabeledPair> filter_transitions(std::span<const LabeledPair> pairs) {
  std::vector<LabeledPair> out;
  for (const auto& p : pairs) {
    if (p.input_emotion != p.target_emotion && p.input_emotion != Emotion::neutral &&
        p.target_emotion != Emotion::neutral) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<LabeledPair> orient_lowering(std::span<const LabeledPair> pairs, const OrientOptions& options) {
  const TransitionGraph& graph = options.graph ? *options.graph : default_graph();
  std::vector<LabeledPair> out;
  for (const auto& p : pairs) {
    const int cmp = compare_intensity(p.input_emotion, p.target_emotion, options.order);
    if (cmp == 0) continue;
    LabeledPair oriented = cmp > 0 ? p : flipped(p);
    if (options.graph_valid_only && !graph.has_edge(oriented.input_emotion, oriented.target_emotion)) continue;
    out.push_back(std::move(oriented));
  }
  return out;
}

Split<LabeledPair> cap_few_shot(std::span<const LabeledPair> train, std::span<const LabeledPair> test,
                                FewShotCaps caps) {
  auto take = [](std::span<const LabeledPair> items, std::size_t cap) {
    std::vector<std::size_t> seen(kEmotionCount * kEmotionCount, 0);
    std::vector<LabeledPair> kept;
    for (const auto& p : items) {
      auto& count = seen[key_index(transition_of(p))];
      if (count < cap) {
        ++count;
        kept.push_back(p);
      }
    }
    return kept;
  };
  return {take(train, caps.train), take(test, caps.test)};
}

DatasetStats compute_stats(std::size_t total_pairs, std::span<const LabeledPair> labeled,
                           std::span<const LabeledPair> filtered, std::span<const LabeledPair> oriented) {
  DatasetStats s;
  s.total = total_pairs;
  s.transiting_with_neutral = static_cast<std::size_t>(std::count_if(
      labeled.begin(), labeled.end(), [](const LabeledPair& p) { return p.input_emotion != p.target_emotion; }));
  s.transiting_without_neutral = filtered.size();
  s.lowering = oriented.size();
  return s;
}

ReconstructResult reconstruct(std::span<const ParaphrasePair> pairs, const DecisionIndex& input_decisions,
                              const DecisionIndex& target_decisions, const OrientOptions& options) {
  ReconstructResult r;
  r.joined = join_labels(pairs, input_decisions, target_decisions);
  r.filtered = filter_transitions(r.joined.labeled);
  r.oriented = orient_lowering(r.filtered, options);
  r.stats = compute_stats(pairs.size(), r.joined.labeled, r.filtered, r.oriented);
  return r;
}

RetargetResult retarget_case_study(std::span<const LabeledPair> pairs, const TransitionGraph& graph,
                                   std::uint64_t seed, double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw std::invalid_argument("fraction must be in [0, 1]");
  RetargetResult out;
  out.pairs.assign(pairs.begin(), pairs.end());
  out.retargeted.assign(pairs.size(), false);
  out.fell_back.assign(pairs.size(), false);
  out.original_targets.reserve(pairs.size());
  for (const auto& p : pairs) out.original_targets.push_back(p.target_emotion);

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  shuffle(std::span<std::size_t>(order), rng);
  const std::size_t k = fraction_count_ceil(pairs.size(), fraction);
  for (std::size_t n = 0; n < k; ++n) {
    const std::size_t i = order[n];
    auto& p = out.pairs[i];
    const std::uint64_t item_seed = derive_seed(seed, i);
    const auto draw = select_target(graph, p.input_emotion, item_seed);
    const auto chosen = select_target(graph, p.input_emotion, item_seed, p.target_emotion);
    if (chosen) p.target_emotion = *chosen;
    out.retargeted[i] = true;
    out.fell_back[i] = !draw || *draw == Emotion::neutral;
  }
  return out;
}

}  // namespace emograd
