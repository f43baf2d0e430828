#include "emograd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace emograd::metrics {
namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

NgramCounts count_ngrams(const Tokens& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) key += '\x1f';
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

void NgramStats::add(const Tokens& reference, const Tokens& hypothesis) {
  hypothesis_length += hypothesis.size();
  reference_length += reference.size();
  for (std::size_t n = 1; n <= 4; ++n) {
    const NgramCounts hyp = count_ngrams(hypothesis, n);
    const NgramCounts ref = count_ngrams(reference, n);
    std::size_t clipped = 0;
    for (const auto& [gram, c] : hyp) {
      auto it = ref.find(gram);
      if (it != ref.end()) clipped += std::min(c, it->second);
    }
    matches[n - 1] += clipped;
    totals[n - 1] += hypothesis.size() >= n ? hypothesis.size() - n + 1 : 0;
  }
}

double NgramStats::precision(std::size_t n) const {
  if (n < 1 || n > 4) throw std::out_of_range("n-gram order must be 1..4");
  return totals[n - 1] == 0 ? 0.0 : static_cast<double>(matches[n - 1]) / static_cast<double>(totals[n - 1]);
}

double NgramStats::brevity_penalty() const {
  if (hypothesis_length == 0) return 0.0;
  if (hypothesis_length >= reference_length) return 1.0;
  return std::exp(1.0 - static_cast<double>(reference_length) / static_cast<double>(hypothesis_length));
}

double NgramStats::bleu() const {
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const double p = precision(n);
    if (p <= 0.0) return 0.0;
    log_sum += std::log(p);
  }
  return brevity_penalty() * std::exp(log_sum / 4.0);
}

double bleu(std::span<const Tokens> references, std::span<const Tokens> hypotheses) {
  if (references.size() != hypotheses.size()) {
    throw std::invalid_argument("bleu: " + std::to_string(references.size()) + " references but " +
                                std::to_string(hypotheses.size()) + " hypotheses");
  }
  if (references.empty()) throw std::invalid_argument("bleu: empty corpus");
  NgramStats stats;
  for (std::size_t i = 0; i < references.size(); ++i) stats.add(references[i], hypotheses[i]);
  return stats.bleu();
}

double sentence_bleu(const Tokens& reference, const Tokens& hypothesis) {
  if (hypothesis.empty()) return 0.0;
  NgramStats stats;
  stats.add(reference, hypothesis);
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    double p;
    if (n == 1) {
      if (stats.matches[0] == 0) return 0.0;
      p = stats.precision(1);
    } else {
      p = static_cast<double>(stats.matches[n - 1] + 1) / static_cast<double>(stats.totals[n - 1] + 1);
    }
    log_sum += std::log(p);
  }
  return stats.brevity_penalty() * std::exp(log_sum / 4.0);
}

std::size_t lcs_length(const Tokens& a, const Tokens& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(const Tokens& reference, const Tokens& hypothesis, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("rouge_l: beta must be positive");
  if (reference.empty() || hypothesis.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(reference, hypothesis));
  if (lcs == 0.0) return 0.0;
  const double p = lcs / static_cast<double>(hypothesis.size());
  const double r = lcs / static_cast<double>(reference.size());
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (r + b2 * p);
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Depth-first search over hypothesis positions. The target counts of exact
// and stem matches are fixed up front (maximum bipartite matching between
// identical tokens reduces to per-type minima), so the search only has to
// place them while maximising adjacent links; chunks = matches - links.
class MeteorSearch {
 public:
  MeteorSearch(const Tokens& ref, const Tokens& hyp, std::size_t budget) : budget_(budget) {
    std::unordered_map<std::string, std::size_t> type_ids, stem_ids;
    auto intern = [](std::unordered_map<std::string, std::size_t>& ids, const std::string& s) {
      return ids.emplace(s, ids.size()).first->second;
    };
    std::vector<std::size_t> type_stem;
    auto token_ids = [&](const Tokens& toks, std::vector<std::size_t>& types) {
      for (const auto& t : toks) {
        const std::size_t before = type_ids.size();
        const std::size_t id = intern(type_ids, t);
        if (id == before) type_stem.push_back(intern(stem_ids, porter_stem(t)));
        types.push_back(id);
      }
    };
    token_ids(ref, ref_type_);
    token_ids(hyp, hyp_type_);
    stem_of_ = type_stem;
    const std::size_t nt = type_ids.size(), ns = stem_ids.size();

    std::vector<std::size_t> rc(nt, 0), hc(nt, 0);
    for (auto t : ref_type_) ++rc[t];
    for (auto t : hyp_type_) ++hc[t];
    eq_rem_.assign(nt, 0);
    std::vector<std::size_t> lh(ns, 0), lr(ns, 0);
    for (std::size_t t = 0; t < nt; ++t) {
      eq_rem_[t] = std::min(rc[t], hc[t]);
      lh[stem_of_[t]] += hc[t] - eq_rem_[t];
      lr[stem_of_[t]] += rc[t] - eq_rem_[t];
      exact_target_ += eq_rem_[t];
    }
    sq_rem_.assign(ns, 0);
    for (std::size_t s = 0; s < ns; ++s) {
      sq_rem_[s] = std::min(lh[s], lr[s]);
      stem_target_ += sq_rem_[s];
    }
    pending_ = exact_target_ + stem_target_;
    hyp_left_ = hc;
    ref_free_ = rc;
    ref_used_.assign(ref.size(), false);
    assign_.assign(hyp.size(), kNone);
    best_.assign(hyp.size(), kNone);
  }

  MeteorAlignment run() {
    if (pending_ > 0) dfs(0, 0);
    MeteorAlignment out;
    out.exact_matches = exact_target_;
    out.matches = exact_target_ + stem_target_;
    out.exhaustive = !exhausted_;
    if (out.matches == 0) return out;
    for (std::size_t h = 0; h < best_.size(); ++h) {
      if (best_[h] != kNone) out.pairs.emplace_back(h, best_[h]);
    }
    out.chunks = out.matches - static_cast<std::size_t>(best_links_);
    return out;
  }

 private:
  // Quotas that the undecided positions must still be able to satisfy.
  bool feasible_type(std::size_t t) const { return eq_rem_[t] <= std::min(hyp_left_[t], ref_free_[t]); }

  bool feasible_stem(std::size_t s) const {
    std::size_t avail_h = 0, avail_r = 0;
    for (std::size_t t = 0; t < stem_of_.size(); ++t) {
      if (stem_of_[t] != s) continue;
      avail_h += hyp_left_[t] - std::min(hyp_left_[t], eq_rem_[t]);
      avail_r += ref_free_[t] - std::min(ref_free_[t], eq_rem_[t]);
    }
    return sq_rem_[s] <= std::min(avail_h, avail_r);
  }

  bool feasible(std::size_t t_h, std::size_t t_r) const {
    if (!feasible_type(t_h) || !feasible_stem(stem_of_[t_h])) return false;
    if (t_r != kNone && t_r != t_h && (!feasible_type(t_r) || !feasible_stem(stem_of_[t_r]))) return false;
    return true;
  }

  void record_if_better(long links) {
    if (links > best_links_) {
      best_links_ = links;
      best_ = assign_;
    }
  }

  void dfs(std::size_t h, long links) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (pending_ == 0) {
      record_if_better(links);
      return;
    }
    const std::size_t remaining = hyp_type_.size() - h;
    if (h == hyp_type_.size() || remaining < pending_) return;
    // Each placed match can add at most one link.
    if (links + static_cast<long>(std::min(remaining, pending_)) <= best_links_) return;

    const std::size_t t = hyp_type_[h];
    const std::size_t s = stem_of_[t];
    const std::size_t prev = h > 0 ? assign_[h - 1] : kNone;
    --hyp_left_[t];

    auto try_match = [&](std::size_t r, bool exact) {
      const std::size_t tr = ref_type_[r];
      ref_used_[r] = true;
      --ref_free_[tr];
      --pending_;
      exact ? --eq_rem_[t] : --sq_rem_[s];
      if (feasible(t, tr)) {
        assign_[h] = r;
        const bool link = prev != kNone && r == prev + 1;
        dfs(h + 1, links + (link ? 1 : 0));
        assign_[h] = kNone;
      }
      exact ? ++eq_rem_[t] : ++sq_rem_[s];
      ++pending_;
      ++ref_free_[tr];
      ref_used_[r] = false;
    };

    auto candidates = [&](bool exact) {
      auto ok = [&](std::size_t r) {
        if (ref_used_[r]) return false;
        const std::size_t tr = ref_type_[r];
        return exact ? tr == t : (tr != t && stem_of_[tr] == s);
      };
      if (exact ? eq_rem_[t] == 0 : sq_rem_[s] == 0) return;
      const std::size_t linked = prev == kNone ? kNone : prev + 1;
      if (linked != kNone && linked < ref_type_.size() && ok(linked)) try_match(linked, exact);
      for (std::size_t r = 0; r < ref_type_.size(); ++r) {
        if (r != linked && ok(r)) try_match(r, exact);
      }
    };

    candidates(true);
    candidates(false);
    if (feasible(t, kNone)) dfs(h + 1, links);

    ++hyp_left_[t];
  }

  std::vector<std::size_t> ref_type_, hyp_type_, stem_of_;
  std::vector<std::size_t> eq_rem_, sq_rem_, hyp_left_, ref_free_;
  std::vector<bool> ref_used_;
  std::vector<std::size_t> assign_, best_;
  std::size_t exact_target_ = 0, stem_target_ = 0, pending_ = 0;
  long best_links_ = -1;
  std::size_t budget_, nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

MeteorAlignment meteor_align(const Tokens& reference, const Tokens& hypothesis, std::size_t node_budget) {
  return MeteorSearch(reference, hypothesis, node_budget).run();
}

double meteor(const Tokens& reference, const Tokens& hypothesis, const MeteorParams& params) {
  if (reference.empty() || hypothesis.empty()) return 0.0;
  const MeteorAlignment a = meteor_align(reference, hypothesis);
  if (a.matches == 0) return 0.0;
  const double m = static_cast<double>(a.matches);
  const double p = m / static_cast<double>(hypothesis.size());
  const double r = m / static_cast<double>(reference.size());
  const double f = p * r / (params.alpha * p + (1.0 - params.alpha) * r);
  const double penalty = params.gamma * std::pow(static_cast<double>(a.chunks) / m, params.beta);
  return f * (1.0 - penalty);
}

}  // namespace emograd::metrics
