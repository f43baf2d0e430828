#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace emograd::metrics {

using Tokens = std::vector<std::string>;

// Lowercases, splits on whitespace and emits every punctuation character as
// its own token.
Tokens tokenize(std::string_view text);

// Porter (1980) suffix stripping, original rule set. Expects lowercase input.
std::string porter_stem(std::string_view word);

// Clipped n-gram statistics accumulated over a corpus, n = 1..4.
struct NgramStats {
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  std::size_t hypothesis_length = 0;
  std::size_t reference_length = 0;

  void add(const Tokens& reference, const Tokens& hypothesis);
  double precision(std::size_t n) const;  // n in 1..4
  double brevity_penalty() const;
  // Unsmoothed BLEU-4; zero when any precision is zero.
  double bleu() const;
};

// Corpus BLEU-4 with one reference per hypothesis. Throws
// std::invalid_argument on a length mismatch or empty input.
double bleu(std::span<const Tokens> references, std::span<const Tokens> hypotheses);

// Sentence BLEU with add-one smoothing on the 2..4-gram precisions.
double sentence_bleu(const Tokens& reference, const Tokens& hypothesis);

std::size_t lcs_length(const Tokens& a, const Tokens& b);

// LCS-based F-measure; beta = 1 gives F1.
double rouge_l(const Tokens& reference, const Tokens& hypothesis, double beta = 1.0);

struct MeteorAlignment {
  std::size_t matches = 0;
  std::size_t exact_matches = 0;
  std::size_t chunks = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (hypothesis, reference), by hypothesis
  bool exhaustive = true;  // false when the search budget ran out
};

// Alignment that maximises exact matches, then exact+stem matches, then
// minimises the number of chunks.
MeteorAlignment meteor_align(const Tokens& reference, const Tokens& hypothesis,
                             std::size_t node_budget = 2'000'000);

struct MeteorParams {
  double alpha = 0.9;  // F = PR / (alpha P + (1 - alpha) R)
  double beta = 3.0;   // penalty exponent
  double gamma = 0.5;  // penalty weight
};

double meteor(const Tokens& reference, const Tokens& hypothesis, const MeteorParams& params = {});

}  // namespace emograd::metrics
