#include "emograd/evaluate.hpp"

#include <cstdio>
#include <stdexcept>

#include "emograd/metrics.hpp"
#include "emograd/taxonomy.hpp"

namespace emograd {
namespace {

bool fe_match(const EvalRecord& r) { return r.prediction_emotion && *r.prediction_emotion == r.target_emotion; }

bool sr_match(const EvalRecord& r) {
  return r.prediction_emotion && range_of(*r.prediction_emotion) == range_of(r.target_emotion);
}

}  // namespace

ExactScores exact_scores(std::span<const EvalRecord> records) {
  if (records.empty()) throw std::invalid_argument("exact_scores: no records");
  std::size_t fe = 0, sr = 0;
  for (const auto& r : records) {
    fe += fe_match(r);
    sr += sr_match(r);
  }
  const double n = static_cast<double>(records.size());
  return {static_cast<double>(sr) / n, static_cast<double>(fe) / n};
}

EvalReport evaluate(std::span<const EvalRecord> records, const EvalOptions& options) {
  if (records.empty()) throw std::invalid_argument("evaluate: no records");
  EvalReport report;
  report.n = records.size();
  const ExactScores exact = exact_scores(records);
  report.exact_sr = exact.exact_sr;
  report.exact_fe = exact.exact_fe;

  metrics::NgramStats corpus;
  double rouge_sum = 0.0, meteor_sum = 0.0;
  for (const auto& r : records) {
    if (r.prediction_emotion) ++report.n_labeled;
    const auto ref = metrics::tokenize(r.reference);
    const auto hyp = metrics::tokenize(r.prediction);
    corpus.add(ref, hyp);
    RecordScores rs;
    rs.id = r.id;
    rs.fe_match = fe_match(r);
    rs.sr_match = sr_match(r);
    rs.sentence_bleu = metrics::sentence_bleu(ref, hyp);
    rs.rouge_l = metrics::rouge_l(ref, hyp, options.rouge_beta);
    rs.meteor = metrics::meteor(ref, hyp);
    rouge_sum += rs.rouge_l;
    meteor_sum += rs.meteor;
    report.records.push_back(std::move(rs));
  }
  report.bleu = corpus.bleu();
  report.rouge_l = rouge_sum / static_cast<double>(report.n);
  report.meteor = meteor_sum / static_cast<double>(report.n);
  return report;
}

std::string format_report_table(const EvalReport& report) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-23s | %-26s\n", "Emotion-Transition", "Paraphrasing");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-11s %-11s | %-8s %-8s %-8s\n", "Exact-SR", "Exact-FE", "BLEU", "ROUGE-L",
                "METEOR");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-11.4f %-11.4f | %-8.4f %-8.4f %-8.4f\n", report.exact_sr, report.exact_fe,
                report.bleu, report.rouge_l, report.meteor);
  out += buf;
  std::snprintf(buf, sizeof buf, "records: %zu, labeled predictions: %zu\n", report.n, report.n_labeled);
  out += buf;
  return out;
}

}  // namespace emograd
