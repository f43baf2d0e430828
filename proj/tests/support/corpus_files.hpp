#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "emograd/records.hpp"
#include "synthetic.hpp"

namespace emograd::testing {

// Writes pairs.jsonl and scores.jsonl (score rows keyed "<id>:input" /
// "<id>:target") for `c` into `dir`. Pairs missing from the decision index
// get no score rows.
inline void write_corpus_files(const SyntheticCorpus& c, const std::filesystem::path& dir) {
  std::ofstream pairs(dir / "pairs.jsonl", std::ios::binary);
  pairs << io::to_jsonl(std::span<const ParaphrasePair>(c.pairs));
  std::ofstream scores(dir / "scores.jsonl", std::ios::binary);
  auto row = [&](const std::string& id, const std::string& text, const LabelDecision& d) {
    io::json s = io::json::object();
    // An unlabeled side gets a sub-threshold score.
    s[std::string(label(d.label.value_or(Emotion::joy)))] = d.label ? d.top_score : 0.3;
    io::json j = io::json::object();
    j["id"] = id;
    j["text"] = text;
    j["scores"] = s;
    scores << j.dump() << "\n";
  };
  for (const auto& p : c.pairs) {
    const auto in = c.input_decisions.find(p.id);
    const auto out = c.target_decisions.find(p.id);
    if (in != c.input_decisions.end()) row(p.id + ":input", p.input_text, in->second);
    if (out != c.target_decisions.end()) row(p.id + ":target", p.target_text, out->second);
  }
}

}  // namespace emograd::testing
