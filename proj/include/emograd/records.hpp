#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "emograd/evaluate.hpp"
#include "emograd/labeling.hpp"
#include "emograd/pipeline.hpp"
#include "emograd/prefix.hpp"

// JSONL interchange formats. Every reader reports problems as DataError with
// a "<source>:<line>: " prefix.
namespace emograd::io {

using json = nlohmann::ordered_json;

enum class Schema {
  pairs,    // {"id","input_text","target_text","source"}
  scores,   // {"id","text","scores":{"<emotion>": confidence}}
  labels,   // {"id","label": "<emotion>" | null}
  labeled,  // pairs + {"input_emotion","target_emotion","input_range","target_range"}
  eval,     // {"id","prediction","reference","target_emotion","prediction_scores":{...}}
};

std::string_view to_string(Schema s);
std::optional<Schema> parse_schema(std::string_view text);

// Human-readable field list, used by --help.
std::string_view schema_synopsis(Schema s);

// All violations of `s` in one record; empty when valid. Unknown extra keys
// are allowed.
std::vector<std::string> validate(Schema s, const json& record);

struct JsonlRow {
  std::size_t line = 0;
  json value;
};

// Blank lines are skipped. Throws DataError on unparsable lines.
std::vector<JsonlRow> read_jsonl(std::istream& in, std::string_view source);
std::vector<JsonlRow> read_jsonl_file(const std::filesystem::path& path);

struct ValidationIssue {
  std::size_t line = 0;
  std::string message;
};

// Validates every row of a JSONL file, including parse failures. Only I/O
// failures throw.
std::vector<ValidationIssue> validate_file(Schema s, const std::filesystem::path& path);

ParaphrasePair pair_from_json(const json& j);
LabeledPair labeled_from_json(const json& j);
EmotionScores scores_from_json(const json& scores);
EvalRecord eval_from_json(const json& j, double threshold = kDefaultThreshold);

json to_json(const ParaphrasePair& p);
json to_json(const LabeledPair& p);
json to_json(const LabelDecision& d, std::string_view id);
json to_json(const DatasetStats& s);
json to_json(const EvalReport& r, bool with_records = true);

std::vector<ParaphrasePair> read_pairs(const std::filesystem::path& path);
std::vector<LabeledPair> read_labeled(const std::filesystem::path& path);
std::vector<EvalRecord> read_eval(const std::filesystem::path& path, double threshold = kDefaultThreshold);

// Reads a file of either score rows (the threshold rule is applied) or label
// rows (taken as given). Duplicate ids are a DataError.
DecisionIndex read_decisions(const std::filesystem::path& path, double threshold = kDefaultThreshold);

// One compact JSON object per line, keys in schema order.
std::string to_jsonl(std::span<const ParaphrasePair> pairs);
std::string to_jsonl(std::span<const LabeledPair> pairs);

// "prefix_and_input<TAB>target" lines; tabs and newlines inside texts become
// spaces.
std::string to_tsv(std::span<const PrefixedExample> examples);

// Splits a decision file keyed "<pair id>:input" / "<pair id>:target" into
// per-side indexes keyed by pair id. Other keys are a DataError.
std::pair<DecisionIndex, DecisionIndex> split_side_decisions(const DecisionIndex& decisions);

// Native corpus dumps. Only rows marked as paraphrases are imported.
//   paws:  id, sentence1, sentence2, label            (ids "paws-<id>")
//   mrpc:  Quality, #1 ID, #2 ID, #1 String, #2 String (ids "mrpc-<#1>-<#2>")
//   quora: id, qid1, qid2, question1, question2, is_duplicate (ids "quora-<id>";
//          double-quoted fields may contain tabs and newlines)
// Columns are located by header name.
enum class CorpusFormat { paws, mrpc, quora };

std::optional<CorpusFormat> parse_corpus_format(std::string_view text);
std::vector<ParaphrasePair> import_corpus(std::istream& in, CorpusFormat format, std::string_view source);

// Writes to a sibling temp file and renames it over `path`, so readers never
// see partial output. Throws DataError on failure.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace emograd::io
