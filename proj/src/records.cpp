#include "emograd/records.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "emograd/error.hpp"
#include "emograd/taxonomy.hpp"

#include <unistd.h>

namespace emograd::io {
namespace {

bool is_string(const json& j, const char* key) { return j.contains(key) && j.at(key).is_string(); }

void require_string(const json& j, const char* key, std::vector<std::string>& errors, bool non_empty = false) {
  if (!j.contains(key)) {
    errors.push_back(std::string("missing \"") + key + "\"");
  } else if (!j.at(key).is_string()) {
    errors.push_back(std::string("\"") + key + "\" must be a string");
  } else if (non_empty && j.at(key).get_ref<const std::string&>().empty()) {
    errors.push_back(std::string("\"") + key + "\" must not be empty");
  }
}

void require_emotion(const json& j, const char* key, std::vector<std::string>& errors) {
  const std::size_t before = errors.size();
  require_string(j, key, errors);
  if (errors.size() != before) return;
  const auto& v = j.at(key).get_ref<const std::string&>();
  if (!parse_emotion(v)) errors.push_back(std::string("\"") + key + "\": unknown emotion \"" + v + "\"");
}

void check_score_object(const json& j, const char* key, std::vector<std::string>& errors) {
  if (!j.contains(key)) {
    errors.push_back(std::string("missing \"") + key + "\"");
    return;
  }
  const json& s = j.at(key);
  if (!s.is_object()) {
    errors.push_back(std::string("\"") + key + "\" must be an object");
    return;
  }
  for (const auto& [name, value] : s.items()) {
    if (!parse_emotion(name)) errors.push_back(std::string("\"") + key + "\": unknown emotion \"" + name + "\"");
    if (!value.is_number()) {
      errors.push_back(std::string("\"") + key + "." + name + "\" must be a number");
    } else {
      const double v = value.get<double>();
      if (!(v >= 0.0 && v <= 1.0)) errors.push_back(std::string("\"") + key + "." + name + "\" outside [0, 1]");
    }
  }
}

void check_pair_fields(const json& j, std::vector<std::string>& errors) {
  require_string(j, "id", errors, true);
  require_string(j, "input_text", errors);
  require_string(j, "target_text", errors);
  const std::size_t before = errors.size();
  require_string(j, "source", errors);
  if (errors.size() == before && !parse_source(j.at("source").get_ref<const std::string&>())) {
    errors.push_back("\"source\" must be one of paws, mrpc, quora, other");
  }
}

DataError row_error(std::string_view source, std::size_t line, const std::string& why) {
  return DataError(std::string(source) + ":" + std::to_string(line) + ": " + why);
}

void throw_if_invalid(Schema s, const json& j) {
  const auto errors = validate(s, j);
  if (!errors.empty()) throw DataError(errors.front());
}

// Converts each row, attributing failures to their line.
template <typename T, typename F>
std::vector<T> convert_rows(const std::filesystem::path& path, F&& convert) {
  std::vector<T> out;
  for (const auto& row : read_jsonl_file(path)) {
    try {
      out.push_back(convert(row.value));
    } catch (const PrefixParseError&) {
      throw;
    } catch (const DataError& e) {
      throw row_error(path.string(), row.line, e.what());
    }
  }
  return out;
}

std::string sanitize_field(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

}  // namespace

std::string_view to_string(Schema s) {
  switch (s) {
    case Schema::pairs: return "pairs";
    case Schema::scores: return "scores";
    case Schema::labels: return "labels";
    case Schema::labeled: return "labeled";
    case Schema::eval: return "eval";
  }
  return "?";
}

std::optional<Schema> parse_schema(std::string_view text) {
  for (Schema s : {Schema::pairs, Schema::scores, Schema::labels, Schema::labeled, Schema::eval}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::string_view schema_synopsis(Schema s) {
  switch (s) {
    case Schema::pairs:
      return R"({"id": str, "input_text": str, "target_text": str, "source": "paws"|"mrpc"|"quora"|"other"})";
    case Schema::scores:
      return R"({"id": str, "text": str, "scores": {"<emotion>": number in [0,1], ...}})";
    case Schema::labels:
      return R"({"id": str, "label": "<emotion>"|null, "score": number (optional)})";
    case Schema::labeled:
      return R"(pairs fields + {"input_emotion": str, "target_emotion": str, "input_range": str, "target_range": str})";
    case Schema::eval:
      return R"({"id": str, "prediction": str, "reference": str, "target_emotion": str, "prediction_scores": {...}})";
  }
  return "";
}

std::vector<std::string> validate(Schema s, const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) {
    errors.emplace_back("record must be a JSON object");
    return errors;
  }
  switch (s) {
    case Schema::pairs:
      check_pair_fields(j, errors);
      break;
    case Schema::scores:
      require_string(j, "id", errors, true);
      require_string(j, "text", errors);
      check_score_object(j, "scores", errors);
      break;
    case Schema::labels:
      require_string(j, "id", errors, true);
      if (!j.contains("label")) {
        errors.emplace_back("missing \"label\"");
      } else if (!j.at("label").is_null()) {
        require_emotion(j, "label", errors);
      }
      if (j.contains("score") && !j.at("score").is_number()) errors.emplace_back("\"score\" must be a number");
      break;
    case Schema::labeled: {
      check_pair_fields(j, errors);
      require_emotion(j, "input_emotion", errors);
      require_emotion(j, "target_emotion", errors);
      for (const auto& [range_key, emotion_key] :
           {std::pair{"input_range", "input_emotion"}, std::pair{"target_range", "target_emotion"}}) {
        const std::size_t before = errors.size();
        require_string(j, range_key, errors);
        if (errors.size() != before) continue;
        const auto& v = j.at(range_key).get_ref<const std::string&>();
        const auto r = parse_range(v);
        if (!r) {
          errors.push_back(std::string("\"") + range_key + "\": unknown range \"" + v + "\"");
        } else if (is_string(j, emotion_key)) {
          const auto e = parse_emotion(j.at(emotion_key).get_ref<const std::string&>());
          if (e && range_of(*e) != *r) {
            errors.push_back(std::string("\"") + range_key + "\" does not match \"" + emotion_key + "\"");
          }
        }
      }
      break;
    }
    case Schema::eval:
      require_string(j, "id", errors, true);
      require_string(j, "prediction", errors);
      require_string(j, "reference", errors);
      require_emotion(j, "target_emotion", errors);
      check_score_object(j, "prediction_scores", errors);
      break;
  }
  return errors;
}

std::vector<JsonlRow> read_jsonl(std::istream& in, std::string_view source) {
  std::vector<JsonlRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      rows.push_back({lineno, json::parse(line)});
    } catch (const json::parse_error& e) {
      throw row_error(source, lineno, std::string("invalid JSON: ") + e.what());
    }
  }
  if (in.bad()) throw DataError(std::string(source) + ": read error");
  return rows;
}

std::vector<JsonlRow> read_jsonl_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return read_jsonl(in, path.string());
}

std::vector<ValidationIssue> validate_file(Schema s, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<ValidationIssue> issues;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      issues.push_back({lineno, std::string("invalid JSON: ") + e.what()});
      continue;
    }
    for (auto& msg : validate(s, j)) issues.push_back({lineno, std::move(msg)});
    if (is_string(j, "id") && !ids.insert(j.at("id").get<std::string>()).second) {
      issues.push_back({lineno, "duplicate id \"" + j.at("id").get<std::string>() + "\""});
    }
  }
  return issues;
}

ParaphrasePair pair_from_json(const json& j) {
  throw_if_invalid(Schema::pairs, j);
  ParaphrasePair p;
  p.id = j.at("id").get<std::string>();
  p.input_text = j.at("input_text").get<std::string>();
  p.target_text = j.at("target_text").get<std::string>();
  p.source = *parse_source(j.at("source").get<std::string>());
  return p;
}

LabeledPair labeled_from_json(const json& j) {
  throw_if_invalid(Schema::labeled, j);
  LabeledPair lp;
  lp.pair = pair_from_json(j);
  lp.input_emotion = *parse_emotion(j.at("input_emotion").get<std::string>());
  lp.target_emotion = *parse_emotion(j.at("target_emotion").get<std::string>());
  return lp;
}

EmotionScores scores_from_json(const json& scores) {
  EmotionScores out;
  for (const auto& [name, value] : scores.items()) {
    const auto e = parse_emotion(name);
    if (!e) throw DataError("unknown emotion \"" + name + "\"");
    if (!value.is_number()) throw DataError("score for \"" + name + "\" must be a number");
    try {
      out.set(*e, value.get<double>());
    } catch (const std::invalid_argument&) {
      throw DataError("score for \"" + name + "\" outside [0, 1]");
    }
  }
  return out;
}

EvalRecord eval_from_json(const json& j, double threshold) {
  throw_if_invalid(Schema::eval, j);
  EvalRecord r;
  r.id = j.at("id").get<std::string>();
  r.prediction = j.at("prediction").get<std::string>();
  r.reference = j.at("reference").get<std::string>();
  r.target_emotion = *parse_emotion(j.at("target_emotion").get<std::string>());
  r.prediction_emotion = dominant_emotion(scores_from_json(j.at("prediction_scores")), threshold).label;
  return r;
}

json to_json(const ParaphrasePair& p) {
  json j = json::object();
  j["id"] = p.id;
  j["input_text"] = p.input_text;
  j["target_text"] = p.target_text;
  j["source"] = std::string(to_string(p.source));
  return j;
}

json to_json(const LabeledPair& p) {
  json j = to_json(p.pair);
  j["input_emotion"] = std::string(label(p.input_emotion));
  j["target_emotion"] = std::string(label(p.target_emotion));
  j["input_range"] = std::string(token(p.input_range()));
  j["target_range"] = std::string(token(p.target_range()));
  return j;
}

json to_json(const LabelDecision& d, std::string_view id) {
  json j = json::object();
  j["id"] = std::string(id);
  j["label"] = d.label ? json(std::string(label(*d.label))) : json(nullptr);
  j["score"] = d.top_score;
  j["threshold"] = d.threshold;
  return j;
}

json to_json(const DatasetStats& s) {
  json j = json::object();
  j["total"] = s.total;
  j["emotion_transiting_with_neutral"] = s.transiting_with_neutral;
  j["emotion_transiting_without_neutral"] = s.transiting_without_neutral;
  j["sentiment_intensity_lowering"] = s.lowering;
  return j;
}

json to_json(const EvalReport& r, bool with_records) {
  json j = json::object();
  j["n"] = r.n;
  j["n_labeled"] = r.n_labeled;
  j["exact_sr"] = r.exact_sr;
  j["exact_fe"] = r.exact_fe;
  j["bleu"] = r.bleu;
  j["rouge_l"] = r.rouge_l;
  j["meteor"] = r.meteor;
  if (with_records) {
    json recs = json::array();
    for (const auto& rs : r.records) {
      json x = json::object();
      x["id"] = rs.id;
      x["fe_match"] = rs.fe_match;
      x["sr_match"] = rs.sr_match;
      x["sentence_bleu"] = rs.sentence_bleu;
      x["rouge_l"] = rs.rouge_l;
      x["meteor"] = rs.meteor;
      recs.push_back(std::move(x));
    }
    j["records"] = std::move(recs);
  }
  return j;
}

std::vector<ParaphrasePair> read_pairs(const std::filesystem::path& path) {
  return convert_rows<ParaphrasePair>(path, [](const json& j) { return pair_from_json(j); });
}

std::vector<LabeledPair> read_labeled(const std::filesystem::path& path) {
  return convert_rows<LabeledPair>(path, [](const json& j) { return labeled_from_json(j); });
}

std::vector<EvalRecord> read_eval(const std::filesystem::path& path, double threshold) {
  return convert_rows<EvalRecord>(path, [threshold](const json& j) { return eval_from_json(j, threshold); });
}

DecisionIndex read_decisions(const std::filesystem::path& path, double threshold) {
  DecisionIndex index;
  for (const auto& row : read_jsonl_file(path)) {
    const json& j = row.value;
    try {
      LabelDecision d;
      if (j.is_object() && j.contains("scores")) {
        throw_if_invalid(Schema::scores, j);
        d = dominant_emotion(scores_from_json(j.at("scores")), threshold);
      } else {
        throw_if_invalid(Schema::labels, j);
        if (!j.at("label").is_null()) d.label = parse_emotion(j.at("label").get<std::string>());
        if (j.contains("score")) d.top_score = j.at("score").get<double>();
        d.threshold = threshold;
      }
      const std::string id = j.at("id").get<std::string>();
      if (!index.emplace(id, d).second) throw DataError("duplicate id \"" + id + "\"");
    } catch (const DataError& e) {
      throw row_error(path.string(), row.line, e.what());
    }
  }
  return index;
}

std::string to_jsonl(std::span<const ParaphrasePair> pairs) {
  std::string out;
  for (const auto& p : pairs) {
    out += to_json(p).dump();
    out += '\n';
  }
  return out;
}

std::string to_jsonl(std::span<const LabeledPair> pairs) {
  std::string out;
  for (const auto& p : pairs) {
    out += to_json(p).dump();
    out += '\n';
  }
  return out;
}

std::string to_tsv(std::span<const PrefixedExample> examples) {
  std::string out;
  for (const auto& ex : examples) {
    out += sanitize_field(ex.source());
    out += '\t';
    out += sanitize_field(ex.target_text);
    out += '\n';
  }
  return out;
}

std::pair<DecisionIndex, DecisionIndex> split_side_decisions(const DecisionIndex& decisions) {
  std::pair<DecisionIndex, DecisionIndex> out;
  for (const auto& [key, d] : decisions) {
    const auto colon = key.rfind(':');
    const std::string_view side = colon == std::string::npos ? std::string_view() : std::string_view(key).substr(colon + 1);
    if (side == "input") {
      out.first.emplace(key.substr(0, colon), d);
    } else if (side == "target") {
      out.second.emplace(key.substr(0, colon), d);
    } else {
      throw DataError("decision id \"" + key + "\" does not end in \":input\" or \":target\"");
    }
  }
  return out;
}

namespace {

// One logical TSV record. With `quoted`, a field that starts with '"' runs to
// the matching close quote ("" escapes a quote) and may span lines.
bool read_tsv_record(std::istream& in, bool quoted, std::vector<std::string>& fields, std::size_t& lineno) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++lineno;
  std::string field;
  std::size_t i = 0;
  auto strip_cr = [](std::string& l) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
  };
  strip_cr(line);
  while (true) {
    if (quoted && i < line.size() && line[i] == '"' && field.empty()) {
      ++i;
      while (true) {
        if (i >= line.size()) {
          field += '\n';
          if (!std::getline(in, line)) throw DataError("unterminated quoted field");
          ++lineno;
          strip_cr(line);
          i = 0;
          continue;
        }
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field += line[i++];
      }
    }
    const auto tab = line.find('\t', i);
    if (tab == std::string::npos) {
      field.append(line, i, std::string::npos);
      fields.push_back(std::move(field));
      return true;
    }
    field.append(line, i, tab - i);
    fields.push_back(std::move(field));
    field.clear();
    i = tab + 1;
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<CorpusFormat> parse_corpus_format(std::string_view text) {
  if (text == "paws") return CorpusFormat::paws;
  if (text == "mrpc") return CorpusFormat::mrpc;
  if (text == "quora") return CorpusFormat::quora;
  return std::nullopt;
}

std::vector<ParaphrasePair> import_corpus(std::istream& in, CorpusFormat format, std::string_view source) {
  struct Layout {
    std::vector<std::string> id_columns;
    std::string input, target, flag, id_prefix;
    Source src;
  };
  Layout layout;
  switch (format) {
    case CorpusFormat::paws:
      layout = {{"id"}, "sentence1", "sentence2", "label", "paws-", Source::paws};
      break;
    case CorpusFormat::mrpc:
      layout = {{"#1 ID", "#2 ID"}, "#1 String", "#2 String", "Quality", "mrpc-", Source::mrpc};
      break;
    case CorpusFormat::quora:
      layout = {{"id"}, "question1", "question2", "is_duplicate", "quora-", Source::quora};
      break;
  }
  const bool quoted = format == CorpusFormat::quora;

  std::vector<std::string> fields;
  std::size_t lineno = 0;
  if (!read_tsv_record(in, false, fields, lineno)) return {};
  if (!fields.empty() && fields[0].rfind("\xEF\xBB\xBF", 0) == 0) fields[0].erase(0, 3);
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < fields.size(); ++i) col.emplace(trim(fields[i]), i);
  auto column = [&](const std::string& name) {
    auto it = col.find(name);
    if (it == col.end()) throw row_error(source, 1, "missing column \"" + name + "\"");
    return it->second;
  };
  std::vector<std::size_t> id_cols;
  for (const auto& c : layout.id_columns) id_cols.push_back(column(c));
  const std::size_t in_col = column(layout.input), tgt_col = column(layout.target), flag_col = column(layout.flag);
  const std::size_t width = col.size();

  std::vector<ParaphrasePair> out;
  std::unordered_set<std::string> seen;
  while (true) {
    const std::size_t start = lineno + 1;
    bool more;
    try {
      more = read_tsv_record(in, quoted, fields, lineno);
    } catch (const DataError& e) {
      throw row_error(source, start, e.what());
    }
    if (!more) break;
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;
    if (fields.size() < width) {
      throw row_error(source, start,
                      "expected " + std::to_string(width) + " columns, got " + std::to_string(fields.size()));
    }
    if (trim(fields[flag_col]) != "1") continue;
    ParaphrasePair p;
    p.id = layout.id_prefix;
    for (std::size_t k = 0; k < id_cols.size(); ++k) {
      if (k) p.id += '-';
      p.id += trim(fields[id_cols[k]]);
    }
    if (!seen.insert(p.id).second) throw row_error(source, start, "duplicate id \"" + p.id + "\"");
    p.input_text = fields[in_col];
    p.target_text = fields[tgt_col];
    p.source = layout.src;
    out.push_back(std::move(p));
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw DataError("output directory does not exist: " + dir.string());

  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      throw DataError("write failed for " + path.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw DataError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace emograd::io
