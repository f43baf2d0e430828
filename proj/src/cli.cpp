#include "emograd/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "emograd/error.hpp"
#include "emograd/evaluate.hpp"
#include "emograd/records.hpp"
#include "emograd/taxonomy.hpp"
#include "emograd/vader.hpp"

namespace emograd::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr double kDefaultTrainFraction = 0.8;

std::uint64_t parse_seed(const std::string& text, const std::string& field) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(field, "expected an unsigned 64-bit integer, got '" + text + "'");
  }
  return v;
}

// --seed wins over EMOGRAD_SEED, which wins over the default.
struct SeedOption {
  std::string flag;
  std::uint64_t resolve() const {
    if (!flag.empty()) return parse_seed(flag, "--seed");
    if (const char* env = std::getenv("EMOGRAD_SEED"); env && *env) return parse_seed(env, "EMOGRAD_SEED");
    return kDefaultSeed;
  }
};

void add_seed(CLI::App* cmd, SeedOption& seed) {
  cmd->add_option("--seed", seed.flag, "RNG seed (default 42; EMOGRAD_SEED overrides the default)");
}

void check_threshold(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("--threshold", "must be in [0, 1]");
}

void check_fraction(double f, const std::string& field, bool inclusive) {
  const bool ok = inclusive ? (f >= 0.0 && f <= 1.0) : (f > 0.0 && f < 1.0);
  if (!ok) throw ConfigError(field, inclusive ? "must be in [0, 1]" : "must be in (0, 1)");
}

void check_input(const fs::path& p, const std::string& field) {
  if (p.empty()) throw ConfigError(field, "path is required");
  std::error_code ec;
  if (!fs::is_regular_file(p, ec)) throw ConfigError(field, "no such file: " + p.string());
}

void check_output(const fs::path& p, const std::string& field) {
  if (p.empty()) throw ConfigError(field, "path is required");
  const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ConfigError(field, "directory does not exist: " + dir.string());
}

Emotion require_emotion(const std::string& text, const std::string& field) {
  const auto e = parse_emotion(text);
  if (!e) throw ConfigError(field, "unknown emotion '" + text + "'");
  return *e;
}

PrefixStyle require_style(const std::string& text) {
  const auto s = parse_prefix_style(text);
  if (!s) throw ConfigError("--style", "expected 'fine' or 'range', got '" + text + "'");
  return *s;
}

IntensityOrder require_order(const std::string& text) {
  const auto o = parse_intensity_order(text);
  if (!o) throw ConfigError("--intensity-order", "expected 'tier' or 'median', got '" + text + "'");
  return *o;
}

std::vector<PrefixedExample> prefix_all(std::span<const LabeledPair> pairs, PrefixStyle style) {
  std::vector<PrefixedExample> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(make_prefix(p, style));
  return out;
}

std::string dump_line(const json& j) { return j.dump() + "\n"; }

std::string schema_help() {
  std::string s = "\nFile schemas (JSON Lines, one object per line):\n";
  for (auto k : {io::Schema::pairs, io::Schema::scores, io::Schema::labels, io::Schema::labeled, io::Schema::eval}) {
    s += "  ";
    s += io::to_string(k);
    s += ": ";
    s += io::schema_synopsis(k);
    s += "\n";
  }
  s += "  decision ids for reconstruct/stats: \"<pair id>:input\" and \"<pair id>:target\"\n";
  s += "  prefix output (TSV): prefix_and_input<TAB>target\n";
  s += "Exit codes: 0 ok, 1 data error, 2 configuration error.\n";
  return s;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;

  void log(const std::string& cmd, const std::string& msg) const {
    if (!quiet) err << "emograd " << cmd << ": " << msg << "\n";
  }
};

struct PipelineFlags {
  std::vector<std::string> inputs;
  std::string labels;
  double threshold = kDefaultThreshold;
  std::string intensity_order = "tier";
  bool graph_valid_only = false;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--in", f.inputs, "Pairs JSONL; repeat to merge corpora in the given order")->required();
  cmd->add_option("--labels", f.labels, "Scores or labels JSONL keyed <pair id>:input / <pair id>:target")
      ->required();
  cmd->add_option("--threshold", f.threshold, "Confidence threshold applied to score rows (default 0.5)");
  cmd->add_option("--intensity-order", f.intensity_order, "tier (default) or median");
  cmd->add_flag("--graph-valid-only", f.graph_valid_only, "Keep only oriented pairs that are transition-graph edges");
}

struct PipelineInput {
  std::vector<ParaphrasePair> pairs;
  DecisionIndex input_decisions, target_decisions;
  OrientOptions orient;
};

void validate_pipeline_flags(const PipelineFlags& f) {
  for (const auto& p : f.inputs) check_input(p, "--in");
  check_input(f.labels, "--labels");
  check_threshold(f.threshold);
  require_order(f.intensity_order);
}

PipelineInput load_pipeline_input(const PipelineFlags& f) {
  PipelineInput in;
  for (const auto& p : f.inputs) {
    auto part = io::read_pairs(p);
    in.pairs.insert(in.pairs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  auto sides = io::split_side_decisions(io::read_decisions(f.labels, f.threshold));
  in.input_decisions = std::move(sides.first);
  in.target_decisions = std::move(sides.second);
  in.orient.order = require_order(f.intensity_order);
  in.orient.graph_valid_only = f.graph_valid_only;
  return in;
}

json stats_report(const ReconstructResult& r, const PipelineFlags& f, std::uint64_t seed) {
  json j = io::to_json(r.stats);
  std::size_t unlabeled = 0, missing = 0;
  for (const auto& rej : r.joined.rejected) (rej.reason == "unlabeled" ? unlabeled : missing) += 1;
  j["rejected_unlabeled"] = unlabeled;
  j["rejected_missing_scores"] = missing;
  j["threshold"] = f.threshold;
  j["intensity_order"] = f.intensity_order;
  j["graph_valid_only"] = f.graph_valid_only;
  j["seed"] = seed;
  return j;
}

// ---- subcommands ----

struct LabelCmd {
  std::string scores, out;
  double threshold = kDefaultThreshold;

  void setup(CLI::App* cmd) {
    cmd->add_option("--scores", scores, "Scores JSONL")->required();
    cmd->add_option("--threshold", threshold, "Report a label only above this confidence (default 0.5)");
    cmd->add_option("--out", out, "Labels JSONL")->required();
  }

  int exec(Context& ctx) {
    check_input(scores, "--scores");
    check_threshold(threshold);
    check_output(out, "--out");
    std::string body;
    std::size_t n = 0, labeled = 0;
    for (const auto& row : io::read_jsonl_file(scores)) {
      const auto errors = io::validate(io::Schema::scores, row.value);
      if (!errors.empty()) throw DataError(scores + ":" + std::to_string(row.line) + ": " + errors.front());
      const auto d = dominant_emotion(io::scores_from_json(row.value.at("scores")), threshold);
      body += dump_line(io::to_json(d, row.value.at("id").get<std::string>()));
      ++n;
      labeled += d.label.has_value();
    }
    io::write_atomic(out, body);
    ctx.log("label", std::to_string(n) + " records, " + std::to_string(labeled) + " labeled");
    ctx.out << dump_line({{"records", n}, {"labeled", labeled}, {"threshold", threshold}});
    return kExitOk;
  }
};

struct ReconstructCmd {
  PipelineFlags flags;
  SeedOption seed;
  std::string out, out_dir, rejected, style = "fine";
  bool full = false;
  double fraction = kDefaultTrainFraction;
  std::size_t cap_train = FewShotCaps{}.train, cap_test = FewShotCaps{}.test;

  void setup(CLI::App* cmd) {
    add_pipeline_flags(cmd, flags);
    add_seed(cmd, seed);
    cmd->add_option("--out", out, "Oriented labeled JSONL");
    cmd->add_option("--rejected", rejected, "Optional JSONL of rejected pair ids with reasons");
    cmd->add_flag("--full", full, "Also split, cap and prefix into --out-dir");
    cmd->add_option("--out-dir", out_dir, "Output directory for --full");
    cmd->add_option("--fraction", fraction, "Train fraction for --full (default 0.8)");
    cmd->add_option("--cap-train", cap_train, "Per-transition train cap for --full (default 12)");
    cmd->add_option("--cap-test", cap_test, "Per-transition test cap for --full (default 3)");
    cmd->add_option("--style", style, "Prefix style for --full: fine (default) or range");
  }

  int exec(Context& ctx) {
    validate_pipeline_flags(flags);
    const std::uint64_t s = seed.resolve();
    if (full) {
      if (out_dir.empty()) throw ConfigError("--out-dir", "required with --full");
      std::error_code ec;
      if (!fs::is_directory(out_dir, ec)) throw ConfigError("--out-dir", "directory does not exist: " + out_dir);
      check_fraction(fraction, "--fraction", false);
      require_style(style);
    } else if (out.empty()) {
      throw ConfigError("--out", "path is required");
    }
    if (!out.empty()) check_output(out, "--out");
    if (!rejected.empty()) check_output(rejected, "--rejected");

    const PipelineInput in = load_pipeline_input(flags);
    const ReconstructResult r = reconstruct(in.pairs, in.input_decisions, in.target_decisions, in.orient);
    if (!out.empty()) io::write_atomic(out, io::to_jsonl(r.oriented));
    if (!rejected.empty()) {
      std::string body;
      for (const auto& rej : r.joined.rejected) body += dump_line({{"id", rej.id}, {"reason", rej.reason}});
      io::write_atomic(rejected, body);
    }
    json report = stats_report(r, flags, s);
    if (full) {
      const fs::path dir(out_dir);
      const auto parts = split<LabeledPair>(r.oriented, fraction, s);
      const auto capped = cap_few_shot(parts.train, parts.test, {cap_train, cap_test});
      const PrefixStyle ps = require_style(style);
      io::write_atomic(dir / "oriented.jsonl", io::to_jsonl(r.oriented));
      io::write_atomic(dir / "train.jsonl", io::to_jsonl(parts.train));
      io::write_atomic(dir / "test.jsonl", io::to_jsonl(parts.test));
      io::write_atomic(dir / "train.capped.jsonl", io::to_jsonl(capped.train));
      io::write_atomic(dir / "test.capped.jsonl", io::to_jsonl(capped.test));
      io::write_atomic(dir / "train.tsv", io::to_tsv(prefix_all(capped.train, ps)));
      io::write_atomic(dir / "test.tsv", io::to_tsv(prefix_all(capped.test, ps)));
      report["fraction"] = fraction;
      report["cap_train"] = cap_train;
      report["cap_test"] = cap_test;
      report["style"] = style;
      report["train"] = parts.train.size();
      report["test"] = parts.test.size();
      report["train_capped"] = capped.train.size();
      report["test_capped"] = capped.test.size();
      io::write_atomic(dir / "stats.json", report.dump(2) + "\n");
    }
    ctx.log("reconstruct", std::to_string(r.stats.total) + " pairs in, " + std::to_string(r.stats.lowering) +
                               " intensity-lowering pairs out");
    ctx.out << dump_line(report);
    return kExitOk;
  }
};

struct StatsCmd {
  PipelineFlags flags;

  void setup(CLI::App* cmd) { add_pipeline_flags(cmd, flags); }

  int exec(Context& ctx) {
    validate_pipeline_flags(flags);
    const std::uint64_t s = SeedOption{}.resolve();
    const PipelineInput in = load_pipeline_input(flags);
    const ReconstructResult r = reconstruct(in.pairs, in.input_decisions, in.target_decisions, in.orient);
    ctx.out << stats_report(r, flags, s).dump(2) << "\n";
    return kExitOk;
  }
};

struct SplitCmd {
  std::string in, train, test;
  double fraction = kDefaultTrainFraction;
  SeedOption seed;

  void setup(CLI::App* cmd) {
    cmd->add_option("--in", in, "Labeled JSONL")->required();
    cmd->add_option("--fraction", fraction, "Train fraction in (0, 1) (default 0.8)");
    add_seed(cmd, seed);
    cmd->add_option("--train", train, "Train JSONL")->required();
    cmd->add_option("--test", test, "Test JSONL")->required();
  }

  int exec(Context& ctx) {
    check_fraction(fraction, "--fraction", false);
    const std::uint64_t s = seed.resolve();
    check_input(in, "--in");
    check_output(train, "--train");
    check_output(test, "--test");
    const auto pairs = io::read_labeled(in);
    const auto parts = split<LabeledPair>(pairs, fraction, s);
    io::write_atomic(train, io::to_jsonl(parts.train));
    io::write_atomic(test, io::to_jsonl(parts.test));
    ctx.log("split", std::to_string(parts.train.size()) + " train, " + std::to_string(parts.test.size()) + " test");
    ctx.out << dump_line(
        {{"seed", s}, {"fraction", fraction}, {"train", parts.train.size()}, {"test", parts.test.size()}});
    return kExitOk;
  }
};

struct CapCmd {
  std::string train, test, train_out, test_out;
  std::size_t cap_train = FewShotCaps{}.train, cap_test = FewShotCaps{}.test;

  void setup(CLI::App* cmd) {
    cmd->add_option("--train", train, "Train JSONL")->required();
    cmd->add_option("--test", test, "Test JSONL")->required();
    cmd->add_option("--cap-train", cap_train, "Max train pairs per transition (default 12)");
    cmd->add_option("--cap-test", cap_test, "Max test pairs per transition (default 3)");
    cmd->add_option("--train-out", train_out, "Capped train JSONL")->required();
    cmd->add_option("--test-out", test_out, "Capped test JSONL")->required();
  }

  int exec(Context& ctx) {
    check_input(train, "--train");
    check_input(test, "--test");
    check_output(train_out, "--train-out");
    check_output(test_out, "--test-out");
    const auto tr = io::read_labeled(train);
    const auto te = io::read_labeled(test);
    const auto capped = cap_few_shot(tr, te, {cap_train, cap_test});
    io::write_atomic(train_out, io::to_jsonl(capped.train));
    io::write_atomic(test_out, io::to_jsonl(capped.test));
    ctx.log("cap", std::to_string(capped.train.size()) + " train, " + std::to_string(capped.test.size()) + " test");
    ctx.out << dump_line({{"cap_train", cap_train},
                          {"cap_test", cap_test},
                          {"train", capped.train.size()},
                          {"test", capped.test.size()}});
    return kExitOk;
  }
};

struct PrefixCmd {
  std::string in, out, style = "fine";

  void setup(CLI::App* cmd) {
    cmd->add_option("--in", in, "Labeled JSONL")->required();
    cmd->add_option("--style", style, "fine (default) or range");
    cmd->add_option("--out", out, "TSV: prefix_and_input<TAB>target")->required();
  }

  int exec(Context& ctx) {
    const PrefixStyle ps = require_style(style);
    check_input(in, "--in");
    check_output(out, "--out");
    const auto pairs = io::read_labeled(in);
    io::write_atomic(out, io::to_tsv(prefix_all(pairs, ps)));
    ctx.log("prefix", std::to_string(pairs.size()) + " rows");
    ctx.out << dump_line({{"rows", pairs.size()}, {"style", style}});
    return kExitOk;
  }
};

struct SelectTargetCmd {
  std::string emotion, fallback;
  SeedOption seed;
  bool cross_cluster = false;

  void setup(CLI::App* cmd) {
    cmd->add_option("--emotion", emotion, "Input emotion")->required();
    add_seed(cmd, seed);
    cmd->add_option("--fallback", fallback, "Emotion to keep when the draw is neutral");
    cmd->add_flag("--cross-cluster", cross_cluster, "Also allow lower-tier targets from other clusters");
  }

  int exec(Context& ctx) {
    const Emotion e = require_emotion(emotion, "--emotion");
    std::optional<Emotion> fb;
    if (!fallback.empty()) fb = require_emotion(fallback, "--fallback");
    const std::uint64_t s = seed.resolve();
    const TransitionGraph graph = build_transition_graph({cross_cluster});
    const auto target = select_target(graph, e, s, fb);
    json candidates = json::array();
    for (Emotion t : graph.targets(e)) candidates.push_back(std::string(label(t)));
    ctx.out << dump_line({{"emotion", std::string(label(e))},
                          {"target", target ? json(std::string(label(*target))) : json(nullptr)},
                          {"candidates", candidates},
                          {"seed", s}});
    return kExitOk;
  }
};

struct CaseStudyCmd {
  std::string in, out;
  double fraction = kCaseStudyFraction;
  SeedOption seed;

  void setup(CLI::App* cmd) {
    cmd->add_option("--in", in, "Labeled JSONL")->required();
    cmd->add_option("--fraction", fraction, "Share of records to re-target (default 0.35)");
    add_seed(cmd, seed);
    cmd->add_option("--out", out, "Labeled JSONL with re-selected targets")->required();
  }

  int exec(Context& ctx) {
    check_fraction(fraction, "--fraction", true);
    const std::uint64_t s = seed.resolve();
    check_input(in, "--in");
    check_output(out, "--out");
    const auto pairs = io::read_labeled(in);
    const auto r = retarget_case_study(pairs, default_graph(), s, fraction);
    std::string body;
    std::size_t retargeted = 0, fell_back = 0;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      json j = io::to_json(r.pairs[i]);
      j["original_target_emotion"] = std::string(label(r.original_targets[i]));
      j["retargeted"] = static_cast<bool>(r.retargeted[i]);
      j["fell_back"] = static_cast<bool>(r.fell_back[i]);
      body += dump_line(j);
      retargeted += r.retargeted[i];
      fell_back += r.fell_back[i];
    }
    io::write_atomic(out, body);
    ctx.log("case-study", std::to_string(retargeted) + " of " + std::to_string(r.pairs.size()) + " re-targeted");
    ctx.out << dump_line({{"seed", s},
                          {"fraction", fraction},
                          {"n", r.pairs.size()},
                          {"retargeted", retargeted},
                          {"fell_back", fell_back}});
    return kExitOk;
  }
};

struct EvaluateCmd {
  std::string pred, out, text_out;
  double threshold = kDefaultThreshold;
  double rouge_beta = 1.0;

  void setup(CLI::App* cmd) {
    cmd->add_option("--pred", pred, "Eval JSONL")->required();
    cmd->add_option("--out", out, "Report JSON")->required();
    cmd->add_option("--text-out", text_out, "Optional plain-text table");
    cmd->add_option("--threshold", threshold, "Threshold for prediction labels (default 0.5)");
    cmd->add_option("--rouge-beta", rouge_beta, "ROUGE-L F-measure beta (default 1)");
  }

  int exec(Context& ctx) {
    check_threshold(threshold);
    if (!(rouge_beta > 0.0)) throw ConfigError("--rouge-beta", "must be positive");
    check_input(pred, "--pred");
    check_output(out, "--out");
    if (!text_out.empty()) check_output(text_out, "--text-out");
    const auto records = io::read_eval(pred, threshold);
    if (records.empty()) throw DataError(pred + ": no records");
    const EvalReport report = evaluate(records, {rouge_beta});
    json j = io::to_json(report);
    j["threshold"] = threshold;
    j["rouge_beta"] = rouge_beta;
    io::write_atomic(out, j.dump(2) + "\n");
    const std::string table = format_report_table(report);
    if (!text_out.empty()) io::write_atomic(text_out, table);
    ctx.out << table;
    return kExitOk;
  }
};

struct VaderCmd {
  std::string text, input, data_dir;
  bool has_text = false;

  void setup(CLI::App* cmd) {
    auto* t = cmd->add_option("--text", text, "Score one sentence");
    auto* i = cmd->add_option("--input", input, "Score every line of a text file");
    t->excludes(i);
    cmd->add_option("--data-dir", data_dir, "Directory with vader_lexicon.txt, emoji_utf8_lexicon.txt, vader_rules.json");
  }

  int exec(Context& ctx, bool text_given) {
    if (!text_given && input.empty()) throw ConfigError("--text", "one of --text or --input is required");
    if (!input.empty()) check_input(input, "--input");
    const vader::SentimentLexicon* lex = &vader::default_lexicon();
    std::optional<vader::SentimentLexicon> custom;
    if (!data_dir.empty()) {
      custom = vader::SentimentLexicon::load(data_dir);
      lex = &*custom;
    }
    auto emit = [&](const std::string& s) {
      const auto p = vader::score_text(*lex, s);
      ctx.out << dump_line({{"text", s}, {"neg", p.neg}, {"neu", p.neu}, {"pos", p.pos}, {"compound", p.compound}});
    };
    if (text_given) {
      emit(text);
    } else {
      std::ifstream f(input, std::ios::binary);
      std::string line;
      while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        emit(line);
      }
    }
    return kExitOk;
  }
};

struct ExportTaxonomyCmd {
  std::string out;
  bool cross_cluster = false;

  void setup(CLI::App* cmd) {
    cmd->add_option("--out", out, "Write the JSON document here instead of standard output");
    cmd->add_flag("--cross-cluster", cross_cluster, "Include cross-cluster lowering edges");
  }

  int exec(Context& ctx) {
    if (!out.empty()) check_output(out, "--out");
    const std::string doc = taxonomy_json(build_transition_graph({cross_cluster})) + "\n";
    if (out.empty()) {
      ctx.out << doc;
    } else {
      io::write_atomic(out, doc);
    }
    return kExitOk;
  }
};

struct ValidateCmd {
  std::string schema, file;

  void setup(CLI::App* cmd) {
    cmd->add_option("--schema", schema, "pairs, scores, labels, labeled or eval")->required();
    cmd->add_option("file", file, "JSONL file")->required();
  }

  int exec(Context& ctx) {
    const auto s = io::parse_schema(schema);
    if (!s) throw ConfigError("--schema", "unknown schema '" + schema + "'");
    check_input(file, "file");
    const auto issues = io::validate_file(*s, file);
    for (const auto& is : issues) ctx.err << file << ":" << is.line << ": " << is.message << "\n";
    ctx.out << dump_line({{"file", file}, {"schema", schema}, {"valid", issues.empty()}, {"issues", issues.size()}});
    return issues.empty() ? kExitOk : kExitDataError;
  }
};

struct ImportCmd {
  std::string format, in, out;

  void setup(CLI::App* cmd) {
    cmd->add_option("--format", format, "paws, mrpc or quora")->required();
    cmd->add_option("--in", in, "Native TSV dump")->required();
    cmd->add_option("--out", out, "Pairs JSONL")->required();
  }

  int exec(Context& ctx) {
    const auto f = io::parse_corpus_format(format);
    if (!f) throw ConfigError("--format", "expected paws, mrpc or quora, got '" + format + "'");
    check_input(in, "--in");
    check_output(out, "--out");
    std::ifstream stream(in, std::ios::binary);
    const auto pairs = io::import_corpus(stream, *f, in);
    io::write_atomic(out, io::to_jsonl(pairs));
    ctx.log("import", std::to_string(pairs.size()) + " paraphrase pairs");
    ctx.out << dump_line({{"format", format}, {"pairs", pairs.size()}});
    return kExitOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"emograd: emotion-transition paraphrase data pipeline and evaluation", "emograd"};
  app.require_subcommand(1);
  app.footer(schema_help());
  Context ctx{out, err};
  app.add_flag("-q,--quiet", ctx.quiet, "Suppress log lines on standard error");

  LabelCmd label_cmd;
  ReconstructCmd reconstruct_cmd;
  StatsCmd stats_cmd;
  SplitCmd split_cmd;
  CapCmd cap_cmd;
  PrefixCmd prefix_cmd;
  SelectTargetCmd select_cmd;
  CaseStudyCmd case_cmd;
  EvaluateCmd evaluate_cmd;
  VaderCmd vader_cmd;
  ExportTaxonomyCmd export_cmd;
  ValidateCmd validate_cmd;
  ImportCmd import_cmd;

  std::map<CLI::App*, std::function<int()>> handlers;
  auto sub = [&](const char* name, const char* desc, auto& cmd) {
    CLI::App* s = app.add_subcommand(name, desc);
    cmd.setup(s);
    handlers[s] = [&cmd, &ctx] { return cmd.exec(ctx); };
    return s;
  };
  sub("label", "Apply the dominant-emotion threshold to classifier scores", label_cmd);
  sub("reconstruct", "Join labels, drop non-transitions and orient pairs to lower intensity", reconstruct_cmd);
  sub("stats", "Print the dataset statistics of a reconstruction without writing files", stats_cmd);
  sub("split", "Seeded train/test split", split_cmd);
  sub("cap", "Cap the number of pairs per emotion transition", cap_cmd);
  sub("prefix", "Write prefixed training rows", prefix_cmd);
  sub("select-target", "Draw a lower-intensity target emotion", select_cmd);
  sub("case-study", "Re-select targets for a seeded share of records", case_cmd);
  sub("evaluate", "Score predictions: Exact-SR, Exact-FE, BLEU, ROUGE-L, METEOR", evaluate_cmd);
  CLI::App* vader_sub = app.add_subcommand("vader", "VADER sentiment scores");
  vader_cmd.setup(vader_sub);
  handlers[vader_sub] = [&] { return vader_cmd.exec(ctx, vader_sub->count("--text") > 0); };
  sub("export-taxonomy", "Dump emotions, clusters, medians, ranges and edges as JSON", export_cmd);
  sub("validate", "Check a JSONL file against a schema", validate_cmd);
  sub("import", "Convert a native PAWS/MRPC/Quora dump to pairs JSONL", import_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help;
      app.exit(e, help, help);
      out << help.str();
      return kExitOk;
    }
    err << "emograd: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    for (auto& [cmd, handler] : handlers) {
      if (cmd->parsed()) return handler();
    }
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "emograd: invalid configuration: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DataError& e) {
    err << "emograd: data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "emograd: error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("emograd");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace emograd::cli
