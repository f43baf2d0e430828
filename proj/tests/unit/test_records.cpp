#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "emograd/error.hpp"
#include "emograd/records.hpp"
#include "fixtures.hpp"

namespace emograd::io {
namespace {

void write(const std::filesystem::path& p, const std::string& s) {
  std::ofstream(p, std::ios::binary) << s;
}

TEST(Schema, PairsRecord) {
  const auto ok = json::parse(R"({"id":"a","input_text":"x","target_text":"y","source":"paws","extra":1})");
  EXPECT_TRUE(validate(Schema::pairs, ok).empty());
  const auto bad = json::parse(R"({"id":"","input_text":3,"source":"reddit"})");
  const auto errors = validate(Schema::pairs, bad);
  EXPECT_EQ(errors.size(), 4u);
  EXPECT_FALSE(validate(Schema::pairs, json::array()).empty());
}

TEST(Schema, LabeledRangesMustAgree) {
  auto j = json::parse(R"({"id":"a","input_text":"x","target_text":"y","source":"other",
      "input_emotion":"anger","target_emotion":"annoyance","input_range":"high_neg","target_range":"low_neg"})");
  EXPECT_TRUE(validate(Schema::labeled, j).empty());
  j["target_range"] = "high_neg";
  const auto errors = validate(Schema::labeled, j);
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("target_range"), std::string::npos);
}

TEST(Schema, ScoresLabelsEval) {
  EXPECT_TRUE(validate(Schema::scores, json::parse(R"({"id":"a","text":"t","scores":{"anger":0.93}})")).empty());
  EXPECT_FALSE(validate(Schema::scores, json::parse(R"({"id":"a","text":"t","scores":{"rage":0.9}})")).empty());
  EXPECT_FALSE(validate(Schema::scores, json::parse(R"({"id":"a","text":"t","scores":{"joy":1.5}})")).empty());
  EXPECT_TRUE(validate(Schema::labels, json::parse(R"({"id":"a","label":null})")).empty());
  EXPECT_TRUE(validate(Schema::labels, json::parse(R"({"id":"a","label":"joy","score":0.7})")).empty());
  EXPECT_FALSE(validate(Schema::labels, json::parse(R"({"id":"a"})")).empty());
  EXPECT_TRUE(validate(Schema::eval, json::parse(R"({"id":"r","prediction":"p","reference":"r",
      "target_emotion":"joy","prediction_scores":{}})")).empty());
  EXPECT_FALSE(validate(Schema::eval, json::parse(R"({"id":"r","prediction":"p","reference":"r",
      "target_emotion":"happiness","prediction_scores":{}})")).empty());
  for (auto s : {Schema::pairs, Schema::scores, Schema::labels, Schema::labeled, Schema::eval}) {
    EXPECT_EQ(parse_schema(to_string(s)), s);
    EXPECT_FALSE(schema_synopsis(s).empty());
  }
}

TEST(Jsonl, ErrorsNameTheLine) {
  std::istringstream in("{\"a\":1}\n\n{broken\n");
  try {
    read_jsonl(in, "in.jsonl");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("in.jsonl:3:", 0), 0u) << e.what();
  }
  const auto dir = testing::scratch_dir("records-lines");
  write(dir / "pairs.jsonl",
        "{\"id\":\"a\",\"input_text\":\"x\",\"target_text\":\"y\",\"source\":\"paws\"}\n"
        "{\"id\":\"b\",\"input_text\":\"x\",\"target_text\":\"y\",\"source\":\"web\"}\n");
  try {
    read_pairs(dir / "pairs.jsonl");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("pairs.jsonl:2:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_pairs(dir / "missing.jsonl"), DataError);
}

TEST(Jsonl, RoundTrip) {
  std::vector<LabeledPair> v = {{{"a", "tab\there", "quote \"q\"", Source::quora}, Emotion::fear, Emotion::nervousness}};
  const std::string text = to_jsonl(std::span<const LabeledPair>(v));
  EXPECT_EQ(text.find("{\"id\":\"a\",\"input_text\""), 0u);
  std::istringstream in(text);
  const auto rows = read_jsonl(in, "mem");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(labeled_from_json(rows[0].value), v[0]);
  EXPECT_EQ(rows[0].value.at("input_range"), "high_neg");
}

TEST(Decisions, ScoresOrLabels) {
  const auto dir = testing::scratch_dir("records-decisions");
  write(dir / "scores.jsonl",
        "{\"id\":\"p:input\",\"text\":\"a\",\"scores\":{\"anger\":0.9}}\n"
        "{\"id\":\"p:target\",\"text\":\"b\",\"scores\":{\"annoyance\":0.3}}\n");
  auto d = read_decisions(dir / "scores.jsonl", 0.5);
  EXPECT_EQ(d.at("p:input").label, Emotion::anger);
  EXPECT_FALSE(d.at("p:target").label);
  d = read_decisions(dir / "scores.jsonl", 0.2);
  EXPECT_EQ(d.at("p:target").label, Emotion::annoyance);

  write(dir / "labels.jsonl", "{\"id\":\"p:input\",\"label\":\"joy\"}\n{\"id\":\"p:target\",\"label\":null}\n");
  d = read_decisions(dir / "labels.jsonl");
  EXPECT_EQ(d.at("p:input").label, Emotion::joy);
  EXPECT_FALSE(d.at("p:target").label);
  const auto [in, out] = split_side_decisions(d);
  EXPECT_EQ(in.at("p").label, Emotion::joy);
  EXPECT_TRUE(out.count("p"));

  write(dir / "dup.jsonl", "{\"id\":\"p:input\",\"label\":\"joy\"}\n{\"id\":\"p:input\",\"label\":\"joy\"}\n");
  EXPECT_THROW(read_decisions(dir / "dup.jsonl"), DataError);
  DecisionIndex odd{{"p:left", {}}};
  EXPECT_THROW(split_side_decisions(odd), DataError);
}

TEST(ValidateFile, ReportsEveryIssue) {
  const auto dir = testing::scratch_dir("records-validate");
  write(dir / "x.jsonl",
        "{\"id\":\"a\",\"input_text\":\"x\",\"target_text\":\"y\",\"source\":\"paws\"}\n"
        "not json\n"
        "{\"id\":\"a\",\"input_text\":\"x\",\"target_text\":\"y\",\"source\":\"paws\"}\n");
  const auto issues = validate_file(Schema::pairs, dir / "x.jsonl");
  ASSERT_EQ(issues.size(), 2u);
  EXPECT_EQ(issues[0].line, 2u);
  EXPECT_EQ(issues[1].line, 3u);
  EXPECT_TRUE(validate_file(Schema::eval, testing::fixture_path("eval_records.jsonl")).empty());
}

TEST(Tsv, SanitizesControlCharacters) {
  std::vector<PrefixedExample> v = {{PrefixStyle::FineGrained, "anger to annoyance: ", "a\tb\nc", "d\re"}};
  EXPECT_EQ(to_tsv(v), "anger to annoyance: a b c\td e\n");
}

TEST(AtomicWrite, ReplacesAndCleansUp) {
  const auto dir = testing::scratch_dir("records-atomic");
  write_atomic(dir / "out.txt", "first");
  write_atomic(dir / "out.txt", "second");
  EXPECT_EQ(testing::read_file(dir / "out.txt"), "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  EXPECT_THROW(write_atomic(dir / "no-such-dir" / "out.txt", "x"), DataError);
}

TEST(Import, PawsKeepsParaphrasesOnly) {
  std::istringstream in("id\tsentence1\tsentence2\tlabel\n1\tA b .\tB a .\t1\n2\tC\tD\t0\n");
  const auto pairs = import_corpus(in, CorpusFormat::paws, "paws.tsv");
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].id, "paws-1");
  EXPECT_EQ(pairs[0].input_text, "A b .");
  EXPECT_EQ(pairs[0].source, Source::paws);
}

TEST(Import, MrpcWithBom) {
  std::istringstream in(
      "\xEF\xBB\xBFQuality\t#1 ID\t#2 ID\t#1 String\t#2 String\r\n1\t11\t12\tOne.\tUno.\r\n0\t13\t14\tX\tY\r\n");
  const auto pairs = import_corpus(in, CorpusFormat::mrpc, "mrpc.txt");
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].id, "mrpc-11-12");
  EXPECT_EQ(pairs[0].target_text, "Uno.");
}

TEST(Import, QuoraQuotedFields) {
  std::istringstream in(
      "id\tqid1\tqid2\tquestion1\tquestion2\tis_duplicate\n"
      "7\t1\t2\t\"Is \"\"this\"\" ok?\"\t\"Multi\nline\"\t1\n"
      "8\t3\t4\ta\tb\t0\n");
  const auto pairs = import_corpus(in, CorpusFormat::quora, "quora.tsv");
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].id, "quora-7");
  EXPECT_EQ(pairs[0].input_text, "Is \"this\" ok?");
  EXPECT_EQ(pairs[0].target_text, "Multi\nline");
}

TEST(Import, BadRowsAreDataErrors) {
  std::istringstream short_row("id\tsentence1\tsentence2\tlabel\n1\tonly two\n");
  EXPECT_THROW(import_corpus(short_row, CorpusFormat::paws, "p"), DataError);
  std::istringstream no_column("id\ttext\n");
  EXPECT_THROW(import_corpus(no_column, CorpusFormat::paws, "p"), DataError);
}

}  // namespace
}  // namespace emograd::io
