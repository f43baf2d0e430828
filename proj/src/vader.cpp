#include "emograd/vader.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "emograd/error.hpp"
#include "emograd/utf8.hpp"

#ifndef EMOGRAD_DATA_DIR
#define EMOGRAD_DATA_DIR "data"
#endif

namespace emograd::vader {
namespace {

std::string_view trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return line;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

// Python str.isupper(): at least one cased character and no lowercase ones.
bool all_caps(std::string_view word) {
  bool cased = false;
  for (char32_t c : utf8::decode(word)) {
    if (utf8::is_lower(c)) return false;
    if (utf8::is_upper(c)) cased = true;
  }
  return cased;
}

struct Token {
  std::string word;   // as written, punctuation-stripped
  std::string lower;  // lowercase form used for lookups
};

// Whitespace split; leading/trailing ASCII punctuation is removed unless that
// leaves two or fewer characters (emoticons such as ":)" survive intact).
std::vector<Token> words_and_emoticons(std::u32string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !utf8::is_space(text[j])) ++j;
    std::u32string_view raw = text.substr(i, j - i);
    std::size_t b = 0;
    std::size_t e = raw.size();
    while (b < e && utf8::is_ascii_punct(raw[b])) ++b;
    while (e > b && utf8::is_ascii_punct(raw[e - 1])) --e;
    std::u32string_view kept = (e - b <= 2) ? raw : raw.substr(b, e - b);
    Token tok;
    tok.word = utf8::encode(kept);
    tok.lower = utf8::to_lower(tok.word);
    out.push_back(std::move(tok));
    i = j;
  }
  return out;
}

// Replaces known emoji with their descriptions, then strips surrounding
// whitespace.
std::u32string expand_emoji(const SentimentLexicon& lex, std::u32string_view text) {
  if (lex.emoji.empty()) {
    std::u32string plain(text);
    return plain;
  }
  std::u32string out;
  bool prev_space = true;
  std::string key;
  for (char32_t c : text) {
    key.clear();
    utf8::append(key, c);
    if (auto it = lex.emoji.find(key); it != lex.emoji.end()) {
      if (!prev_space) out.push_back(U' ');
      out += utf8::decode(it->second);
      prev_space = false;
    } else {
      out.push_back(c);
      prev_space = c == U' ';
    }
  }
  return out;
}

std::u32string strip_space(std::u32string text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && utf8::is_space(text[b])) ++b;
  while (e > b && utf8::is_space(text[e - 1])) --e;
  return text.substr(b, e - b);
}

class Scorer {
 public:
  Scorer(const SentimentLexicon& lex, std::vector<Token> tokens)
      : lex_(lex), tokens_(std::move(tokens)), cap_diff_(allcap_differential()) {}

  std::vector<double> sentiments() const {
    std::vector<double> out;
    out.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const std::string& lw = tokens_[i].lower;
      if (lex_.boosters.count(lw) ||
          (i + 1 < tokens_.size() && lw == "kind" && tokens_[i + 1].lower == "of")) {
        out.push_back(0.0);
        continue;
      }
      out.push_back(valence_at(i));
    }
    but_check(out);
    return out;
  }

 private:
  bool allcap_differential() const {
    std::size_t caps = 0;
    for (const auto& t : tokens_) caps += all_caps(t.word) ? 1 : 0;
    const std::size_t diff = tokens_.size() - caps;
    return diff > 0 && diff < tokens_.size();
  }

  bool in_lexicon(std::size_t i) const { return lex_.valence.count(tokens_[i].lower) > 0; }

  const std::string& lw(std::size_t i) const { return tokens_[i].lower; }

  bool negated(const std::string& word) const {
    return lex_.negations.count(word) > 0 || word.find("n't") != std::string::npos;
  }

  double scalar_inc_dec(std::size_t k, double valence) const {
    auto it = lex_.boosters.find(lw(k));
    if (it == lex_.boosters.end()) return 0.0;
    double scalar = it->second;
    if (valence < 0) scalar = -scalar;
    if (all_caps(tokens_[k].word) && cap_diff_) scalar += valence > 0 ? kCapsIncrement : -kCapsIncrement;
    return scalar;
  }

  double valence_at(std::size_t i) const {
    auto hit = lex_.valence.find(lw(i));
    if (hit == lex_.valence.end()) return 0.0;
    const double base = hit->second;
    double valence = base;

    // "no" directly before another lexicon word acts as a negator, not a word.
    if (lw(i) == "no" && i + 1 < tokens_.size() && in_lexicon(i + 1)) valence = 0.0;
    if ((i > 0 && lw(i - 1) == "no") || (i > 1 && lw(i - 2) == "no") ||
        (i > 2 && lw(i - 3) == "no" && (lw(i - 1) == "or" || lw(i - 1) == "nor"))) {
      valence = base * kNegationScalar;
    }

    if (all_caps(tokens_[i].word) && cap_diff_) valence += valence > 0 ? kCapsIncrement : -kCapsIncrement;

    for (std::size_t start = 0; start < 3; ++start) {
      if (i > start && !in_lexicon(i - start - 1)) {
        double s = scalar_inc_dec(i - start - 1, valence);
        if (start == 1 && s != 0) s *= 0.95;
        if (start == 2 && s != 0) s *= 0.9;
        valence += s;
        valence = negation_check(valence, start, i);
        if (start == 2) valence = idioms_check(valence, i);
      }
    }
    return least_check(valence, i);
  }

  double negation_check(double valence, std::size_t start, std::size_t i) const {
    if (start == 0) {
      if (negated(lw(i - 1))) valence *= kNegationScalar;
    } else if (start == 1) {
      if (lw(i - 2) == "never" && (lw(i - 1) == "so" || lw(i - 1) == "this")) {
        valence *= 1.25;
      } else if (lw(i - 2) == "without" && lw(i - 1) == "doubt") {
        // "without doubt" is not a negation
      } else if (negated(lw(i - 2))) {
        valence *= kNegationScalar;
      }
    } else {
      if ((lw(i - 3) == "never" && (lw(i - 2) == "so" || lw(i - 2) == "this")) ||
          (lw(i - 1) == "so" || lw(i - 1) == "this")) {
        valence *= 1.25;
      } else if (lw(i - 3) == "without" && (lw(i - 2) == "doubt" || lw(i - 1) == "doubt")) {
      } else if (negated(lw(i - 3))) {
        valence *= kNegationScalar;
      }
    }
    return valence;
  }

  double idioms_check(double valence, std::size_t i) const {
    const std::string onezero = lw(i - 1) + " " + lw(i);
    const std::string twoonezero = lw(i - 2) + " " + lw(i - 1) + " " + lw(i);
    const std::string twoone = lw(i - 2) + " " + lw(i - 1);
    const std::string threetwoone = lw(i - 3) + " " + lw(i - 2) + " " + lw(i - 1);
    const std::string threetwo = lw(i - 3) + " " + lw(i - 2);

    for (const std::string* seq : {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
      if (auto it = lex_.idioms.find(*seq); it != lex_.idioms.end()) {
        valence = it->second;
        break;
      }
    }
    if (tokens_.size() - 1 > i) {
      if (auto it = lex_.idioms.find(lw(i) + " " + lw(i + 1)); it != lex_.idioms.end()) {
        valence = it->second;
      }
    }
    if (tokens_.size() - 1 > i + 1) {
      if (auto it = lex_.idioms.find(lw(i) + " " + lw(i + 1) + " " + lw(i + 2)); it != lex_.idioms.end()) {
        valence = it->second;
      }
    }
    // Multi-word boosters such as "sort of" / "kind of".
    for (const std::string* seq : {&threetwoone, &threetwo, &twoone}) {
      if (auto it = lex_.boosters.find(*seq); it != lex_.boosters.end()) valence += it->second;
    }
    return valence;
  }

  double least_check(double valence, std::size_t i) const {
    if (i > 1 && !in_lexicon(i - 1) && lw(i - 1) == "least") {
      if (lw(i - 2) != "at" && lw(i - 2) != "very") valence *= kNegationScalar;
    } else if (i > 0 && !in_lexicon(i - 1) && lw(i - 1) == "least") {
      valence *= kNegationScalar;
    }
    return valence;
  }

  // Halves sentiment before the first "but" and boosts it by 1.5 after. The
  // reference rewrites the *first* slot holding each value (list.index), so
  // repeated values are rewritten the same way here.
  void but_check(std::vector<double>& s) const {
    auto but = std::find_if(tokens_.begin(), tokens_.end(), [](const Token& t) { return t.lower == "but"; });
    if (but == tokens_.end()) return;
    const auto bi = static_cast<std::size_t>(but - tokens_.begin());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const double v = s[k];
      const auto si = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
      if (si < bi) {
        s[si] = v * 0.5;
      } else if (si > bi) {
        s[si] = v * 1.5;
      }
    }
  }

  const SentimentLexicon& lex_;
  std::vector<Token> tokens_;
  bool cap_diff_;
};

double punctuation_emphasis(std::u32string_view text) {
  const auto ep = std::min<std::ptrdiff_t>(std::count(text.begin(), text.end(), U'!'), kMaxExclamations);
  const auto qm = std::count(text.begin(), text.end(), U'?');
  double qm_amp = 0.0;
  if (qm > 1) qm_amp = qm <= 3 ? static_cast<double>(qm) * kQuestionIncrement : kQuestionCap;
  return static_cast<double>(ep) * kExclamationIncrement + qm_amp;
}

PolarityScores score_valence(const std::vector<double>& sentiments, std::u32string_view text) {
  PolarityScores out;
  if (sentiments.empty()) {
    out.neu = 1.0;
    return out;
  }
  double sum = 0.0;
  for (double v : sentiments) sum += v;
  const double amp = punctuation_emphasis(text);
  if (sum > 0) {
    sum += amp;
  } else if (sum < 0) {
    sum -= amp;
  }
  out.compound = normalize(sum);

  double pos_sum = 0.0;
  double neg_sum = 0.0;
  int neu_count = 0;
  for (double v : sentiments) {
    if (v > 0) pos_sum += v + 1;
    if (v < 0) neg_sum += v - 1;
    if (v == 0) ++neu_count;
  }
  if (pos_sum > std::fabs(neg_sum)) {
    pos_sum += amp;
  } else if (pos_sum < std::fabs(neg_sum)) {
    neg_sum -= amp;
  }
  const double total = pos_sum + std::fabs(neg_sum) + neu_count;
  out.pos = std::fabs(pos_sum / total);
  out.neg = std::fabs(neg_sum / total);
  out.neu = std::fabs(neu_count / total);
  return out;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

std::unordered_map<std::string, double> read_valence_table(std::istream& in, std::string_view source) {
  std::unordered_map<std::string, double> table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = trim_line(line);
    if (row.empty()) continue;
    const auto tab = row.find('\t');
    auto fail = [&](const std::string& why) {
      return DataError(std::string(source) + ":" + std::to_string(lineno) + ": " + why);
    };
    if (tab == std::string_view::npos || tab == 0) throw fail("expected token<TAB>valence");
    const std::string token(row.substr(0, tab));
    std::string_view rest = row.substr(tab + 1);
    rest = rest.substr(0, rest.find('\t'));
    const std::string number(rest);
    char* end = nullptr;
    const double v = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size() || !std::isfinite(v)) {
      throw fail("invalid valence '" + number + "'");
    }
    table[token] = v;
  }
  return table;
}

void read_rules_json(std::istream& in, SentimentLexicon& lexicon) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    lexicon.negations.clear();
    for (const auto& w : doc.at("negations")) lexicon.negations.insert(w.get<std::string>());
    lexicon.boosters.clear();
    for (const auto& [k, v] : doc.at("boosters").items()) lexicon.boosters[k] = v.get<double>();
    lexicon.idioms.clear();
    for (const auto& [k, v] : doc.at("special_idioms").items()) lexicon.idioms[k] = v.get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("vader rules: ") + e.what());
  }
}

std::unordered_map<std::string, std::string> read_emoji_table(std::istream& in) {
  std::unordered_map<std::string, std::string> table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = trim_line(line);
    if (row.empty()) continue;
    const auto tab = row.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError("emoji lexicon:" + std::to_string(lineno) + ": expected emoji<TAB>description");
    }
    std::string_view desc = row.substr(tab + 1);
    desc = desc.substr(0, desc.find('\t'));
    table[std::string(row.substr(0, tab))] = std::string(desc);
  }
  return table;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& dir) {
  SentimentLexicon lex;
  {
    auto in = open_or_throw(dir / "vader_lexicon.txt");
    lex.valence = read_valence_table(in, (dir / "vader_lexicon.txt").string());
  }
  {
    auto in = open_or_throw(dir / "vader_rules.json");
    read_rules_json(in, lex);
  }
  if (std::filesystem::exists(dir / "emoji_utf8_lexicon.txt")) {
    auto in = open_or_throw(dir / "emoji_utf8_lexicon.txt");
    lex.emoji = read_emoji_table(in);
  }
  return lex;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("EMOGRAD_DATA_DIR"); env && *env) return env;
  return EMOGRAD_DATA_DIR;
}

const SentimentLexicon& default_lexicon() {
  static const SentimentLexicon lex = SentimentLexicon::load(default_data_dir());
  return lex;
}

double normalize(double score, double alpha) {
  const double norm = score / std::sqrt(score * score + alpha);
  return std::clamp(norm, -1.0, 1.0);
}

PolarityScores score_text(const SentimentLexicon& lexicon, std::string_view text) {
  const std::u32string prepared = strip_space(expand_emoji(lexicon, utf8::decode(text)));
  Scorer scorer(lexicon, words_and_emoticons(prepared));
  return score_valence(scorer.sentiments(), prepared);
}

std::map<Emotion, double> median_by_emotion(const std::vector<std::pair<double, Emotion>>& scored) {
  std::map<Emotion, std::vector<double>> groups;
  for (const auto& [compound, e] : scored) groups[e].push_back(compound);
  std::map<Emotion, double> out;
  for (auto& [e, values] : groups) out.emplace(e, median_of(std::move(values)));
  return out;
}

std::map<Emotion, double> median_by_emotion(const SentimentLexicon& lexicon,
                                            const std::vector<std::pair<std::string, Emotion>>& corpus) {
  std::vector<std::pair<double, Emotion>> scored;
  scored.reserve(corpus.size());
  for (const auto& [text, e] : corpus) scored.emplace_back(score_text(lexicon, text).compound, e);
  return median_by_emotion(scored);
}

}  // namespace emograd::vader
