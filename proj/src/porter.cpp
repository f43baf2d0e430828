#include <initializer_list>
#include <string>
#include <string_view>

#include "emograd/metrics.hpp"

namespace emograd::metrics {
namespace {

bool is_vowel_letter(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// 'y' is a consonant at the start of a word or after a vowel.
bool is_consonant(std::string_view w, std::size_t i) {
  if (is_vowel_letter(w[i])) return false;
  if (w[i] == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
  return true;
}

// m in [C](VC)^m[V].
int measure(std::string_view stem) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    const bool cons = is_consonant(stem, i);
    if (cons && prev_vowel) ++m;
    prev_vowel = !cons;
  }
  return m;
}

bool contains_vowel(std::string_view stem) {
  for (std::size_t i = 0; i < stem.size(); ++i) {
    if (!is_consonant(stem, i)) return true;
  }
  return false;
}

bool ends_double_consonant(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: consonant-vowel-consonant, the last not w, x or y.
bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 3 && is_consonant(w, n - 3) && !is_consonant(w, n - 2) && is_consonant(w, n - 1) &&
         w[n - 1] != 'w' && w[n - 1] != 'x' && w[n - 1] != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// The first rule whose suffix matches decides; if its condition fails the
// word is left alone.
template <typename Cond>
std::string apply_first(const std::string& w, std::initializer_list<Rule> rules, Cond cond) {
  for (const Rule& r : rules) {
    if (ends_with(w, r.suffix)) {
      const std::string stem = w.substr(0, w.size() - r.suffix.size());
      if (cond(stem, r.suffix)) return stem + std::string(r.replacement);
      return w;
    }
  }
  return w;
}

std::string step1a(const std::string& w) {
  return apply_first(w, {{"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"s", ""}},
                     [](const std::string&, std::string_view) { return true; });
}

std::string step1b(const std::string& w) {
  if (ends_with(w, "eed")) {
    const std::string stem = w.substr(0, w.size() - 3);
    return measure(stem) > 0 ? stem + "ee" : w;
  }
  std::string stem;
  bool removed = false;
  for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
    if (ends_with(w, suffix)) {
      stem = w.substr(0, w.size() - suffix.size());
      if (contains_vowel(stem)) {
        removed = true;
        break;
      }
    }
  }
  if (!removed) return w;

  if (ends_with(stem, "at")) return stem + "e";
  if (ends_with(stem, "bl")) return stem + "e";
  if (ends_with(stem, "iz")) return stem + "e";
  if (ends_double_consonant(stem)) {
    const char last = stem.back();
    if (last != 'l' && last != 's' && last != 'z') stem.pop_back();
    return stem;
  }
  if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
  return stem;
}

std::string step1c(const std::string& w) {
  if (ends_with(w, "y")) {
    const std::string stem = w.substr(0, w.size() - 1);
    if (contains_vowel(stem)) return stem + "i";
  }
  return w;
}

auto positive_measure = [](const std::string& stem, std::string_view) { return measure(stem) > 0; };

std::string step2(const std::string& w) {
  return apply_first(w,
                     {{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},
                      {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
                      {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
                      {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"}},
                     positive_measure);
}

std::string step3(const std::string& w) {
  return apply_first(w,
                     {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"}, {"ical", "ic"},
                      {"ful", ""}, {"ness", ""}},
                     positive_measure);
}

std::string step4(const std::string& w) {
  return apply_first(w,
                     {{"al", ""},  {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},  {"able", ""},
                      {"ible", ""}, {"ant", ""}, {"ement", ""}, {"ment", ""}, {"ent", ""}, {"ion", ""},
                      {"ou", ""},  {"ism", ""},  {"ate", ""},  {"iti", ""},  {"ous", ""}, {"ive", ""},
                      {"ize", ""}},
                     [](const std::string& stem, std::string_view suffix) {
                       if (measure(stem) <= 1) return false;
                       if (suffix == "ion") return !stem.empty() && (stem.back() == 's' || stem.back() == 't');
                       return true;
                     });
}

std::string step5a(const std::string& w) {
  if (ends_with(w, "e")) {
    const std::string stem = w.substr(0, w.size() - 1);
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) return stem;
  }
  return w;
}

std::string step5b(const std::string& w) {
  if (ends_with(w, "ll") && measure(std::string_view(w).substr(0, w.size() - 1)) > 1) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  w = step1a(w);
  w = step1b(w);
  w = step1c(w);
  w = step2(w);
  w = step3(w);
  w = step4(w);
  w = step5a(w);
  w = step5b(w);
  return w;
}

}  // namespace emograd::metrics
