#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "emograd/cli.hpp"
#include "emograd/error.hpp"
#include "emograd/labeling.hpp"
#include "emograd/metrics.hpp"
#include "emograd/prefix.hpp"
#include "emograd/records.hpp"
#include "emograd/taxonomy.hpp"
#include "emograd/vader.hpp"

namespace py = pybind11;
using namespace emograd;

namespace {

Emotion emotion_arg(const std::string& name) {
  if (auto e = parse_emotion(name)) return *e;
  throw py::value_error("unknown emotion: " + name);
}

PrefixStyle style_arg(const std::string& name) {
  if (auto s = parse_prefix_style(name)) return *s;
  throw py::value_error("style must be 'fine' or 'range', got: " + name);
}

std::string endpoint_str(const PrefixEndpoint& p) {
  if (const auto* e = std::get_if<Emotion>(&p)) return std::string(label(*e));
  return std::string(token(std::get<SentimentRange>(p)));
}

const TransitionGraph& graph_for(bool cross_cluster) {
  static const TransitionGraph wide = build_transition_graph({true});
  return cross_cluster ? wide : default_graph();
}

std::vector<metrics::Tokens> tokenize_all(const std::vector<std::string>& texts) {
  std::vector<metrics::Tokens> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(metrics::tokenize(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "emograd core bindings";

  static py::handle data_error = py::exception<DataError>(m, "DataError", PyExc_ValueError).release();
  static py::handle config_error = py::exception<ConfigError>(m, "ConfigError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      PyErr_SetString(config_error.ptr(), e.what());
    } catch (const DataError& e) {
      PyErr_SetString(data_error.ptr(), e.what());
    }
  });

  m.def("emotions", [] {
    std::vector<std::string> out;
    for (Emotion e : all_emotions()) out.emplace_back(label(e));
    return out;
  });
  m.def("clusters", [] {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : clusters()) {
      auto& v = out.emplace_back();
      for (Emotion e : c.members) v.emplace_back(label(e));
    }
    return out;
  }, "Cluster members, cluster 1 first.");
  m.def("median_score", [](const std::string& e) { return median_score(emotion_arg(e)); });
  m.def("sentiment_range", [](const std::string& e) { return std::string(token(range_of(emotion_arg(e)))); });
  m.def("lowering_targets", [](const std::string& e, bool cross_cluster) {
    std::vector<std::string> out;
    for (Emotion t : lowering_targets(graph_for(cross_cluster), emotion_arg(e))) out.emplace_back(label(t));
    return out;
  }, py::arg("emotion"), py::arg("cross_cluster") = false);
  m.def("select_target",
        [](const std::string& e, std::uint64_t seed, std::optional<std::string> fallback,
           bool cross_cluster) -> std::optional<std::string> {
          std::optional<Emotion> fb;
          if (fallback) fb = emotion_arg(*fallback);
          const auto t = select_target(graph_for(cross_cluster), emotion_arg(e), seed, fb);
          if (!t) return std::nullopt;
          return std::string(label(*t));
        },
        py::arg("emotion"), py::arg("seed") = 42, py::arg("fallback") = py::none(),
        py::arg("cross_cluster") = false);
  m.def("taxonomy_json", [](bool cross_cluster, int indent) { return taxonomy_json(graph_for(cross_cluster), indent); },
        py::arg("cross_cluster") = false, py::arg("indent") = 2);

  m.def("polarity_scores", [](const std::string& text) {
    const auto s = vader::score_text(vader::default_lexicon(), text);
    return py::dict(py::arg("neg") = s.neg, py::arg("neu") = s.neu, py::arg("pos") = s.pos,
                    py::arg("compound") = s.compound);
  });
  m.def("dominant_emotion",
        [](const std::map<std::string, double>& scores, double threshold) -> std::optional<std::string> {
          EmotionScores s;
          for (const auto& [k, v] : scores) {
            try {
              s.set(emotion_arg(k), v);
            } catch (const std::invalid_argument& e) {
              throw py::value_error(k + ": " + e.what());
            }
          }
          const auto d = dominant_emotion(s, threshold);
          if (!d.label) return std::nullopt;
          return std::string(label(*d.label));
        },
        py::arg("scores"), py::arg("threshold") = kDefaultThreshold);

  m.def("tokenize", [](const std::string& t) { return metrics::tokenize(t); });
  m.def("porter_stem", [](const std::string& w) { return metrics::porter_stem(w); });
  m.def("bleu", [](const std::vector<std::string>& refs, const std::vector<std::string>& hyps) {
    const auto r = tokenize_all(refs), h = tokenize_all(hyps);
    return metrics::bleu(r, h);
  }, py::arg("references"), py::arg("hypotheses"), "Corpus BLEU-4 over raw strings.");
  m.def("sentence_bleu", [](const std::string& r, const std::string& h) {
    return metrics::sentence_bleu(metrics::tokenize(r), metrics::tokenize(h));
  }, py::arg("reference"), py::arg("hypothesis"));
  m.def("rouge_l", [](const std::string& r, const std::string& h, double beta) {
    return metrics::rouge_l(metrics::tokenize(r), metrics::tokenize(h), beta);
  }, py::arg("reference"), py::arg("hypothesis"), py::arg("beta") = 1.0);
  m.def("meteor", [](const std::string& r, const std::string& h) {
    return metrics::meteor(metrics::tokenize(r), metrics::tokenize(h));
  }, py::arg("reference"), py::arg("hypothesis"));

  m.def("make_prefix", [](const std::string& from, const std::string& to, const std::string& text,
                          const std::string& style) {
    const LabeledPair p{{"", text, "", Source::other}, emotion_arg(from), emotion_arg(to)};
    return make_prefix(p, style_arg(style)).source();
  }, py::arg("from_emotion"), py::arg("to_emotion"), py::arg("text"), py::arg("style") = "fine");
  m.def("parse_prefix", [](const std::string& text, std::optional<std::string> style) {
    std::optional<PrefixStyle> s;
    if (style) s = style_arg(*style);
    const auto p = parse_prefix(text, s);
    return py::make_tuple(std::string(to_string(p.style)), endpoint_str(p.from), endpoint_str(p.to), p.remainder);
  }, py::arg("text"), py::arg("style") = py::none(), "Returns (style, from, to, remainder).");

  m.def("validate_record", [](const std::string& schema, const std::string& record_json) {
    const auto s = io::parse_schema(schema);
    if (!s) throw py::value_error("unknown schema: " + schema);
    io::json j;
    try {
      j = io::json::parse(record_json);
    } catch (const io::json::parse_error& e) {
      return std::vector<std::string>{std::string("invalid JSON: ") + e.what()};
    }
    return io::validate(*s, j);
  }, py::arg("schema"), py::arg("record_json"), "Schema violations for one JSON record; empty when valid.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool in-process. Returns (exit_code, stdout, stderr).");
}
