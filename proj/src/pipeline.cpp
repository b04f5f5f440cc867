#include "forman/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "forman/error.hpp"
#include "forman/format.hpp"
#include "forman/generators.hpp"
#include "forman/stats.hpp"

namespace forman {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::kUsageError, what); }

std::string extension(ReportFormat f) { return f == ReportFormat::kJson ? ".json" : ".csv"; }

// Loaded input: either a stack of layers (compile graph or monolayer) or an
// explicit multiplex graph.
struct Input {
  GraphFile file;
  std::vector<DoublyWeightedGraph> layers;  // empty for explicit multiplex input
};

Input load_input(const RunConfig& c) {
  if (c.input.has_value() == c.generate.has_value()) {
    usage("give exactly one of --input and --generate");
  }
  Input in;
  if (c.input) {
    in.file = parse_graph_file(read_text_file(*c.input));
    if (in.file.is_compile()) in.layers = in.file.layer_graphs();
    return in;
  }
  const auto specs = parse_layer_specs(*c.generate);
  const bool random = std::any_of(specs.begin(), specs.end(),
                                  [](const GeneratorSpec& s) { return s.stochastic(); });
  if (random && !c.seed) usage("generator '" + *c.generate + "' is random; pass --seed");
  in.layers = generate_layers(specs, c.seed.value_or(0));
  in.file = GraphFile::from_layers(in.layers);
  return in;
}

std::optional<NormalizationScheme> scheme_for(const RunConfig& c, NormalizeChoice fallback) {
  const auto choice = c.normalize == NormalizeChoice::kDefault ? fallback : c.normalize;
  switch (choice) {
    case NormalizeChoice::kMean: return NormalizationScheme::mean();
    case NormalizeChoice::kBounded: return NormalizationScheme::bounded(c.range_lo, c.range_hi);
    default: return std::nullopt;
  }
}

std::vector<DoublyWeightedGraph> normalized_layers(const Input& in,
                                                   const std::optional<NormalizationScheme>& s) {
  if (!s) return in.layers;
  return normalize_layers(in.layers, *s);
}

const Input& require_layers(const Input& in, const std::string& command) {
  if (in.layers.empty()) {
    throw Error(ErrorCode::kNotACompileGraph,
                "'" + command + "' needs a layer stack; the input lists explicit inter-layer edges");
  }
  return in;
}

std::vector<Artifact> run_curvature(const RunConfig& c) {
  const auto in = load_input(c);
  const auto name = "curvature" + extension(c.format);
  if (in.layers.empty()) {
    if (c.normalize == NormalizeChoice::kMean || c.normalize == NormalizeChoice::kBounded) {
      throw Error(ErrorCode::kNotACompileGraph, "normalization needs a layer stack");
    }
    return {{name, curvature_report_text(curvature_report(in.file.to_multiplex()), c.format)}};
  }
  const auto layers = normalized_layers(in, scheme_for(c, NormalizeChoice::kNone));
  if (layers.size() == 1) return {{name, curvature_report_text(curvature_report(layers[0]), c.format)}};
  return {{name, curvature_report_text(curvature_report(compile(layers)), c.format)}};
}

std::vector<Artifact> run_sensitivity(const RunConfig& c) {
  const auto in = load_input(c);
  require_layers(in, c.command);
  if (in.layers.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "sensitivity works on a single-layer graph");
  }
  const auto g = normalized_layers(in, scheme_for(c, NormalizeChoice::kNone)).front();
  const auto records = sensitivity_map(g);
  return {{"sensitivity" + extension(c.format), sensitivity_text(g, records, c.format)}};
}

CompileGraph compile_for_evaluation(const RunConfig& c) {
  const auto in = load_input(c);
  require_layers(in, c.command);
  if (in.layers.size() < 2) throw Error(ErrorCode::kInvalidArgument, "'" + c.command + "' needs L >= 2");
  const auto layers = normalized_layers(in, scheme_for(c, NormalizeChoice::kBounded));
  return compile(layers);
}

std::vector<Artifact> run_evaluate(const RunConfig& c) {
  const auto cg = compile_for_evaluation(c);
  return {{"evaluation" + extension(c.format), evaluation_text(difference_scores(cg), c.format)}};
}

std::vector<Artifact> run_identify(const RunConfig& c) {
  const auto cg = compile_for_evaluation(c);
  std::vector<Artifact> out;
  for (auto& [name, content] : weakness_artifacts(identify_weakness(cg), c.format)) {
    out.push_back({std::move(name), std::move(content)});
  }
  return out;
}

std::vector<Artifact> run_generate(const RunConfig& c) {
  if (c.input) usage("'generate' takes --generate, not --input");
  const auto in = load_input(c);
  auto layers = normalized_layers(in, scheme_for(c, NormalizeChoice::kNone));
  return {{"graph.json", serialize_graph_file(GraphFile::from_layers(layers))}};
}

std::vector<Artifact> run_features(const RunConfig& c) {
  if (c.input || c.generate) usage("'features' reads --dataset, not a graph");
  if (c.format != ReportFormat::kCsv) usage("'features' writes CSV only");
  if (!c.seed) usage("'features' synthesizes a random dataset; pass --seed");
  std::vector<LabeledGraph> samples;
  if (c.dataset == "bridge") {
    BridgeDatasetParams p;
    if (c.count) p.count = *c.count;
    samples = synthesize_classification_dataset(p, *c.seed);
  } else if (c.dataset == "karate") {
    KarateDatasetParams p;
    if (c.count) p.per_class = *c.count;
    samples = karate_perturbation_dataset(p, *c.seed);
  } else {
    usage("unknown dataset '" + c.dataset + "' (bridge, karate)");
  }
  return {{"features.csv", extract_feature_matrix(samples, c.iterations).to_csv()}};
}

std::vector<double> all_curvatures(std::span<const DoublyWeightedGraph> layers) {
  if (layers.size() == 1) return edge_curvatures(layers[0]);
  std::vector<double> out;
  for (const auto& e : curvature_report(compile(layers)).entries) out.push_back(e.value);
  return out;
}

std::vector<Artifact> run_hist(const RunConfig& c) {
  if (c.bins == 0) usage("--bins must be positive");
  const auto in = load_input(c);
  require_layers(in, c.command);
  const auto raw = all_curvatures(in.layers);
  const auto mean = all_curvatures(normalize_layers(in.layers, NormalizationScheme::mean()));
  const auto bounded = all_curvatures(
      normalize_layers(in.layers, NormalizationScheme::bounded(c.range_lo, c.range_hi)));
  if (raw.empty()) throw Error(ErrorCode::kNoEdges, "graph has no edges");

  double lo = raw.front(), hi = raw.front();
  for (const auto* xs : {&raw, &mean, &bounded}) {
    for (const double x : *xs) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const double width = hi > lo ? (hi - lo) / static_cast<double>(c.bins) : 1.0;
  const auto counts = [&](const std::vector<double>& xs) {
    std::vector<std::size_t> h(c.bins, 0);
    for (const double x : xs) {
      auto b = static_cast<std::size_t>((x - lo) / width);
      ++h[std::min(b, c.bins - 1)];
    }
    return h;
  };
  const auto h_raw = counts(raw), h_mean = counts(mean), h_bounded = counts(bounded);

  std::ostringstream hist;
  hist << "bin,lo,hi,raw,mean,bounded\n";
  for (std::size_t b = 0; b < c.bins; ++b) {
    const double b_lo = lo + width * static_cast<double>(b);
    const double b_hi = b + 1 == c.bins ? std::max(hi, b_lo) : lo + width * static_cast<double>(b + 1);
    hist << b << "," << format_double(b_lo) << "," << format_double(b_hi) << "," << h_raw[b] << ","
         << h_mean[b] << "," << h_bounded[b] << "\n";
  }

  std::ostringstream summary;
  summary << "scheme,min,max,range,mean,std,w1_to_raw\n";
  const auto row = [&](const char* name, const std::vector<double>& xs) {
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    summary << name << "," << format_double(*mn) << "," << format_double(*mx) << ","
            << format_double(*mx - *mn) << "," << format_double(stats::mean(xs)) << ","
            << format_double(stats::stddev(xs)) << ","
            << format_double(stats::wasserstein1(xs, raw)) << "\n";
  };
  row("raw", raw);
  row("mean", mean);
  row("bounded", bounded);
  return {{"hist.csv", hist.str()}, {"hist_summary.csv", summary.str()}};
}

}  // namespace

std::pair<double, double> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) usage("range '" + std::string(text) + "' is not lo:hi");
  const auto parse = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      usage("range '" + std::string(text) + "' is not lo:hi");
    }
    return v;
  };
  const double lo = parse(text.substr(0, colon));
  const double hi = parse(text.substr(colon + 1));
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo < hi)) {
    usage("range needs 0 < lo < hi");
  }
  return {lo, hi};
}

std::vector<GeneratorSpec> parse_layer_specs(std::string_view text) {
  if (text == "cg258") return cg258_specs();
  if (text == "cg888") return cg888_specs();
  std::vector<GeneratorSpec> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_generator_spec(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Artifact> run_pipeline(const RunConfig& c) {
  if (c.command == "curvature") return run_curvature(c);
  if (c.command == "sensitivity") return run_sensitivity(c);
  if (c.command == "evaluate") return run_evaluate(c);
  if (c.command == "identify") return run_identify(c);
  if (c.command == "generate") return run_generate(c);
  if (c.command == "features") return run_features(c);
  if (c.command == "hist") return run_hist(c);
  usage("unknown command '" + c.command + "'");
}

}  // namespace forman
