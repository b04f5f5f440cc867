#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forman/io.hpp"
#include "forman/normalization.hpp"

namespace forman {

enum class NormalizeChoice { kDefault, kNone, kMean, kBounded };

struct RunConfig {
  std::string command;
  // Exactly one of these, except for `features`, which reads `dataset`.
  std::optional<std::string> input;     // graph file path
  std::optional<std::string> generate;  // generator spec, "a,b,c" layer list, cg258, cg888
  std::optional<std::uint64_t> seed;
  NormalizeChoice normalize = NormalizeChoice::kDefault;
  double range_lo = 1.0;
  double range_hi = 10.0;
  ReportFormat format = ReportFormat::kCsv;
  std::size_t iterations = 3;  // WL
  std::size_t bins = 30;       // hist
  std::string dataset = "bridge";
  std::optional<std::size_t> count;
};

struct Artifact {
  std::string name;
  std::string content;
};

// Runs one subcommand entirely in memory; nothing is written unless every
// artifact was produced. Throws forman::Error.
//
//   curvature    curvature.{csv,json}       no normalization unless asked
//   sensitivity  sensitivity.{csv,json}     single-layer input
//   evaluate     evaluation.{csv,json}      bounded [range] by default
//   identify     identify.csv + ranking/layer_sums/edge_scores, or identify.json
//   generate     graph.json
//   features     features.csv               dataset bridge | karate
//   hist         hist.csv, hist_summary.csv  raw, mean and bounded on one grid
std::vector<Artifact> run_pipeline(const RunConfig& config);

// "lo:hi" with 0 < lo < hi. Throws UsageError.
std::pair<double, double> parse_range(std::string_view text);

// Splits "er:25:0.2,er:25:0.5" and expands the cg258 / cg888 aliases.
// Throws InvalidSpec.
std::vector<GeneratorSpec> parse_layer_specs(std::string_view text);

}  // namespace forman
