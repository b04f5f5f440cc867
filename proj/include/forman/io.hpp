#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forman/curvature.hpp"
#include "forman/evaluation.hpp"
#include "forman/features.hpp"
#include "forman/graph.hpp"
#include "forman/sensitivity.hpp"

namespace forman {

// On-disk graph document (JSON):
//
//   {
//     "format": "forman-multiplex", "version": 1, "n": 3,
//     "layers": [ {"vertex_weights": [1, 1, 1], "edges": [[0, 1, 2.5], [1, 2, 1]]} ],
//     "inter_edges": [[vertex, layer_a, layer_b, weight]],   // optional
//     "labels": ["a", "b", "c"]                               // optional
//   }
//
// Without "inter_edges" the layers form a compile graph and the inter-layer
// edges are derived. Layer numbers in "inter_edges" are 1-based.
struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;
};

struct LayerData {
  std::vector<double> vertex_weights;
  std::vector<WeightedEdge> edges;
};

struct GraphFile {
  std::size_t n = 0;
  std::vector<LayerData> layers;
  std::optional<std::vector<InterEdge>> inter_edges;
  std::vector<std::string> labels;

  bool is_compile() const { return !inter_edges.has_value(); }

  std::vector<DoublyWeightedGraph> layer_graphs() const;
  // Throws NotACompileGraph when explicit inter-layer edges are present.
  CompileGraph to_compile() const;
  MultiplexGraph to_multiplex() const;

  static GraphFile from_layers(std::span<const DoublyWeightedGraph> layers);
};

// Throws SyntaxError (with line and column) or ValidationError naming the
// offending element.
GraphFile parse_graph_file(std::string_view text);
std::string serialize_graph_file(const GraphFile& file);

// Throws IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

enum class ReportFormat { kCsv, kJson };

std::string curvature_report_text(const CurvatureReport& report, ReportFormat format);
std::string sensitivity_text(const DoublyWeightedGraph& g,
                             std::span<const SensitivityRecord> records, ReportFormat format);
std::string evaluation_text(const EvaluationReport& report, ReportFormat format);
// CSV: identify.csv (the selection), ranking.csv, layer_sums.csv,
// edge_scores.csv. JSON: a single identify.json.
std::vector<std::pair<std::string, std::string>> weakness_artifacts(const WeaknessFinding& finding,
                                                                    ReportFormat format);

}  // namespace forman
