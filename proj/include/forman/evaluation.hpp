#pragma once

#include <vector>

#include "forman/graph.hpp"

namespace forman {

// CE(x): sum of inter-layer curvatures F((x^i, x^j)) over layer pairs i < j.
// Pairs without an inter-layer edge (a degenerate copy) contribute 0.
double comprehensive_evaluation(const CompileGraph& cg, VertexId x);

// CE^uni(x): the same sum evaluated on the configuration where every
// non-degenerate copy of x has one common W value and m is unchanged. Each
// pair then contributes -(L'-2)(m(x^i) + m(x^j)), L' being the number of
// non-degenerate copies.
double ce_uniform(const CompileGraph& cg, VertexId x);

// -Σ_{i<j} (m(x^i) + m(x^j)) over the same pairs: the uniform baseline
// without the (L'-2) factor. Reported next to ce_uniform; not used for ranking.
double ce_uniform_unscaled(const CompileGraph& cg, VertexId x);

// Sum of CurvatureBounds::lower over x's inter-layer edges; CE(x) never falls below it.
double ce_lower_bound(const CompileGraph& cg, VertexId x);

struct EvaluationRow {
  VertexId vertex = 0;
  double ce = 0.0;
  double ce_uni = 0.0;
  double ce_uni_unscaled = 0.0;
  double difference = 0.0;  // ce - ce_uni
  bool degenerate = false;  // some copy of x is isolated in its layer
};

struct EvaluationReport {
  std::vector<EvaluationRow> rows;  // by vertex id

  double difference_spread() const;  // max - min of difference
};

EvaluationReport difference_scores(const CompileGraph& cg);

struct LayerSum {
  LayerId layer;
  double sum = 0.0;
  std::size_t edges = 0;
  bool empty = true;  // x has no intra-layer edge here
};

// Σ_y F((x^i, y^i)) per layer, F being the multiplex curvature.
std::vector<LayerSum> intra_curvature_sums_by_layer(const CompileGraph& cg, VertexId x);

struct EdgeScore {
  VertexId neighbor = 0;
  double curvature = 0.0;
};

struct WeaknessFinding {
  VertexId vertex = 0;
  LayerId layer;
  Edge edge;
  double edge_curvature = 0.0;
  double difference = 0.0;
  // All differences tie at the maximum, so the vertex came from the id tie-break.
  bool low_confidence = false;
  std::vector<EvaluationRow> ranking;    // difference descending, ties by id
  std::vector<LayerSum> layer_sums;      // for the chosen vertex
  std::vector<EdgeScore> edge_scores;    // chosen vertex, chosen layer
};

// Weakness identification on an already-normalized compile graph: the vertex
// with the largest CE - CE^uni, then the layer where its incident intra-layer
// curvature sum is largest, then the incident edge there with the largest
// curvature. Every argmax breaks ties toward the smallest id; layers where the
// vertex has no edge are skipped. Throws InvalidArgument for L < 2 and
// DegenerateGraph when the chosen vertex has no intra-layer edge at all.
WeaknessFinding identify_weakness(const CompileGraph& cg);

}  // namespace forman
