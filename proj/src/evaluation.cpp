#include "forman/evaluation.hpp"

#include <algorithm>
#include <string>

#include "forman/curvature.hpp"
#include "forman/error.hpp"

namespace forman {

namespace {

void check_vertex(const CompileGraph& cg, VertexId x) {
  if (x >= cg.vertex_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(x) + " out of range");
  }
}

std::vector<LayerId> active_layers(const CompileGraph& cg, VertexId x) {
  std::vector<LayerId> out;
  for (std::size_t i = 0; i < cg.layer_count(); ++i) {
    const auto layer = LayerId::from_index(i);
    if (!cg.degenerate({x, layer})) out.push_back(layer);
  }
  return out;
}

}  // namespace

double comprehensive_evaluation(const CompileGraph& cg, VertexId x) {
  check_vertex(cg, x);
  const auto& g = cg.graph();
  double ce = 0.0;
  for (std::size_t i = 0; i < cg.layer_count(); ++i) {
    const auto a = LayerId::from_index(i);
    for (const auto& nb : g.inter_neighbors({x, a})) {
      const auto b = g.state_vertex(nb.state).layer;
      if (a < b) ce += forman_inter_compile(cg, x, a, b);
    }
  }
  return ce;
}

double ce_uniform(const CompileGraph& cg, VertexId x) {
  check_vertex(cg, x);
  const auto layers = active_layers(cg, x);
  if (layers.size() < 2) return 0.0;
  const std::vector<double> others(layers.size() - 2, 1.0);
  const auto& g = cg.graph();
  double ce = 0.0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (std::size_t j = i + 1; j < layers.size(); ++j) {
      ce += inter_curvature_closed_form(g.vertex_weight({x, layers[i]}),
                                        g.vertex_weight({x, layers[j]}), 1.0, 1.0, others);
    }
  }
  return ce;
}

double ce_uniform_unscaled(const CompileGraph& cg, VertexId x) {
  check_vertex(cg, x);
  const auto layers = active_layers(cg, x);
  const auto& g = cg.graph();
  double ce = 0.0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (std::size_t j = i + 1; j < layers.size(); ++j) {
      ce -= g.vertex_weight({x, layers[i]}) + g.vertex_weight({x, layers[j]});
    }
  }
  return ce;
}

double ce_lower_bound(const CompileGraph& cg, VertexId x) {
  check_vertex(cg, x);
  const auto& g = cg.graph();
  double bound = 0.0;
  for (std::size_t i = 0; i < cg.layer_count(); ++i) {
    const auto a = LayerId::from_index(i);
    for (const auto& nb : g.inter_neighbors({x, a})) {
      const auto b = g.state_vertex(nb.state).layer;
      if (a < b) bound += inter_curvature_bounds(cg, x, a, b).lower;
    }
  }
  return bound;
}

double EvaluationReport::difference_spread() const {
  if (rows.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(
      rows.begin(), rows.end(),
      [](const EvaluationRow& a, const EvaluationRow& b) { return a.difference < b.difference; });
  return hi->difference - lo->difference;
}

EvaluationReport difference_scores(const CompileGraph& cg) {
  EvaluationReport report;
  report.rows.reserve(cg.vertex_count());
  for (VertexId x = 0; x < cg.vertex_count(); ++x) {
    EvaluationRow row;
    row.vertex = x;
    row.ce = comprehensive_evaluation(cg, x);
    row.ce_uni = ce_uniform(cg, x);
    row.ce_uni_unscaled = ce_uniform_unscaled(cg, x);
    row.difference = row.ce - row.ce_uni;
    for (std::size_t i = 0; i < cg.layer_count() && !row.degenerate; ++i) {
      row.degenerate = cg.degenerate({x, LayerId::from_index(i)});
    }
    report.rows.push_back(row);
  }
  return report;
}

std::vector<LayerSum> intra_curvature_sums_by_layer(const CompileGraph& cg, VertexId x) {
  check_vertex(cg, x);
  const auto& g = cg.graph();
  std::vector<LayerSum> out;
  for (std::size_t i = 0; i < cg.layer_count(); ++i) {
    LayerSum s;
    s.layer = LayerId::from_index(i);
    for (const auto& nb : g.intra_neighbors({x, s.layer})) {
      s.sum += forman_multiplex(g, nb.edge);
      ++s.edges;
    }
    s.empty = s.edges == 0;
    out.push_back(s);
  }
  return out;
}

WeaknessFinding identify_weakness(const CompileGraph& cg) {
  if (cg.layer_count() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "weakness identification needs L >= 2");
  }
  if (cg.vertex_count() == 0) throw Error(ErrorCode::kDegenerateGraph, "graph has no vertices");

  WeaknessFinding f;
  const auto report = difference_scores(cg);
  f.ranking = report.rows;
  std::stable_sort(f.ranking.begin(), f.ranking.end(),
                   [](const EvaluationRow& a, const EvaluationRow& b) {
                     return a.difference > b.difference;
                   });
  const auto& top = f.ranking.front();
  f.vertex = top.vertex;
  f.difference = top.difference;
  f.low_confidence = f.ranking.size() > 1 && f.ranking[1].difference == top.difference;

  f.layer_sums = intra_curvature_sums_by_layer(cg, f.vertex);
  const LayerSum* best = nullptr;
  for (const auto& s : f.layer_sums) {
    if (s.empty) continue;
    if (best == nullptr || s.sum > best->sum) best = &s;
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kDegenerateGraph,
                "vertex " + std::to_string(f.vertex) + " has no intra-layer edge in any layer");
  }
  f.layer = best->layer;

  const auto& g = cg.graph();
  for (const auto& nb : g.intra_neighbors({f.vertex, f.layer})) {
    f.edge_scores.push_back({g.state_vertex(nb.state).vertex, forman_multiplex(g, nb.edge)});
  }
  const auto chosen = std::max_element(
      f.edge_scores.begin(), f.edge_scores.end(),
      [](const EdgeScore& a, const EdgeScore& b) { return a.curvature < b.curvature; });
  f.edge = Edge::canonical(f.vertex, chosen->neighbor);
  f.edge_curvature = chosen->curvature;
  return f;
}

}  // namespace forman
