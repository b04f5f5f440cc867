#include "forman/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "forman/error.hpp"

namespace forman {

namespace {

struct Orientation {
  LayerId low;
  LayerId high;
};

Orientation orient(const CompileGraph& cg, VertexId x, LayerId a, LayerId b) {
  if (a == b || !cg.graph().find_edge({x, a}, {x, b})) {
    throw Error(ErrorCode::kNotAnInterEdge,
                "(" + std::to_string(x) + "^" + std::to_string(a.value) + "," +
                    std::to_string(x) + "^" + std::to_string(b.value) +
                    ") is not an inter-layer edge of the compile graph");
  }
  if (b < a) std::swap(a, b);
  if (cg.w_value({x, b}) < cg.w_value({x, a})) return {b, a};
  return {a, b};
}

// Layers k with an inter edge (x^low, x^k), k != high. In a compile graph this
// coincides with Γ_C(x^high) \ {x^low}.
std::vector<LayerId> other_layers(const CompileGraph& cg, VertexId x, Orientation o) {
  std::vector<LayerId> out;
  const auto& g = cg.graph();
  for (const auto& nb : g.inter_neighbors({x, o.low})) {
    const auto layer = g.state_vertex(nb.state).layer;
    if (layer != o.high) out.push_back(layer);
  }
  return out;
}

double incident_ratio_sum(std::span<const StateNeighbor> nbrs, double we) {
  double s = 0.0;
  for (const auto& nb : nbrs) s += std::sqrt(we / nb.weight);
  return s;
}

}  // namespace

double forman_monolayer(const DoublyWeightedGraph& g, std::size_t edge) {
  if (edge >= g.edge_count()) {
    throw Error(ErrorCode::kEdgeNotFound, "edge index " + std::to_string(edge) + " out of range");
  }
  const auto [x, y] = g.edges()[edge];
  const double we = g.edge_weight(edge);
  double sx = 0.0;
  for (const auto& inc : g.incident(x)) sx += std::sqrt(we / g.edge_weight(inc.edge));
  double sy = 0.0;
  for (const auto& inc : g.incident(y)) sy += std::sqrt(we / g.edge_weight(inc.edge));
  const double mx = g.vertex_weight(x);
  const double my = g.vertex_weight(y);
  return 2.0 * (mx + my) - mx * sx - my * sy;
}

double forman_monolayer(const DoublyWeightedGraph& g, VertexId x, VertexId y) {
  return forman_monolayer(g, g.edge_index(x, y));
}

double forman_multiplex(const MultiplexGraph& g, EdgeRef edge) {
  const auto ends = g.endpoints(edge);
  const double we = g.edge_weight(edge);
  const double ma = g.vertex_weight(ends.first);
  const double mb = g.vertex_weight(ends.second);
  const double sa = incident_ratio_sum(g.neighbors(ends.first), we);
  const double sb = incident_ratio_sum(g.neighbors(ends.second), we);
  return 2.0 * (ma + mb) - ma * sa - mb * sb;
}

double forman_multiplex(const MultiplexGraph& g, StateVertex a, StateVertex b) {
  return forman_multiplex(g, g.edge_ref(a, b));
}

GammaPartition gamma_partition(const CompileGraph& cg, VertexId x, LayerId a, LayerId b) {
  const auto o = orient(cg, x, a, b);
  const double lo = cg.w_value({x, o.low});
  const double hi = cg.w_value({x, o.high});
  GammaPartition p{o.low, o.high, other_layers(cg, x, o), {}, {}};
  for (const auto k : p.all) {
    const double wk = cg.w_value({x, k});
    if (wk <= lo) p.minus.push_back(k);
    if (wk >= hi) p.plus.push_back(k);
  }
  return p;
}

double inter_curvature_closed_form(double m_low, double m_high, double w_low, double w_high,
                                   std::span<const double> others) {
  const double r = w_low / w_high;
  double not_minus = 0.0;
  double plus = 0.0;
  double minus_ratio_sum = 0.0;
  double not_plus_ratio_sum = 0.0;
  for (const double wk : others) {
    if (wk <= w_low) {
      minus_ratio_sum += w_low / wk;
    } else {
      not_minus += 1.0;
    }
    if (wk >= w_high) {
      plus += 1.0;
    } else {
      not_plus_ratio_sum += w_low / wk;
    }
  }
  return -m_low * not_minus + m_high * (1.0 - (plus + 1.0) * r) - m_low * minus_ratio_sum -
         m_high * not_plus_ratio_sum;
}

double forman_inter_compile(const CompileGraph& cg, VertexId x, LayerId a, LayerId b) {
  const auto o = orient(cg, x, a, b);
  std::vector<double> others;
  for (const auto k : other_layers(cg, x, o)) others.push_back(cg.w_value({x, k}));
  const auto& g = cg.graph();
  return inter_curvature_closed_form(g.vertex_weight({x, o.low}), g.vertex_weight({x, o.high}),
                                     cg.w_value({x, o.low}), cg.w_value({x, o.high}), others);
}

CurvatureBounds inter_curvature_bounds(const CompileGraph& cg, VertexId x, LayerId a,
                                       LayerId b) {
  const auto p = gamma_partition(cg, x, a, b);
  const auto& g = cg.graph();
  const double m_lo = g.vertex_weight({x, p.low});
  const double m_hi = g.vertex_weight({x, p.high});
  const double w_lo = cg.w_value({x, p.low});
  const double w_hi = cg.w_value({x, p.high});
  const double r = w_lo / w_hi;
  const double all = static_cast<double>(p.all.size());

  double max_minus_ratio = 0.0;
  for (const auto k : p.minus) max_minus_ratio = std::max(max_minus_ratio, w_lo / cg.w_value({x, k}));

  CurvatureBounds out;
  out.lower = -(m_lo + m_hi) * all * std::max(1.0, max_minus_ratio) - m_hi * (r - 1.0);
  out.upper = -all * m_lo + m_hi * (1.0 - (all + 1.0) * r);
  out.printed_lower = -(m_lo + m_hi) * static_cast<double>(p.minus.size()) * max_minus_ratio -
                      m_hi * (r - 1.0);
  out.gamma_equals_minus = p.minus.size() == p.all.size();
  out.gamma_equals_plus = p.plus.size() == p.all.size();
  return out;
}

namespace {

CurvatureReport finish_report(std::vector<EdgeCurvature> entries) {
  CurvatureReport report;
  report.entries = std::move(entries);
  if (report.entries.empty()) return report;
  report.min = report.entries.front().value;
  report.max = report.entries.front().value;
  double total = 0.0;
  for (const auto& e : report.entries) {
    report.min = std::min(report.min, e.value);
    report.max = std::max(report.max, e.value);
    total += e.value;
  }
  report.mean = total / static_cast<double>(report.entries.size());
  return report;
}

std::vector<EdgeCurvature> multiplex_entries(const MultiplexGraph& g) {
  std::vector<EdgeCurvature> entries;
  entries.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.intra_edges().size(); ++i) {
    const EdgeRef ref{EdgeKind::kIntra, i};
    entries.push_back({g.endpoints(ref), EdgeKind::kIntra, forman_multiplex(g, ref), {}});
  }
  for (std::size_t i = 0; i < g.inter_edges().size(); ++i) {
    const EdgeRef ref{EdgeKind::kInter, i};
    entries.push_back({g.endpoints(ref), EdgeKind::kInter, forman_multiplex(g, ref), {}});
  }
  return entries;
}

}  // namespace

CurvatureReport curvature_report(const MultiplexGraph& g) {
  return finish_report(multiplex_entries(g));
}

CurvatureReport curvature_report(const CompileGraph& cg) {
  auto entries = multiplex_entries(cg.graph());
  for (auto& e : entries) {
    if (e.kind != EdgeKind::kInter) continue;
    const auto x = e.edge.first.vertex;
    e.low_layer = cg.w_value({x, e.edge.second.layer}) < cg.w_value({x, e.edge.first.layer})
                      ? e.edge.second.layer
                      : e.edge.first.layer;
  }
  return finish_report(std::move(entries));
}

CurvatureReport curvature_report(const DoublyWeightedGraph& g) {
  std::vector<EdgeCurvature> entries;
  entries.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto e = g.edges()[i];
    entries.push_back({{{e.u, LayerId{1}}, {e.v, LayerId{1}}},
                       EdgeKind::kIntra,
                       forman_monolayer(g, i),
                       {}});
  }
  return finish_report(std::move(entries));
}

std::vector<double> edge_curvatures(const DoublyWeightedGraph& g) {
  std::vector<double> out(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) out[i] = forman_monolayer(g, i);
  return out;
}

}  // namespace forman
