#include "forman/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "forman/curvature.hpp"
#include "forman/error.hpp"
#include "forman/stats.hpp"

namespace forman {

namespace {

void check_edge(const DoublyWeightedGraph& g, std::size_t edge) {
  if (edge >= g.edge_count()) {
    throw Error(ErrorCode::kEdgeNotFound, "edge index " + std::to_string(edge) + " out of range");
  }
}

}  // namespace

double partial_wrt_vertex_weight(const DoublyWeightedGraph& g, std::size_t edge, VertexId v) {
  check_edge(g, edge);
  const auto e = g.edges()[edge];
  if (!e.touches(v)) {
    throw Error(ErrorCode::kVertexNotOnEdge, "vertex " + std::to_string(v) +
                                                 " is not an endpoint of edge (" +
                                                 std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ")");
  }
  const double we = g.edge_weight(edge);
  double s = 0.0;
  for (const auto& inc : g.incident(v)) {
    if (inc.edge != edge) s += std::sqrt(we / g.edge_weight(inc.edge));
  }
  return 1.0 - s;
}

double partial_wrt_own_edge_weight(const DoublyWeightedGraph& g, std::size_t edge) {
  check_edge(g, edge);
  const auto [x, y] = g.edges()[edge];
  double sx = 0.0;
  for (const auto& inc : g.incident(x)) {
    if (inc.edge != edge) sx += 1.0 / std::sqrt(g.edge_weight(inc.edge));
  }
  double sy = 0.0;
  for (const auto& inc : g.incident(y)) {
    if (inc.edge != edge) sy += 1.0 / std::sqrt(g.edge_weight(inc.edge));
  }
  return -(g.vertex_weight(x) * sx + g.vertex_weight(y) * sy) /
         (2.0 * std::sqrt(g.edge_weight(edge)));
}

double partial_wrt_other_edge_weight(const DoublyWeightedGraph& g, std::size_t edge,
                                     std::size_t other) {
  check_edge(g, edge);
  check_edge(g, other);
  if (edge == other) {
    throw Error(ErrorCode::kSameEdge, "use partial_wrt_own_edge_weight for the edge itself");
  }
  const auto e = g.edges()[edge];
  const auto o = g.edges()[other];
  double m = 0.0;
  if (o.touches(e.u)) {
    m = g.vertex_weight(e.u);
  } else if (o.touches(e.v)) {
    m = g.vertex_weight(e.v);
  } else {
    return 0.0;
  }
  const double wo = g.edge_weight(other);
  return m * std::sqrt(g.edge_weight(edge)) / (2.0 * wo * std::sqrt(wo));
}

double partial(const DoublyWeightedGraph& g, std::size_t edge, Parameter p) {
  if (p.kind == Parameter::Kind::kVertexWeight) {
    return partial_wrt_vertex_weight(g, edge, static_cast<VertexId>(p.index));
  }
  if (p.index == edge) return partial_wrt_own_edge_weight(g, edge);
  return partial_wrt_other_edge_weight(g, edge, p.index);
}

std::optional<double> dimensionless_sensitivity(const DoublyWeightedGraph& g, std::size_t edge,
                                                Parameter p) {
  const double d = partial(g, edge, p);
  const double f = forman_monolayer(g, edge);
  if (f == 0.0) return std::nullopt;
  const double value = p.kind == Parameter::Kind::kVertexWeight
                           ? g.vertex_weight(static_cast<VertexId>(p.index))
                           : g.edge_weight(p.index);
  return d * value / f;
}

std::vector<SensitivityRecord> sensitivity_map(const DoublyWeightedGraph& g) {
  std::vector<SensitivityRecord> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto [x, y] = g.edges()[i];
    const double f = forman_monolayer(g, i);
    const auto add = [&](Parameter p) {
      const double d = partial(g, i, p);
      std::optional<double> s;
      if (f != 0.0) {
        const double value = p.kind == Parameter::Kind::kVertexWeight
                                 ? g.vertex_weight(static_cast<VertexId>(p.index))
                                 : g.edge_weight(p.index);
        s = d * value / f;
      }
      out.push_back({i, p, d, s});
    };
    add(Parameter::vertex(x));
    add(Parameter::vertex(y));
    add(Parameter::edge(i));

    std::vector<std::size_t> adjacent;
    for (const auto& inc : g.incident(x)) {
      if (inc.edge != i) adjacent.push_back(inc.edge);
    }
    for (const auto& inc : g.incident(y)) {
      if (inc.edge != i) adjacent.push_back(inc.edge);
    }
    std::sort(adjacent.begin(), adjacent.end());
    for (const auto other : adjacent) add(Parameter::edge(other));
  }
  return out;
}

double curvature_rank_stability(const DoublyWeightedGraph& g, double lo, double hi,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> factor(lo, hi);
  std::vector<double> w(g.edge_weights().begin(), g.edge_weights().end());
  for (auto& x : w) x *= factor(rng);
  const auto before = edge_curvatures(g);
  const auto after = edge_curvatures(g.with_edge_weights(w));
  return stats::spearman(before, after);
}

}  // namespace forman
