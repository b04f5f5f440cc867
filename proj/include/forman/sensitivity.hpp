#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forman/graph.hpp"

namespace forman {

// Weight parameter p that F((x,y)) depends on: a vertex weight m(v) or an
// edge weight w(e').
struct Parameter {
  enum class Kind { kVertexWeight, kEdgeWeight };
  Kind kind = Kind::kVertexWeight;
  std::size_t index = 0;  // vertex id or edge index

  static Parameter vertex(VertexId v) { return {Kind::kVertexWeight, v}; }
  static Parameter edge(std::size_t e) { return {Kind::kEdgeWeight, e}; }
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

// Analytic partial derivatives of forman_monolayer. The sums below run over
// the edges incident to an endpoint other than e itself; the term for e in the
// curvature does not depend on w(e) and contributes 1 per endpoint weight.
//
//   dF/dm(x)    = 1 - Σ_{(x,z) != e} sqrt(w(e)/w(x,z))
//   dF/dw(e)    = -1/(2 sqrt(w(e))) (Σ_{(x,z) != e} m(x)/sqrt(w(x,z))
//                                    + Σ_{(y,z) != e} m(y)/sqrt(w(y,z)))
//   dF/dw(e')   = m(x) sqrt(w(e)) / (2 w(e')^{3/2})   if e' touches x
//               = m(y) sqrt(w(e)) / (2 w(e')^{3/2})   if e' touches y
//               = 0                                   otherwise

// Throws VertexNotOnEdge.
double partial_wrt_vertex_weight(const DoublyWeightedGraph& g, std::size_t edge, VertexId v);
double partial_wrt_own_edge_weight(const DoublyWeightedGraph& g, std::size_t edge);
// Throws SameEdge when other == edge.
double partial_wrt_other_edge_weight(const DoublyWeightedGraph& g, std::size_t edge,
                                     std::size_t other);
double partial(const DoublyWeightedGraph& g, std::size_t edge, Parameter p);

// S_p = dF/dp * p / F. nullopt when F(e) == 0, where the ratio is undefined.
std::optional<double> dimensionless_sensitivity(const DoublyWeightedGraph& g, std::size_t edge,
                                                Parameter p);

struct SensitivityRecord {
  std::size_t edge = 0;
  Parameter parameter;
  double partial = 0.0;
  std::optional<double> dimensionless;
};

// Per edge, in edge order: m(x), m(y), w(e), then every adjacent edge by index.
std::vector<SensitivityRecord> sensitivity_map(const DoublyWeightedGraph& g);

// Spearman correlation between edge curvatures before and after multiplying
// each edge weight by an independent factor drawn from [lo, hi].
double curvature_rank_stability(const DoublyWeightedGraph& g, double lo, double hi,
                                std::uint64_t seed);

}  // namespace forman
