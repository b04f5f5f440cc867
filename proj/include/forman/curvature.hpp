#pragma once

#include <optional>
#include <span>
#include <vector>

#include "forman/graph.hpp"

namespace forman {

// Forman curvature of a monolayer edge:
//   F((x,y)) = 2(m(x)+m(y)) - m(x) Σ_{(x,z)} sqrt(w(x,y)/w(x,z))
//                           - m(y) Σ_{(y,z)} sqrt(w(x,y)/w(y,z))
// Both sums run over every edge incident to the endpoint, (x,y) included, so
// that unit weights give 4 - deg(x) - deg(y).
double forman_monolayer(const DoublyWeightedGraph& g, std::size_t edge);
double forman_monolayer(const DoublyWeightedGraph& g, VertexId x, VertexId y);

// Same formula with the sums over Γ(x^i) = Γ_A(x^i) ∪ Γ_C(x^i).
double forman_multiplex(const MultiplexGraph& g, EdgeRef edge);
double forman_multiplex(const MultiplexGraph& g, StateVertex a, StateVertex b);

// Layers of Γ^{i,j}_C(x) split by their W value relative to the edge's two
// endpoints. `low` is the endpoint layer with the smaller W (ties: smaller
// layer number); a layer whose W equals both the min and the max is in both
// `minus` and `plus`.
struct GammaPartition {
  LayerId low;
  LayerId high;
  std::vector<LayerId> all;
  std::vector<LayerId> minus;
  std::vector<LayerId> plus;
};

// Throws NotAnInterEdge when (x^a, x^b) is not an inter-layer edge of cg.
GammaPartition gamma_partition(const CompileGraph& cg, VertexId x, LayerId a, LayerId b);

// Closed form of the inter-layer curvature for W(low) <= W(high), written in
// terms of W ratios only. `others` holds W(x^k) for every k in Γ^{i,j}_C(x).
double inter_curvature_closed_form(double m_low, double m_high, double w_low, double w_high,
                                   std::span<const double> others);

// Inter-layer curvature of a compile graph through the closed form. Endpoint
// order is normalized internally.
double forman_inter_compile(const CompileGraph& cg, VertexId x, LayerId a, LayerId b);

struct CurvatureBounds {
  // -(m_lo + m_hi) |Γ_C| max(1, max_{Γ_C,-} W_lo/W_l) - m_hi (W_lo/W_hi - 1).
  // With Γ_C = Γ_C,- this is the lower bound as usually printed; for other
  // partitions the printed |Γ_C,-| cardinality does not bound F (see
  // printed_lower) and the full |Γ_C| is needed.
  double lower = 0.0;
  // -|Γ_C| m_lo + m_hi (1 - (|Γ_C| + 1) W_lo/W_hi); attained iff Γ_C = Γ_C,+.
  double upper = 0.0;
  // The bound with |Γ_C,-| as the multiplier and an empty Γ_C,- contributing
  // 0. Kept for comparison only; it can exceed F when Γ_C ≠ Γ_C,-.
  double printed_lower = 0.0;
  bool gamma_equals_minus = false;
  bool gamma_equals_plus = false;
};

CurvatureBounds inter_curvature_bounds(const CompileGraph& cg, VertexId x, LayerId a, LayerId b);

struct EdgeCurvature {
  MultiplexEdge edge;
  EdgeKind kind = EdgeKind::kIntra;
  double value = 0.0;
  // Inter edges of a compile graph: the endpoint layer with the smaller W.
  std::optional<LayerId> low_layer;
};

// One entry per edge: intra edges by (layer, u, v), then inter edges by
// (vertex, a, b).
struct CurvatureReport {
  std::vector<EdgeCurvature> entries;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

CurvatureReport curvature_report(const MultiplexGraph& g);
CurvatureReport curvature_report(const CompileGraph& cg);
CurvatureReport curvature_report(const DoublyWeightedGraph& g);

// Per-edge curvature values of a monolayer graph in edge-index order.
std::vector<double> edge_curvatures(const DoublyWeightedGraph& g);

}  // namespace forman
