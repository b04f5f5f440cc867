#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace forman {

using VertexId = std::uint32_t;

// Layers are numbered 1..L, matching how reports and files name them.
struct LayerId {
  std::uint32_t value = 1;

  constexpr std::size_t index() const { return value - 1; }
  static constexpr LayerId from_index(std::size_t i) {
    return LayerId{static_cast<std::uint32_t>(i + 1)};
  }
  friend constexpr auto operator<=>(LayerId, LayerId) = default;
};

// The pair x^i: vertex x in layer i.
struct StateVertex {
  VertexId vertex = 0;
  LayerId layer;

  friend constexpr auto operator<=>(const StateVertex&, const StateVertex&) = default;
};

// Undirected edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static constexpr Edge canonical(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  constexpr bool touches(VertexId x) const { return u == x || v == x; }
  constexpr VertexId other(VertexId x) const { return x == u ? v : u; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  std::size_t edge;  // index into edges()
};

// Simple undirected graph with positive vertex weights m and edge weights w.
// Edges are kept sorted, so edge indices are stable for a given edge set.
class DoublyWeightedGraph {
 public:
  DoublyWeightedGraph() = default;

  // Validates and canonicalizes. Throws forman::Error with NonPositiveWeight,
  // DuplicateEdge, SelfLoop, IndexOutOfRange or LengthMismatch.
  static DoublyWeightedGraph build(std::size_t n, std::span<const Edge> edges,
                                   std::span<const double> vertex_weights,
                                   std::span<const double> edge_weights);

  // Unit vertex and edge weights.
  static DoublyWeightedGraph unweighted(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const double> vertex_weights() const { return m_; }
  std::span<const double> edge_weights() const { return w_; }

  double vertex_weight(VertexId v) const { return m_[v]; }
  double edge_weight(std::size_t edge) const { return w_[edge]; }

  std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
  // Throws EdgeNotFound.
  std::size_t edge_index(VertexId a, VertexId b) const;
  double edge_weight(VertexId a, VertexId b) const { return w_[edge_index(a, b)]; }

  std::span<const Incidence> incident(VertexId v) const {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  DoublyWeightedGraph with_edge_weights(std::span<const double> edge_weights) const;
  DoublyWeightedGraph with_vertex_weights(std::span<const double> vertex_weights) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> m_;
  std::vector<double> w_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

enum class EdgeKind { kIntra, kInter };

struct IntraEdge {
  LayerId layer;
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;
};

// Same vertex in two distinct layers; stored with a < b.
struct InterEdge {
  VertexId vertex = 0;
  LayerId a;
  LayerId b;
  double weight = 1.0;
};

struct EdgeRef {
  EdgeKind kind = EdgeKind::kIntra;
  std::size_t index = 0;

  friend constexpr bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// Endpoints of a multiplex edge in canonical order (first < second).
struct MultiplexEdge {
  StateVertex first;
  StateVertex second;

  EdgeKind kind() const {
    return first.layer == second.layer ? EdgeKind::kIntra : EdgeKind::kInter;
  }
  friend constexpr auto operator<=>(const MultiplexEdge&, const MultiplexEdge&) = default;
};

struct StateNeighbor {
  std::size_t state;  // state index of the neighbor
  double weight;
  EdgeRef edge;
};

// Multiplex graph over n state vertices and L layers. State vertex x^i has
// state index (i-1)*n + x. Intra edges are sorted by (layer, u, v), inter
// edges by (vertex, a, b).
class MultiplexGraph {
 public:
  MultiplexGraph() = default;

  // vertex_weights is layer-major with n*L entries.
  static MultiplexGraph build(std::size_t n, std::size_t layers,
                              std::vector<double> vertex_weights,
                              std::vector<IntraEdge> intra, std::vector<InterEdge> inter);

  // L = 1 view of a single graph.
  static MultiplexGraph from_layer(const DoublyWeightedGraph& g);

  std::size_t vertex_count() const { return n_; }
  std::size_t layer_count() const { return layers_; }
  std::size_t state_count() const { return n_ * layers_; }

  std::size_t state_index(StateVertex x) const { return x.layer.index() * n_ + x.vertex; }
  StateVertex state_vertex(std::size_t index) const {
    return {static_cast<VertexId>(index % n_), LayerId::from_index(index / n_)};
  }
  bool contains(StateVertex x) const {
    return x.vertex < n_ && x.layer.value >= 1 && x.layer.value <= layers_;
  }

  double vertex_weight(StateVertex x) const { return m_[state_index(x)]; }
  std::span<const double> vertex_weights() const { return m_; }

  std::span<const IntraEdge> intra_edges() const { return intra_; }
  std::span<const InterEdge> inter_edges() const { return inter_; }
  std::size_t edge_count() const { return intra_.size() + inter_.size(); }

  double edge_weight(EdgeRef e) const {
    return e.kind == EdgeKind::kIntra ? intra_[e.index].weight : inter_[e.index].weight;
  }
  MultiplexEdge endpoints(EdgeRef e) const;

  std::optional<EdgeRef> find_edge(StateVertex a, StateVertex b) const;
  // Throws EdgeNotFound.
  EdgeRef edge_ref(StateVertex a, StateVertex b) const;

  // Γ(x^i): intra neighbors first (ascending vertex), then inter neighbors
  // (ascending layer).
  std::span<const StateNeighbor> neighbors(StateVertex x) const {
    const auto s = state_index(x);
    return {adjacency_.data() + offsets_[s], adjacency_.data() + offsets_[s + 1]};
  }
  std::span<const StateNeighbor> intra_neighbors(StateVertex x) const {
    const auto s = state_index(x);
    return {adjacency_.data() + offsets_[s], adjacency_.data() + intra_end_[s]};
  }
  std::span<const StateNeighbor> inter_neighbors(StateVertex x) const {
    const auto s = state_index(x);
    return {adjacency_.data() + intra_end_[s], adjacency_.data() + offsets_[s + 1]};
  }

 private:
  std::size_t n_ = 0;
  std::size_t layers_ = 0;
  std::vector<double> m_;
  std::vector<IntraEdge> intra_;
  std::vector<InterEdge> inter_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> intra_end_;
  std::vector<StateNeighbor> adjacency_;
};

// W(x^i) = (sum over intra neighbors y of 1/sqrt(w(x^i, y^i)))^-1, or 0 when
// x^i has no intra-layer neighbor.
double big_w(const MultiplexGraph& g, StateVertex x);

// Sum of w over Γ(x^i) = Γ_A(x^i) ∪ Γ_C(x^i).
double weighted_degree(const MultiplexGraph& g, StateVertex x);

// Multiplex graph stacked from doubly-weighted layers. Inter-layer edges join
// every pair of copies of a vertex with weight min{W²(x^i), W²(x^j)}; copies
// with W = 0 (isolated in their layer) get no inter-layer edges and are
// reported as degenerate.
class CompileGraph {
 public:
  const MultiplexGraph& graph() const { return graph_; }
  std::span<const DoublyWeightedGraph> layers() const { return layers_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t layer_count() const { return graph_.layer_count(); }

  double w_value(StateVertex x) const { return w_values_[graph_.state_index(x)]; }
  bool degenerate(StateVertex x) const { return w_value(x) == 0.0; }
  // Vertices with at least one degenerate copy.
  std::vector<VertexId> degenerate_vertices() const;

  // Same layers with every vertex weight multiplied by factor.
  CompileGraph with_scaled_vertex_weights(double factor) const;

 private:
  friend CompileGraph compile(std::span<const DoublyWeightedGraph> layers);

  MultiplexGraph graph_;
  std::vector<DoublyWeightedGraph> layers_;
  std::vector<double> w_values_;
};

// Throws EmptyLayerList, MismatchedVertexCounts.
CompileGraph compile(std::span<const DoublyWeightedGraph> layers);

}  // namespace forman
