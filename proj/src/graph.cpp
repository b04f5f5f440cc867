#include "forman/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "forman/error.hpp"

namespace forman {

namespace {

bool valid_weight(double x) { return std::isfinite(x) && x > 0.0; }

std::string edge_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string state_name(StateVertex x) {
  return std::to_string(x.vertex) + "^" + std::to_string(x.layer.value);
}

}  // namespace

DoublyWeightedGraph DoublyWeightedGraph::build(std::size_t n, std::span<const Edge> edges,
                                               std::span<const double> vertex_weights,
                                               std::span<const double> edge_weights) {
  if (vertex_weights.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(n) + " vertex weights, got " +
                    std::to_string(vertex_weights.size()));
  }
  if (edge_weights.size() != edges.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(edges.size()) + " edge weights, got " +
                    std::to_string(edge_weights.size()));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!valid_weight(vertex_weights[v])) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "vertex " + std::to_string(v) + " has non-positive or non-finite weight");
    }
  }

  std::vector<std::pair<Edge, double>> sorted;
  sorted.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a >= n || b >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + edge_name(a, b) + " references a vertex >= " + std::to_string(n));
    }
    if (a == b) throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(a));
    if (!valid_weight(edge_weights[i])) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "edge " + edge_name(a, b) + " has non-positive or non-finite weight");
    }
    sorted.emplace_back(Edge::canonical(a, b), edge_weights[i]);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + edge_name(sorted[i].first.u, sorted[i].first.v));
    }
  }

  DoublyWeightedGraph g;
  g.n_ = n;
  g.m_.assign(vertex_weights.begin(), vertex_weights.end());
  g.edges_.reserve(sorted.size());
  g.w_.reserve(sorted.size());
  for (const auto& [e, w] : sorted) {
    g.edges_.push_back(e);
    g.w_.push_back(w);
  }

  // CSR incidence lists; lexicographic edge order leaves every list sorted by neighbor.
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.incidences_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto& e = g.edges_[i];
    g.incidences_[cursor[e.u]++] = {e.v, i};
    g.incidences_[cursor[e.v]++] = {e.u, i};
  }
  return g;
}

DoublyWeightedGraph DoublyWeightedGraph::unweighted(std::size_t n, std::span<const Edge> edges) {
  const std::vector<double> m(n, 1.0);
  const std::vector<double> w(edges.size(), 1.0);
  return build(n, edges, m, w);
}

std::optional<std::size_t> DoublyWeightedGraph::find_edge(VertexId a, VertexId b) const {
  const auto key = Edge::canonical(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t DoublyWeightedGraph::edge_index(VertexId a, VertexId b) const {
  if (auto idx = find_edge(a, b)) return *idx;
  throw Error(ErrorCode::kEdgeNotFound, "edge " + edge_name(a, b) + " is not in the graph");
}

DoublyWeightedGraph DoublyWeightedGraph::with_edge_weights(
    std::span<const double> edge_weights) const {
  return build(n_, edges_, m_, edge_weights);
}

DoublyWeightedGraph DoublyWeightedGraph::with_vertex_weights(
    std::span<const double> vertex_weights) const {
  return build(n_, edges_, vertex_weights, w_);
}

MultiplexGraph MultiplexGraph::build(std::size_t n, std::size_t layers,
                                     std::vector<double> vertex_weights,
                                     std::vector<IntraEdge> intra,
                                     std::vector<InterEdge> inter) {
  if (layers == 0) throw Error(ErrorCode::kEmptyLayerList, "multiplex graph needs L >= 1");
  if (vertex_weights.size() != n * layers) {
    throw Error(ErrorCode::kLengthMismatch, "expected n*L = " + std::to_string(n * layers) +
                                                " vertex weights, got " +
                                                std::to_string(vertex_weights.size()));
  }
  MultiplexGraph g;
  g.n_ = n;
  g.layers_ = layers;
  for (std::size_t s = 0; s < vertex_weights.size(); ++s) {
    if (!valid_weight(vertex_weights[s])) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "state vertex " + state_name(g.state_vertex(s)) +
                      " has non-positive or non-finite weight");
    }
  }
  g.m_ = std::move(vertex_weights);

  for (auto& e : intra) {
    if (e.layer.value < 1 || e.layer.value > layers) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "intra edge " + edge_name(e.u, e.v) + " names layer " +
                      std::to_string(e.layer.value));
    }
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "intra edge " + edge_name(e.u, e.v) + " references a vertex >= " +
                      std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(e.u) +
                                            " in layer " + std::to_string(e.layer.value));
    }
    if (!valid_weight(e.weight)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "intra edge " + edge_name(e.u, e.v) + " in layer " +
                      std::to_string(e.layer.value) + " has non-positive or non-finite weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  for (auto& e : inter) {
    if (e.vertex >= n || e.a.value < 1 || e.a.value > layers || e.b.value < 1 ||
        e.b.value > layers) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "inter edge at vertex " + std::to_string(e.vertex) + " is out of range");
    }
    if (e.a == e.b) {
      throw Error(ErrorCode::kSelfLoop, "inter edge at vertex " + std::to_string(e.vertex) +
                                            " joins layer " + std::to_string(e.a.value) +
                                            " to itself");
    }
    if (!valid_weight(e.weight)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "inter edge at vertex " + std::to_string(e.vertex) + " between layers " +
                      std::to_string(e.a.value) + " and " + std::to_string(e.b.value) +
                      " has non-positive or non-finite weight");
    }
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  const auto intra_key = [](const IntraEdge& e) { return std::tuple(e.layer, e.u, e.v); };
  const auto inter_key = [](const InterEdge& e) { return std::tuple(e.vertex, e.a, e.b); };
  std::sort(intra.begin(), intra.end(),
            [&](const auto& x, const auto& y) { return intra_key(x) < intra_key(y); });
  std::sort(inter.begin(), inter.end(),
            [&](const auto& x, const auto& y) { return inter_key(x) < inter_key(y); });
  for (std::size_t i = 1; i < intra.size(); ++i) {
    if (intra_key(intra[i]) == intra_key(intra[i - 1])) {
      throw Error(ErrorCode::kDuplicateEdge, "duplicate intra edge " +
                                                 edge_name(intra[i].u, intra[i].v) +
                                                 " in layer " +
                                                 std::to_string(intra[i].layer.value));
    }
  }
  for (std::size_t i = 1; i < inter.size(); ++i) {
    if (inter_key(inter[i]) == inter_key(inter[i - 1])) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate inter edge at vertex " + std::to_string(inter[i].vertex));
    }
  }
  g.intra_ = std::move(intra);
  g.inter_ = std::move(inter);

  const std::size_t states = n * layers;
  std::vector<std::vector<StateNeighbor>> intra_adj(states), inter_adj(states);
  for (std::size_t i = 0; i < g.intra_.size(); ++i) {
    const auto& e = g.intra_[i];
    const auto su = g.state_index({e.u, e.layer});
    const auto sv = g.state_index({e.v, e.layer});
    const EdgeRef ref{EdgeKind::kIntra, i};
    intra_adj[su].push_back({sv, e.weight, ref});
    intra_adj[sv].push_back({su, e.weight, ref});
  }
  for (std::size_t i = 0; i < g.inter_.size(); ++i) {
    const auto& e = g.inter_[i];
    const auto sa = g.state_index({e.vertex, e.a});
    const auto sb = g.state_index({e.vertex, e.b});
    const EdgeRef ref{EdgeKind::kInter, i};
    inter_adj[sa].push_back({sb, e.weight, ref});
    inter_adj[sb].push_back({sa, e.weight, ref});
  }
  const auto by_state = [](const StateNeighbor& x, const StateNeighbor& y) {
    return x.state < y.state;
  };
  g.offsets_.assign(states + 1, 0);
  g.intra_end_.assign(states, 0);
  for (std::size_t s = 0; s < states; ++s) {
    std::sort(intra_adj[s].begin(), intra_adj[s].end(), by_state);
    std::sort(inter_adj[s].begin(), inter_adj[s].end(), by_state);
    g.adjacency_.insert(g.adjacency_.end(), intra_adj[s].begin(), intra_adj[s].end());
    g.intra_end_[s] = g.adjacency_.size();
    g.adjacency_.insert(g.adjacency_.end(), inter_adj[s].begin(), inter_adj[s].end());
    g.offsets_[s + 1] = g.adjacency_.size();
  }
  return g;
}

MultiplexGraph MultiplexGraph::from_layer(const DoublyWeightedGraph& g) {
  std::vector<IntraEdge> intra;
  intra.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto e = g.edges()[i];
    intra.push_back({LayerId{1}, e.u, e.v, g.edge_weight(i)});
  }
  const auto m = g.vertex_weights();
  return build(g.vertex_count(), 1, std::vector<double>(m.begin(), m.end()), std::move(intra),
               {});
}

MultiplexEdge MultiplexGraph::endpoints(EdgeRef e) const {
  if (e.kind == EdgeKind::kIntra) {
    const auto& x = intra_[e.index];
    return {{x.u, x.layer}, {x.v, x.layer}};
  }
  const auto& x = inter_[e.index];
  return {{x.vertex, x.a}, {x.vertex, x.b}};
}

std::optional<EdgeRef> MultiplexGraph::find_edge(StateVertex a, StateVertex b) const {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  if (a.layer == b.layer) {
    IntraEdge key{a.layer, std::min(a.vertex, b.vertex), std::max(a.vertex, b.vertex), 0.0};
    const auto it = std::lower_bound(
        intra_.begin(), intra_.end(), key, [](const IntraEdge& x, const IntraEdge& y) {
          return std::tuple(x.layer, x.u, x.v) < std::tuple(y.layer, y.u, y.v);
        });
    if (it != intra_.end() && it->layer == key.layer && it->u == key.u && it->v == key.v) {
      return EdgeRef{EdgeKind::kIntra, static_cast<std::size_t>(it - intra_.begin())};
    }
    return std::nullopt;
  }
  if (a.vertex == b.vertex) {
    InterEdge key{a.vertex, std::min(a.layer, b.layer), std::max(a.layer, b.layer), 0.0};
    const auto it = std::lower_bound(
        inter_.begin(), inter_.end(), key, [](const InterEdge& x, const InterEdge& y) {
          return std::tuple(x.vertex, x.a, x.b) < std::tuple(y.vertex, y.a, y.b);
        });
    if (it != inter_.end() && it->vertex == key.vertex && it->a == key.a && it->b == key.b) {
      return EdgeRef{EdgeKind::kInter, static_cast<std::size_t>(it - inter_.begin())};
    }
  }
  return std::nullopt;
}

EdgeRef MultiplexGraph::edge_ref(StateVertex a, StateVertex b) const {
  if (auto ref = find_edge(a, b)) return *ref;
  throw Error(ErrorCode::kEdgeNotFound,
              "edge (" + state_name(a) + "," + state_name(b) + ") is not in the graph");
}

double big_w(const MultiplexGraph& g, StateVertex x) {
  if (!g.contains(x)) {
    throw Error(ErrorCode::kIndexOutOfRange, "state vertex " + state_name(x) + " is out of range");
  }
  const auto nbrs = g.intra_neighbors(x);
  if (nbrs.empty()) return 0.0;
  double inv = 0.0;
  for (const auto& nb : nbrs) inv += 1.0 / std::sqrt(nb.weight);
  return 1.0 / inv;
}

double weighted_degree(const MultiplexGraph& g, StateVertex x) {
  if (!g.contains(x)) {
    throw Error(ErrorCode::kIndexOutOfRange, "state vertex " + state_name(x) + " is out of range");
  }
  double total = 0.0;
  for (const auto& nb : g.neighbors(x)) total += nb.weight;
  return total;
}

std::vector<VertexId> CompileGraph::degenerate_vertices() const {
  std::vector<VertexId> out;
  for (VertexId x = 0; x < vertex_count(); ++x) {
    for (std::size_t i = 0; i < layer_count(); ++i) {
      if (degenerate({x, LayerId::from_index(i)})) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

CompileGraph CompileGraph::with_scaled_vertex_weights(double factor) const {
  std::vector<DoublyWeightedGraph> scaled;
  scaled.reserve(layers_.size());
  for (const auto& layer : layers_) {
    std::vector<double> m(layer.vertex_weights().begin(), layer.vertex_weights().end());
    for (auto& x : m) x *= factor;
    scaled.push_back(layer.with_vertex_weights(m));
  }
  return compile(scaled);
}

CompileGraph compile(std::span<const DoublyWeightedGraph> layers) {
  if (layers.empty()) throw Error(ErrorCode::kEmptyLayerList, "compile needs at least one layer");
  const std::size_t n = layers.front().vertex_count();
  const std::size_t count = layers.size();
  for (std::size_t l = 1; l < count; ++l) {
    if (layers[l].vertex_count() != n) {
      throw Error(ErrorCode::kMismatchedVertexCounts,
                  "layer " + std::to_string(l + 1) + " has " +
                      std::to_string(layers[l].vertex_count()) + " vertices, layer 1 has " +
                      std::to_string(n));
    }
  }

  std::vector<double> m;
  m.reserve(n * count);
  std::vector<IntraEdge> intra;
  for (std::size_t l = 0; l < count; ++l) {
    const auto& layer = layers[l];
    m.insert(m.end(), layer.vertex_weights().begin(), layer.vertex_weights().end());
    for (std::size_t i = 0; i < layer.edge_count(); ++i) {
      const auto e = layer.edges()[i];
      intra.push_back({LayerId::from_index(l), e.u, e.v, layer.edge_weight(i)});
    }
  }

  // W depends only on intra-layer structure, so it can be read off the layers directly.
  std::vector<double> w_values(n * count, 0.0);
  for (std::size_t l = 0; l < count; ++l) {
    const auto& layer = layers[l];
    for (VertexId x = 0; x < n; ++x) {
      const auto inc = layer.incident(x);
      if (inc.empty()) continue;
      double inv = 0.0;
      for (const auto& e : inc) inv += 1.0 / std::sqrt(layer.edge_weight(e.edge));
      w_values[l * n + x] = 1.0 / inv;
    }
  }

  std::vector<InterEdge> inter;
  for (VertexId x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < count; ++i) {
      const double wi = w_values[i * n + x];
      if (wi == 0.0) continue;
      for (std::size_t j = i + 1; j < count; ++j) {
        const double wj = w_values[j * n + x];
        if (wj == 0.0) continue;
        inter.push_back({x, LayerId::from_index(i), LayerId::from_index(j),
                         std::min(wi * wi, wj * wj)});
      }
    }
  }

  CompileGraph cg;
  cg.graph_ = MultiplexGraph::build(n, count, std::move(m), std::move(intra), std::move(inter));
  cg.layers_.assign(layers.begin(), layers.end());
  cg.w_values_ = std::move(w_values);
  return cg;
}

}  // namespace forman
