#include "forman/features.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "forman/error.hpp"
#include "forman/evaluation.hpp"
#include "forman/format.hpp"
#include "forman/stats.hpp"

namespace forman {

std::array<double, kCeStatCount> distribution_summary(std::span<const double> values) {
  std::array<double, kCeStatCount> out{};
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double q1 = stats::quantile(values, 0.25);
  const double q3 = stats::quantile(values, 0.75);
  const auto negatives = std::count_if(values.begin(), values.end(), [](double x) { return x < 0.0; });
  double sum = 0.0;
  for (const double x : values) sum += x;
  out[0] = stats::mean(values);
  out[1] = stats::stddev(values);
  out[2] = *lo;
  out[3] = *hi;
  out[4] = stats::quantile(values, 0.5);
  out[5] = q1;
  out[6] = q3;
  out[7] = q3 - q1;
  out[8] = stats::skewness(values);
  out[9] = stats::excess_kurtosis(values);
  out[10] = static_cast<double>(negatives) / static_cast<double>(values.size());
  out[11] = sum;
  return out;
}

std::array<double, kCeStatCount> ce_stat_features(const CompileGraph& cg) {
  if (cg.layer_count() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "CE statistics need L >= 2");
  }
  std::vector<double> ce(cg.vertex_count());
  for (VertexId x = 0; x < cg.vertex_count(); ++x) ce[x] = comprehensive_evaluation(cg, x);
  return distribution_summary(ce);
}

std::vector<double> local_clustering(const DoublyWeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const auto inc = g.incident(v);
    const std::size_t k = inc.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (g.find_edge(inc[a].neighbor, inc[b].neighbor)) ++links;
      }
    }
    out[v] = 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return out;
}

std::vector<double> betweenness_centrality(const DoublyWeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> cb(n, 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<VertexId> order;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    for (auto& p : preds) p.clear();
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const auto& inc : g.incident(v)) {
        const auto w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (const auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  // Each unordered pair was visited from both ends.
  for (auto& x : cb) x /= 2.0;
  return cb;
}

std::array<double, kTradStatCount> traditional_features(const DoublyWeightedGraph& g) {
  std::vector<double> degree(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degree[v] = static_cast<double>(g.degree(v));
  const auto clustering = local_clustering(g);
  const auto betweenness = betweenness_centrality(g);
  return {stats::mean(degree),     stats::stddev(degree),     stats::mean(clustering),
          stats::stddev(clustering), stats::mean(betweenness), stats::stddev(betweenness)};
}

int WlDictionary::initial_label(std::size_t degree) {
  // Tag -1 keeps degree labels apart from refined signatures.
  return refined_label(-1, {static_cast<int>(degree)});
}

int WlDictionary::refined_label(int own, std::vector<int> neighbor_labels) {
  std::sort(neighbor_labels.begin(), neighbor_labels.end());
  auto [it, inserted] = labels_.try_emplace({own, std::move(neighbor_labels)}, next_);
  if (inserted) ++next_;
  return it->second;
}

WlHistogram wl_features(const DoublyWeightedGraph& g, std::size_t iterations,
                        WlDictionary& dictionary) {
  const std::size_t n = g.vertex_count();
  std::vector<int> labels(n);
  WlHistogram hist;
  for (VertexId v = 0; v < n; ++v) {
    labels[v] = dictionary.initial_label(g.degree(v));
    ++hist[labels[v]];
  }
  std::vector<int> next(n);
  std::vector<int> nbr;
  for (std::size_t it = 0; it < iterations; ++it) {
    for (VertexId v = 0; v < n; ++v) {
      nbr.clear();
      for (const auto& inc : g.incident(v)) nbr.push_back(labels[inc.neighbor]);
      next[v] = dictionary.refined_label(labels[v], nbr);
    }
    labels.swap(next);
    for (const int l : labels) ++hist[l];
  }
  return hist;
}

std::string FeatureMatrix::to_csv() const {
  std::set<int> wl_labels;
  for (const auto& row : rows) {
    for (const auto& [label, count] : row.wl) wl_labels.insert(label);
  }
  std::ostringstream os;
  os << "graphId,label";
  for (std::size_t i = 0; i < kCeStatCount; ++i) os << ",CE_stat_" << i;
  for (std::size_t i = 0; i < kTradStatCount; ++i) os << ",TRAD_stat_" << i;
  for (const int l : wl_labels) os << ",wl_" << l;
  os << "\n";
  for (const auto& row : rows) {
    os << row.graph_id << "," << row.label;
    for (const double x : row.ce_stats) os << "," << format_double(x);
    for (const double x : row.trad_stats) os << "," << format_double(x);
    for (const int l : wl_labels) {
      const auto it = row.wl.find(l);
      os << "," << (it == row.wl.end() ? 0 : it->second);
    }
    os << "\n";
  }
  return os.str();
}

FeatureRow extract_features(const LabeledGraph& sample, std::size_t wl_iterations,
                            WlDictionary& dictionary) {
  FeatureRow row;
  row.graph_id = sample.graph_id;
  row.label = sample.label;
  row.ce_stats = ce_stat_features(sample.multiplex);
  row.trad_stats = traditional_features(sample.skeleton);
  row.wl = wl_features(sample.skeleton, wl_iterations, dictionary);
  return row;
}

FeatureMatrix extract_feature_matrix(std::span<const LabeledGraph> samples,
                                     std::size_t wl_iterations) {
  WlDictionary dictionary;
  FeatureMatrix matrix;
  matrix.rows.reserve(samples.size());
  for (const auto& s : samples) matrix.rows.push_back(extract_features(s, wl_iterations, dictionary));
  return matrix;
}

CompileGraph structural_stack(const DoublyWeightedGraph& g) {
  std::vector<double> support(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edges()[i];
    std::size_t common = 0;
    for (const auto& inc : g.incident(u)) {
      if (inc.neighbor != v && g.find_edge(inc.neighbor, v)) ++common;
    }
    support[i] = 1.0 + static_cast<double>(common);
  }
  const std::vector<double> ones(g.edge_count(), 1.0);
  const std::vector<DoublyWeightedGraph> layers{g.with_edge_weights(support), g.with_edge_weights(ones)};
  return compile(layers);
}

DoublyWeightedGraph rewire_preserving_degrees(const DoublyWeightedGraph& g, std::size_t swaps,
                                              std::mt19937_64& rng) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<double> w(g.edge_weights().begin(), g.edge_weights().end());
  if (edges.size() < 2) return g;
  std::set<Edge> present(edges.begin(), edges.end());
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::bernoulli_distribution flip(0.5);
  std::size_t done = 0;
  for (std::size_t tries = 0; done < swaps && tries < 100 * swaps; ++tries) {
    const auto i = pick(rng);
    const auto j = pick(rng);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (flip(rng)) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b) continue;
    const auto e1 = Edge::canonical(a, d);
    const auto e2 = Edge::canonical(c, b);
    if (e1 == e2 || present.count(e1) || present.count(e2)) continue;
    present.erase(edges[i]);
    present.erase(edges[j]);
    present.insert(e1);
    present.insert(e2);
    edges[i] = e1;
    edges[j] = e2;
    ++done;
  }
  return DoublyWeightedGraph::build(g.vertex_count(), edges, g.vertex_weights(), w);
}

namespace {

DoublyWeightedGraph two_communities(const BridgeDatasetParams& p, std::mt19937_64& rng) {
  const std::size_t half = p.n / 2;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<Edge> edges;
  for (std::size_t c = 0; c < 2; ++c) {
    const auto base = static_cast<VertexId>(c * half);
    for (VertexId i = 0; i < half; ++i) {
      for (VertexId j = i + 1; j < half; ++j) {
        if (coin(rng) < p.p_in) edges.insert({base + i, base + j});
      }
    }
  }
  std::uniform_int_distribution<VertexId> side(0, static_cast<VertexId>(half - 1));
  std::size_t added = 0;
  while (added < p.bridges) {
    const Edge e{side(rng), static_cast<VertexId>(half + side(rng))};
    if (edges.insert(e).second) ++added;
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  std::vector<double> m(p.n);
  for (auto& x : m) x = p.vertex_weights.draw(rng);
  std::vector<double> w(list.size());
  for (auto& x : w) x = p.edge_weights.draw(rng);
  return DoublyWeightedGraph::build(p.n, list, m, w);
}

}  // namespace

std::vector<LabeledGraph> synthesize_classification_dataset(const BridgeDatasetParams& params,
                                                            std::uint64_t seed) {
  if (params.count % 2 != 0) throw Error(ErrorCode::kInvalidSpec, "dataset count must be even");
  if (params.n < 4 || params.n % 2 != 0) {
    throw Error(ErrorCode::kInvalidSpec, "bridge dataset needs an even n >= 4");
  }
  const std::size_t half = params.n / 2;
  if (params.bridges > half * half) {
    throw Error(ErrorCode::kInvalidSpec, "more bridges than vertex pairs across communities");
  }
  if (!(params.p_in >= 0.0 && params.p_in <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "p_in must lie in [0, 1]");
  }
  std::vector<LabeledGraph> out;
  out.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    const int label = static_cast<int>(i % 2);
    auto g = two_communities(params, rng);
    if (label == 1) g = rewire_preserving_degrees(g, params.rewires, rng);
    out.push_back({"g" + std::to_string(i), label, structural_stack(g), g});
  }
  return out;
}

std::vector<LabeledGraph> karate_perturbation_dataset(const KarateDatasetParams& params,
                                                      std::uint64_t seed) {
  if (params.class_sigmas.empty() || params.layers < 2) {
    throw Error(ErrorCode::kInvalidSpec, "karate dataset needs a class and L >= 2");
  }
  const auto edges = karate_club_edges();
  std::vector<LabeledGraph> out;
  std::size_t index = 0;
  for (std::size_t i = 0; i < params.per_class; ++i) {
    for (std::size_t c = 0; c < params.class_sigmas.size(); ++c, ++index) {
      std::mt19937_64 rng(mix_seed(seed, index));
      std::lognormal_distribution<double> drift(0.0, params.class_sigmas[c]);
      std::vector<double> m(34);
      for (auto& x : m) x = params.vertex_weights.draw(rng);
      std::vector<double> w(edges.size());
      for (auto& x : w) x = params.edge_weights.draw(rng);
      std::vector<DoublyWeightedGraph> layers;
      layers.push_back(DoublyWeightedGraph::build(34, edges, m, w));
      for (std::size_t l = 1; l < params.layers; ++l) {
        for (auto& x : w) x *= drift(rng);
        layers.push_back(DoublyWeightedGraph::build(34, edges, m, w));
      }
      out.push_back({"k" + std::to_string(index), static_cast<int>(c), compile(layers),
                     layers.front()});
    }
  }
  return out;
}

}  // namespace forman
