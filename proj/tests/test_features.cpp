#include <random>
#include <sstream>

#include "doctest.h"
#include "forman/error.hpp"
#include "forman/evaluation.hpp"
#include "forman/features.hpp"
#include "oracles.hpp"

using namespace forman;

namespace {

// Betweenness by listing every shortest path explicitly.
std::vector<double> brute_betweenness(const DoublyWeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  std::vector<double> out(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] >= inf) continue;
      std::vector<std::vector<std::size_t>> paths;
      std::vector<std::size_t> cur{s};
      auto walk = [&](auto&& self, std::size_t v) -> void {
        if (v == t) {
          paths.push_back(cur);
          return;
        }
        for (const auto& inc : g.incident(static_cast<VertexId>(v))) {
          const std::size_t w = inc.neighbor;
          if (cur.size() <= d[s][t] && d[s][w] == cur.size() && d[w][t] == d[s][t] - cur.size()) {
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
          }
        }
      };
      walk(walk, s);
      for (const auto& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) out[p[i]] += 1.0 / static_cast<double>(paths.size());
      }
    }
  }
  return out;
}

DoublyWeightedGraph cycles(std::size_t count, std::size_t length) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) {
    const auto base = static_cast<VertexId>(c * length);
    for (VertexId i = 0; i < length; ++i) {
      edges.push_back(Edge::canonical(base + i, base + static_cast<VertexId>((i + 1) % length)));
    }
  }
  return DoublyWeightedGraph::unweighted(count * length, edges);
}

}  // namespace

TEST_CASE("distribution summary") {
  const std::vector<double> xs{-2, 0, 1, 5};
  const auto s = distribution_summary(xs);
  CHECK(s[0] == 1.0);
  CHECK(s[1] == doctest::Approx(std::sqrt((9.0 + 1.0 + 0.0 + 16.0) / 4.0)));
  CHECK(s[2] == -2.0);
  CHECK(s[3] == 5.0);
  CHECK(s[4] == 0.5);
  CHECK(s[5] == doctest::Approx(-0.5));
  CHECK(s[6] == doctest::Approx(2.0));
  CHECK(s[7] == doctest::Approx(2.5));
  CHECK(s[10] == 0.25);
  CHECK(s[11] == 4.0);
  const auto empty = distribution_summary({});
  for (const double x : empty) CHECK(x == 0.0);
}

TEST_CASE("clustering and betweenness") {
  const auto k4 = generate(complete_spec(4));
  for (const double c : local_clustering(k4)) CHECK(c == 1.0);
  const auto p3 = generate(path_spec(3));
  CHECK(local_clustering(p3) == std::vector<double>{0, 0, 0});
  CHECK(betweenness_centrality(p3) == std::vector<double>{0, 1, 0});
  const auto star = generate(star_spec(4));
  CHECK(betweenness_centrality(star)[0] == 6.0);

  // Triangle 0-1-2 with tail 2-3.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  const auto g = DoublyWeightedGraph::unweighted(4, edges);
  const auto cc = local_clustering(g);
  CHECK(cc[2] == doctest::Approx(1.0 / 3.0));
  CHECK(cc[0] == 1.0);
  CHECK(cc[3] == 0.0);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = oracle::random_graph(rng, 11, 0.3, {1, 1}, {1, 1});
    const auto fast = betweenness_centrality(r);
    const auto slow = brute_betweenness(r);
    for (std::size_t v = 0; v < fast.size(); ++v) CHECK(fast[v] == doctest::Approx(slow[v]));
  }
}

TEST_CASE("traditional features order") {
  const auto star = generate(star_spec(3));
  const auto t = traditional_features(star);
  CHECK(t[0] == 1.5);  // degrees 3,1,1,1
  CHECK(t[1] == doctest::Approx(std::sqrt(0.75)));
  CHECK(t[2] == 0.0);
  CHECK(t[4] == 0.75);  // center carries 3 pairs
}

TEST_CASE("features are invariant under vertex relabeling") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto layers = oracle::random_layers(rng, 12, 3, {0.01, 1}, {1, 10});
    const auto perm = oracle::random_permutation(rng, 12);
    std::vector<DoublyWeightedGraph> moved;
    for (const auto& g : layers) moved.push_back(oracle::relabel(g, perm));
    const auto a = ce_stat_features(compile(layers));
    const auto b = ce_stat_features(compile(moved));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
    const auto ta = traditional_features(layers[0]);
    const auto tb = traditional_features(moved[0]);
    for (std::size_t i = 0; i < ta.size(); ++i) CHECK(ta[i] == doctest::Approx(tb[i]).epsilon(1e-10));

    WlDictionary dict;
    CHECK(wl_features(layers[1], 3, dict) == wl_features(moved[1], 3, dict));
  }
}

TEST_CASE("ce_stat_features needs two layers") {
  const std::vector<DoublyWeightedGraph> one{generate(complete_spec(4))};
  CHECK_THROWS_AS(ce_stat_features(compile(one)), Error);
}

TEST_CASE("WL refinement") {
  SUBCASE("iteration 0 counts degrees") {
    WlDictionary dict;
    const auto h = wl_features(generate(star_spec(3)), 0, dict);
    REQUIRE(h.size() == 2);
    CHECK(dict.size() == 2);
    CHECK(h.at(dict.initial_label(3)) == 1);
    CHECK(h.at(dict.initial_label(1)) == 3);
  }
  SUBCASE("six-cycle and two triangles are indistinguishable") {
    const auto c6 = cycles(1, 6);
    const auto two_c3 = cycles(2, 3);
    for (std::size_t it = 0; it <= 5; ++it) {
      WlDictionary dict;
      CHECK(wl_features(c6, it, dict) == wl_features(two_c3, it, dict));
    }
  }
  SUBCASE("path and star differ after one round") {
    WlDictionary dict;
    const auto p = wl_features(generate(path_spec(4)), 1, dict);
    const auto s = wl_features(generate(star_spec(3)), 1, dict);
    CHECK(p != s);
  }
  SUBCASE("refined labels never reuse degree labels") {
    WlDictionary dict;
    const int d0 = dict.initial_label(0);
    const int r = dict.refined_label(d0, {});
    CHECK(r != d0);
    CHECK(dict.refined_label(d0, {}) == r);
    CHECK(dict.refined_label(3, {2, 1}) == dict.refined_label(3, {1, 2}));
  }
}

TEST_CASE("curvature features separate weight-perturbed six-cycle and two triangles") {
  const auto c6 = cycles(1, 6);
  const auto two_c3 = cycles(2, 3);
  // Weight the i-th listed edge 1 + i in a second layer.
  const auto weighted = [](const DoublyWeightedGraph& g, std::vector<Edge> order) {
    std::vector<double> w(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) w[g.edge_index(order[i].u, order[i].v)] = 1.0 + double(i);
    return g.with_edge_weights(w);
  };
  const std::vector<DoublyWeightedGraph> a{c6, weighted(c6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})};
  const std::vector<DoublyWeightedGraph> b{two_c3, weighted(two_c3, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})};
  const auto fa = ce_stat_features(compile(a));
  const auto fb = ce_stat_features(compile(b));
  CHECK(fa != fb);
  WlDictionary dict;
  CHECK(wl_features(a[1], 3, dict) == wl_features(b[1], 3, dict));
}

TEST_CASE("feature matrix CSV") {
  FeatureMatrix m;
  FeatureRow r1;
  r1.graph_id = "g0";
  r1.label = 1;
  r1.ce_stats[0] = 0.5;
  r1.wl = {{3, 2}, {0, 4}};
  FeatureRow r2;
  r2.graph_id = "g1";
  r2.wl = {{1, 7}};
  m.rows = {r1, r2};
  const auto csv = m.to_csv();
  std::istringstream in(csv);
  std::string header, line1, line2;
  std::getline(in, header);
  std::getline(in, line1);
  std::getline(in, line2);
  CHECK(header.rfind("graphId,label,CE_stat_0,", 0) == 0);
  CHECK(header.find("CE_stat_11,TRAD_stat_0") != std::string::npos);
  CHECK(header.substr(header.find("TRAD_stat_5")) == "TRAD_stat_5,wl_0,wl_1,wl_3");
  CHECK(line1 == "g0,1,0.5,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,4,0,2");
  CHECK(line2.substr(line2.size() - 6) == ",0,7,0");
}

TEST_CASE("structural stack") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  const std::vector<double> m{0.5, 1, 1, 2};
  const std::vector<double> w{3, 4, 5, 6};
  const auto g = DoublyWeightedGraph::build(4, edges, m, w);
  const auto cg = structural_stack(g);
  REQUIRE(cg.layer_count() == 2);
  const auto support = cg.layers()[0];
  CHECK(support.edge_weight(0, 1) == 2.0);
  CHECK(support.edge_weight(2, 3) == 1.0);
  CHECK(cg.layers()[1].edge_weight(0, 2) == 1.0);
  CHECK(cg.layers()[1].vertex_weight(3) == 2.0);
}

TEST_CASE("degree-preserving rewiring") {
  std::mt19937_64 rng(8);
  const auto g = generate(erdos_renyi_spec(30, 0.2, 8));
  const auto r = rewire_preserving_degrees(g, 40, rng);
  CHECK(r.edge_count() == g.edge_count());
  for (VertexId v = 0; v < 30; ++v) CHECK(r.degree(v) == g.degree(v));
  CHECK_FALSE(std::equal(r.edges().begin(), r.edges().end(), g.edges().begin()));
}

TEST_CASE("bridge dataset") {
  BridgeDatasetParams p;
  p.count = 300;
  const auto data = synthesize_classification_dataset(p, 42);
  REQUIRE(data.size() == 300);
  const auto ones = std::count_if(data.begin(), data.end(), [](const auto& s) { return s.label == 1; });
  CHECK(ones == 150);
  CHECK(data[0].skeleton.vertex_count() == 30);
  CHECK(data[1].multiplex.layer_count() == 2);

  p.count = 20;
  const auto a = extract_feature_matrix(synthesize_classification_dataset(p, 42), 3).to_csv();
  const auto b = extract_feature_matrix(synthesize_classification_dataset(p, 42), 3).to_csv();
  const auto c = extract_feature_matrix(synthesize_classification_dataset(p, 43), 3).to_csv();
  CHECK(a == b);
  CHECK(a != c);

  p.count = 7;
  CHECK_THROWS_AS(synthesize_classification_dataset(p, 1), Error);
  p.count = 10;
  p.n = 5;
  CHECK_THROWS_AS(synthesize_classification_dataset(p, 1), Error);
}

TEST_CASE("karate perturbation dataset") {
  KarateDatasetParams p;
  p.per_class = 4;
  const auto data = karate_perturbation_dataset(p, 3);
  REQUIRE(data.size() == 12);
  CHECK(data[0].label == 0);
  CHECK(data[2].label == 2);
  CHECK(data[5].multiplex.layer_count() == 3);
  CHECK(data[5].skeleton.edge_count() == 78);
  const auto rows = extract_feature_matrix(data, 2);
  CHECK(rows.rows.size() == 12);
}
