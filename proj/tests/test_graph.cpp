#include <random>

#include "doctest.h"
#include "forman/error.hpp"
#include "forman/graph.hpp"
#include "oracles.hpp"

using namespace forman;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected forman::Error");
  return ErrorCode::kUsageError;
}

DoublyWeightedGraph path3(double w01, double w12) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const std::vector<double> m{1, 1, 1};
  const std::vector<double> w{w01, w12};
  return DoublyWeightedGraph::build(3, edges, m, w);
}

}  // namespace

TEST_CASE("build canonicalizes and sorts edges, keeping weights attached") {
  const std::vector<Edge> edges{{2, 1}, {0, 2}, {1, 0}};
  const std::vector<double> m{1, 2, 3};
  const std::vector<double> w{5, 6, 7};
  const auto g = DoublyWeightedGraph::build(3, edges, m, w);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 2});
  CHECK(g.edges()[2] == Edge{1, 2});
  CHECK(g.edge_weight(0, 1) == 7);
  CHECK(g.edge_weight(2, 0) == 6);
  CHECK(g.edge_weight(1, 2) == 5);
  CHECK(g.degree(0) == 2);
  CHECK(g.incident(2)[0].neighbor == 0);
  CHECK(g.incident(2)[1].neighbor == 1);
}

TEST_CASE("build rejects invalid input") {
  const std::vector<double> m2{1, 1};
  const std::vector<double> one{1};
  const std::vector<Edge> self{{1, 1}};
  const std::vector<Edge> far{{0, 5}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<double> two{1, 1};
  const std::vector<Edge> e01{{0, 1}};
  const std::vector<double> zero{0.0};
  const std::vector<double> neg{-2.0};
  const std::vector<double> nan{std::nan("")};

  CHECK(code_of([&] { DoublyWeightedGraph::build(2, self, m2, one); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, far, m2, one); }) == ErrorCode::kIndexOutOfRange);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, dup, m2, two); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, e01, m2, zero); }) == ErrorCode::kNonPositiveWeight);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, e01, m2, neg); }) == ErrorCode::kNonPositiveWeight);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, e01, m2, nan); }) == ErrorCode::kNonPositiveWeight);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, e01, one, one); }) == ErrorCode::kLengthMismatch);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, e01, m2, two); }) == ErrorCode::kLengthMismatch);
  CHECK(code_of([&] { DoublyWeightedGraph::build(2, e01, std::vector<double>{1, 0}, one); }) ==
        ErrorCode::kNonPositiveWeight);
}

TEST_CASE("edge lookup") {
  const auto g = path3(2, 3);
  CHECK(g.find_edge(1, 0) == 0u);
  CHECK_FALSE(g.find_edge(0, 2));
  CHECK(code_of([&] { g.edge_index(0, 2); }) == ErrorCode::kEdgeNotFound);
}

TEST_CASE("W of a state vertex") {
  // Path 0-1-2 in layer 1 with weights 4 and 9: W(1) = 1/(1/2 + 1/3) = 6/5.
  const std::vector<DoublyWeightedGraph> layers{path3(4, 9)};
  const auto cg = compile(layers);
  CHECK(big_w(cg.graph(), {1, LayerId{1}}) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(big_w(cg.graph(), {0, LayerId{1}}) == doctest::Approx(2.0));
  CHECK(cg.w_value({2, LayerId{1}}) == doctest::Approx(3.0));

  SUBCASE("isolated copy has W = 0 and is degenerate") {
    const std::vector<Edge> edges{{0, 1}};
    const auto g = DoublyWeightedGraph::unweighted(3, edges);
    const std::vector<DoublyWeightedGraph> two{g, path3(1, 1)};
    const auto c = compile(two);
    CHECK(c.w_value({2, LayerId{1}}) == 0.0);
    CHECK(c.degenerate({2, LayerId{1}}));
    CHECK(c.degenerate_vertices() == std::vector<VertexId>{2});
    CHECK_FALSE(c.graph().find_edge({2, LayerId{1}}, {2, LayerId{2}}));
    CHECK(c.graph().find_edge({1, LayerId{1}}, {1, LayerId{2}}));
  }
}

TEST_CASE("W grows when an incident weight grows") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(rng, 8, 0.5, {0.1, 2}, {0.5, 20});
    if (g.edge_count() == 0) continue;
    const std::vector<DoublyWeightedGraph> before{g};
    std::vector<double> w(g.edge_weights().begin(), g.edge_weights().end());
    w[0] *= 1.5;
    const std::vector<DoublyWeightedGraph> after{g.with_edge_weights(w)};
    const auto a = compile(before), b = compile(after);
    const auto e = g.edges()[0];
    CHECK(b.w_value({e.u, LayerId{1}}) > a.w_value({e.u, LayerId{1}}));
    CHECK(b.w_value({e.v, LayerId{1}}) > a.w_value({e.v, LayerId{1}}));
  }
}

TEST_CASE("compile: inter-layer weight is min of W squared on every pair") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto layers = oracle::random_layers(rng, 9, 2 + trial % 4, {0.1, 1}, {1, 10});
    const auto cg = compile(layers);
    const auto ref = oracle::flatten_compile(layers);
    CHECK(cg.graph().inter_edges().size() == ref.inter.size());
    for (const auto& e : cg.graph().inter_edges()) {
      const auto it = ref.inter.find({e.vertex, e.a.index(), e.b.index()});
      REQUIRE(it != ref.inter.end());
      CHECK(oracle::rel_err(e.weight, static_cast<double>(ref.edges[it->second].w)) < 1e-14);
    }
  }
}

TEST_CASE("compile rejects mismatched or empty stacks") {
  const std::vector<Edge> edges{{0, 1}};
  const std::vector<DoublyWeightedGraph> bad{DoublyWeightedGraph::unweighted(2, edges),
                                             DoublyWeightedGraph::unweighted(3, edges)};
  CHECK(code_of([&] { compile(bad); }) == ErrorCode::kMismatchedVertexCounts);
  CHECK(code_of([&] { compile(std::span<const DoublyWeightedGraph>{}); }) ==
        ErrorCode::kEmptyLayerList);
}

TEST_CASE("multiplex build validates and indexes states") {
  const std::vector<double> m(6, 1.0);
  auto g = MultiplexGraph::build(3, 2, m, {{LayerId{2}, 2, 0, 1.5}, {LayerId{1}, 0, 1, 1}},
                                 {{1, LayerId{2}, LayerId{1}, 4}});
  CHECK(g.state_count() == 6);
  CHECK(g.state_index({2, LayerId{2}}) == 5);
  CHECK(g.state_vertex(4) == StateVertex{1, LayerId{2}});
  CHECK(g.intra_edges()[0].layer == LayerId{1});
  CHECK(g.intra_edges()[1].u == 0);
  CHECK(g.inter_edges()[0].a == LayerId{1});
  const auto ref = g.edge_ref({1, LayerId{2}}, {1, LayerId{1}});
  CHECK(ref.kind == EdgeKind::kInter);
  CHECK(g.edge_weight(ref) == 4);
  CHECK(g.neighbors({1, LayerId{1}}).size() == 2);
  CHECK(g.intra_neighbors({1, LayerId{1}}).size() == 1);
  CHECK(g.inter_neighbors({1, LayerId{1}}).size() == 1);
  CHECK(weighted_degree(g, {1, LayerId{1}}) == 5);
  CHECK_FALSE(g.find_edge({0, LayerId{1}}, {1, LayerId{2}}));

  CHECK(code_of([&] { MultiplexGraph::build(3, 2, m, {{LayerId{3}, 0, 1, 1}}, {}); }) ==
        ErrorCode::kIndexOutOfRange);
  CHECK(code_of([&] { MultiplexGraph::build(3, 2, m, {}, {{0, LayerId{1}, LayerId{1}, 1}}); }) ==
        ErrorCode::kSelfLoop);
  CHECK(code_of([&] {
          MultiplexGraph::build(3, 2, m, {}, {{0, LayerId{1}, LayerId{2}, 1}, {0, LayerId{2}, LayerId{1}, 2}});
        }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([&] { MultiplexGraph::build(3, 2, m, {{LayerId{1}, 0, 1, -1}}, {}); }) ==
        ErrorCode::kNonPositiveWeight);
  CHECK(code_of([&] { MultiplexGraph::build(3, 2, {1, 1}, {}, {}); }) == ErrorCode::kLengthMismatch);
}

TEST_CASE("scaled vertex weights keep structure") {
  std::mt19937_64 rng(8);
  const auto layers = oracle::random_layers(rng, 6, 3, {0.1, 1}, {1, 10});
  const auto cg = compile(layers);
  const auto scaled = cg.with_scaled_vertex_weights(2.5);
  CHECK(scaled.graph().inter_edges().size() == cg.graph().inter_edges().size());
  CHECK(scaled.graph().vertex_weight({3, LayerId{2}}) ==
        doctest::Approx(2.5 * cg.graph().vertex_weight({3, LayerId{2}})));
}
