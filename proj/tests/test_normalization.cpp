#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "forman/curvature.hpp"
#include "forman/error.hpp"
#include "forman/normalization.hpp"
#include "oracles.hpp"

using namespace forman;

namespace {

double mean_weight(const DoublyWeightedGraph& g) {
  const auto w = g.edge_weights();
  return std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
}

}  // namespace

TEST_CASE("mean normalization") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 15, 0.4, {0.1, 1}, {0.1, 1000});
    if (g.edge_count() == 0) continue;
    const auto h = mean_normalize(g);
    CHECK(std::abs(mean_weight(h) - 1.0) <= 1e-12);
    const auto again = mean_normalize(h);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      CHECK(std::abs(again.edge_weight(i) - h.edge_weight(i)) <= 1e-12 * h.edge_weight(i));
    }
    CHECK(h.vertex_weights()[0] == g.vertex_weights()[0]);
    // Curvature only sees weight ratios, so a global rescale leaves it alone.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      CHECK(forman_monolayer(h, i) == doctest::Approx(forman_monolayer(g, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("bounded scaling") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 15, 0.4, {0.1, 1}, {0.1, 1000});
    if (g.edge_count() < 2) continue;
    const auto h = bounded_scale(g, 1.0, 10.0);
    const auto w = h.edge_weights();
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    CHECK(*lo == 1.0);
    CHECK(*hi == 10.0);
    const auto again = bounded_scale(h, 1.0, 10.0);
    for (std::size_t i = 0; i < h.edge_count(); ++i) CHECK(again.edge_weight(i) == h.edge_weight(i));
    // Order of weights is kept.
    const auto gw = g.edge_weights();
    for (std::size_t i = 1; i < h.edge_count(); ++i) {
      if (gw[i] < gw[i - 1]) CHECK(w[i] <= w[i - 1]);
    }
  }
}

TEST_CASE("bounded scaling edge cases") {
  const auto c = generate(cycle_spec(5));
  const auto flat = bounded_scale(c, 2.0, 3.0);
  for (const double x : flat.edge_weights()) CHECK(x == 2.0);
  CHECK_THROWS_AS(bounded_scale(c, 3.0, 2.0), Error);
  CHECK_THROWS_AS(bounded_scale(c, 0.0, 2.0), Error);
  CHECK_THROWS_AS(NormalizationScheme::bounded(5.0, 5.0), Error);
  const auto empty = DoublyWeightedGraph::unweighted(3, {});
  try {
    mean_normalize(empty);
    FAIL("expected NoEdges");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoEdges);
  }
  CHECK_THROWS_AS(normalize_layers({}, NormalizationScheme::mean()), Error);
}

TEST_CASE("normalize_layers treats each layer on its own") {
  std::mt19937_64 rng(3);
  const auto layers = oracle::random_layers(rng, 10, 3, {0.1, 1}, {1, 500});
  const auto out = normalize_layers(layers, NormalizationScheme::bounded(1, 10));
  REQUIRE(out.size() == 3);
  for (const auto& g : out) {
    const auto w = g.edge_weights();
    CHECK(*std::min_element(w.begin(), w.end()) == 1.0);
    CHECK(*std::max_element(w.begin(), w.end()) == 10.0);
  }
}
