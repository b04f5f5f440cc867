#include "forman/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "forman/error.hpp"

namespace forman {

NormalizationScheme NormalizationScheme::bounded(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo < hi)) {
    throw Error(ErrorCode::kInvalidArgument, "bounded scaling needs 0 < lo < hi");
  }
  return {Kind::kBounded, lo, hi};
}

DoublyWeightedGraph mean_normalize(const DoublyWeightedGraph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::kNoEdges, "mean normalization needs an edge");
  const auto w = g.edge_weights();
  const double mean = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
  if (mean == 1.0) return g;
  std::vector<double> out(w.begin(), w.end());
  for (auto& x : out) x /= mean;
  return g.with_edge_weights(out);
}

DoublyWeightedGraph bounded_scale(const DoublyWeightedGraph& g, double lo, double hi) {
  if (g.edge_count() == 0) throw Error(ErrorCode::kNoEdges, "bounded scaling needs an edge");
  NormalizationScheme::bounded(lo, hi);
  const auto w = g.edge_weights();
  const auto [min_it, max_it] = std::minmax_element(w.begin(), w.end());
  const double w_min = *min_it;
  const double w_max = *max_it;
  // Already spanning exactly [lo, hi]: the affine map is the identity.
  if (w_min == lo && w_max == hi) return g;

  std::vector<double> out(w.size(), lo);
  if (w_max > w_min) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double t = (w[i] - w_min) / (w_max - w_min);
      out[i] = lo * (1.0 - t) + hi * t;
    }
  }
  return g.with_edge_weights(out);
}

DoublyWeightedGraph normalize(const DoublyWeightedGraph& g, const NormalizationScheme& scheme) {
  if (scheme.kind == NormalizationScheme::Kind::kMean) return mean_normalize(g);
  return bounded_scale(g, scheme.lo, scheme.hi);
}

std::vector<DoublyWeightedGraph> normalize_layers(std::span<const DoublyWeightedGraph> layers,
                                                  const NormalizationScheme& scheme) {
  if (layers.empty()) throw Error(ErrorCode::kEmptyLayerList, "no layers to normalize");
  std::vector<DoublyWeightedGraph> out;
  out.reserve(layers.size());
  for (const auto& layer : layers) out.push_back(normalize(layer, scheme));
  return out;
}

}  // namespace forman
