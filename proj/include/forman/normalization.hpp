#pragma once

#include <span>
#include <vector>

#include "forman/graph.hpp"

namespace forman {

// Edge-weight rescaling applied to each layer on its own. Vertex weights are
// never touched.
struct NormalizationScheme {
  enum class Kind { kMean, kBounded };
  Kind kind = Kind::kBounded;
  double lo = 1.0;
  double hi = 10.0;

  static NormalizationScheme mean() { return {Kind::kMean, 1.0, 10.0}; }
  // Throws InvalidArgument unless 0 < lo < hi.
  static NormalizationScheme bounded(double lo = 1.0, double hi = 10.0);
};

// w -> w / mean(w). Throws NoEdges.
DoublyWeightedGraph mean_normalize(const DoublyWeightedGraph& g);

// Affine map of [min w, max w] onto [lo, hi]; all-equal weights map to lo.
// Throws NoEdges, InvalidArgument.
DoublyWeightedGraph bounded_scale(const DoublyWeightedGraph& g, double lo, double hi);

DoublyWeightedGraph normalize(const DoublyWeightedGraph& g, const NormalizationScheme& scheme);

// Throws EmptyLayerList; errors from individual layers propagate.
std::vector<DoublyWeightedGraph> normalize_layers(std::span<const DoublyWeightedGraph> layers,
                                                  const NormalizationScheme& scheme);

}  // namespace forman
