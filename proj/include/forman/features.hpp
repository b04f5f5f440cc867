#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "forman/generators.hpp"
#include "forman/graph.hpp"

namespace forman {

inline constexpr std::size_t kCeStatCount = 12;
inline constexpr std::size_t kTradStatCount = 6;

// Fixed-order summary of a sample: mean, std, min, max, median, q1, q3, iqr,
// skewness, excess kurtosis, fraction < 0, sum.
std::array<double, kCeStatCount> distribution_summary(std::span<const double> values);

// distribution_summary of the per-vertex CE values. Throws InvalidArgument for L < 2.
std::array<double, kCeStatCount> ce_stat_features(const CompileGraph& cg);

// Unweighted skeleton metrics.
std::vector<double> local_clustering(const DoublyWeightedGraph& g);
// Brandes; unnormalized, each unordered pair counted once.
std::vector<double> betweenness_centrality(const DoublyWeightedGraph& g);

// (mean, std) of degree, clustering coefficient and betweenness, in that order.
std::array<double, kTradStatCount> traditional_features(const DoublyWeightedGraph& g);

// Injective map from refinement signatures to integer labels, shared by every
// graph of a dataset so histograms are comparable.
class WlDictionary {
 public:
  int initial_label(std::size_t degree);
  int refined_label(int own, std::vector<int> neighbor_labels);
  std::size_t size() const { return next_; }

 private:
  std::map<std::pair<int, std::vector<int>>, int> labels_;
  int next_ = 0;
};

using WlHistogram = std::map<int, std::size_t>;

// Weisfeiler–Lehman subtree refinement on the unweighted skeleton. Initial
// labels are degrees; the histogram counts labels from iterations 0..iterations.
WlHistogram wl_features(const DoublyWeightedGraph& g, std::size_t iterations,
                        WlDictionary& dictionary);

struct FeatureRow {
  std::string graph_id;
  int label = 0;
  std::array<double, kCeStatCount> ce_stats{};
  std::array<double, kTradStatCount> trad_stats{};
  WlHistogram wl;
};

struct FeatureMatrix {
  std::vector<FeatureRow> rows;

  // graphId,label,CE_stat_0..11,TRAD_stat_0..5,wl_<label>... with WL columns
  // in ascending label order and absent labels written as 0.
  std::string to_csv() const;
};

// One classification sample: the compile graph that feeds the CE statistics
// and the skeleton graph that feeds the traditional and WL features.
struct LabeledGraph {
  std::string graph_id;
  int label = 0;
  CompileGraph multiplex;
  DoublyWeightedGraph skeleton;
};

FeatureRow extract_features(const LabeledGraph& sample, std::size_t wl_iterations,
                            WlDictionary& dictionary);
// Rows in sample order; the dictionary is filled sequentially, so labels are
// deterministic.
FeatureMatrix extract_feature_matrix(std::span<const LabeledGraph> samples,
                                     std::size_t wl_iterations);

// Two layers over one skeleton: triangle-support weights 1 + |N(u) ∩ N(v)|
// and unit weights. The skeleton's edge weights are not used; vertex weights
// are kept in both layers.
CompileGraph structural_stack(const DoublyWeightedGraph& g);

struct BridgeDatasetParams {
  std::size_t count = 300;
  std::size_t n = 30;  // split into two equal communities
  double p_in = 0.3;
  std::size_t bridges = 1;
  std::size_t rewires = 40;
  WeightRange vertex_weights{0.01, 1.0};
  WeightRange edge_weights{1.0, 10.0};
};

// Label 0: two G(n/2, p_in) communities joined by `bridges` random edges.
// Label 1: a fresh label-0 graph after `rewires` degree-preserving double edge
// swaps. Labels alternate 0, 1, 0, ...; count must be even. Throws InvalidSpec.
std::vector<LabeledGraph> synthesize_classification_dataset(const BridgeDatasetParams& params,
                                                            std::uint64_t seed);

struct KarateDatasetParams {
  std::size_t per_class = 20;
  // Log-normal sigma of the per-layer weight drift, one entry per class.
  std::vector<double> class_sigmas{0.05, 0.25, 0.5};
  std::size_t layers = 3;
  WeightRange vertex_weights{0.01, 1.0};
  WeightRange edge_weights{1.0, 10.0};
};

// Each sample compiles `layers` copies of the karate club whose edge weights
// drift progressively: layer l+1 multiplies layer l's weights by
// exp(N(0, sigma_class)). The skeleton is layer 1.
std::vector<LabeledGraph> karate_perturbation_dataset(const KarateDatasetParams& params,
                                                      std::uint64_t seed);

// Degree-preserving double edge swaps; rejected swaps (self-loop or
// multi-edge) do not count toward `swaps`. Gives up after 100 * swaps tries.
DoublyWeightedGraph rewire_preserving_degrees(const DoublyWeightedGraph& g, std::size_t swaps,
                                              std::mt19937_64& rng);

}  // namespace forman
