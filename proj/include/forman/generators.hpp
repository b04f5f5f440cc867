#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forman/graph.hpp"

namespace forman {

struct WeightRange {
  double lo = 1.0;
  double hi = 1.0;

  bool constant() const { return lo == hi; }
  double draw(std::mt19937_64& rng) const;
};

enum class GraphFamily { kComplete, kCycle, kRegularTree, kErdosRenyi, kKarateClub, kStar, kPath };

struct GeneratorSpec {
  GraphFamily family = GraphFamily::kComplete;
  std::size_t n = 0;      // complete, cycle, erdosRenyi, path; leaves for star
  std::size_t r = 3;      // regularTree degree
  std::size_t depth = 3;  // regularTree depth
  double p = 0.0;         // erdosRenyi
  // Required whenever the draw is random: Erdős–Rényi edges or a
  // non-constant weight range.
  std::optional<std::uint64_t> seed;
  WeightRange vertex_weights{0.01, 1.0};
  WeightRange edge_weights{1.0, 10.0};

  bool stochastic() const;
  std::string describe() const;
};

GeneratorSpec complete_spec(std::size_t n);
GeneratorSpec cycle_spec(std::size_t n);
GeneratorSpec regular_tree_spec(std::size_t r, std::size_t depth);
GeneratorSpec erdos_renyi_spec(std::size_t n, double p, std::uint64_t seed);
GeneratorSpec karate_spec();
GeneratorSpec star_spec(std::size_t leaves);
GeneratorSpec path_spec(std::size_t n);

// Spec helpers above default to unit weights except erdos_renyi_spec, which
// keeps the (0.01, 1) / (1, 10) experiment ranges.
GeneratorSpec with_unit_weights(GeneratorSpec spec);

// Parses "complete:5", "cycle:6", "tree:3:4", "er:25:0.2", "karate",
// "star:5", "path:4". Throws InvalidSpec.
GeneratorSpec parse_generator_spec(std::string_view text);

// Deterministic given the spec. Throws InvalidSpec.
DoublyWeightedGraph generate(const GeneratorSpec& spec);

// Zachary's karate club edge list (34 vertices, 78 edges), bundled at build time.
std::span<const Edge> karate_club_edges();
std::string_view karate_club_edgelist_text();
std::vector<Edge> parse_edgelist(std::string_view text);

// Per-layer seeds derived from `seed` override the specs' own seeds.
// Throws MismatchedVertexCounts and generator errors.
CompileGraph build_compile_experiment(std::span<const GeneratorSpec> specs, std::uint64_t seed);
std::vector<DoublyWeightedGraph> generate_layers(std::span<const GeneratorSpec> specs,
                                                 std::uint64_t seed);

// {G(25,0.2), G(25,0.5), G(25,0.8)} and three G(25,0.8) draws.
std::vector<GeneratorSpec> cg258_specs();
std::vector<GeneratorSpec> cg888_specs();

// splitmix64 step; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace forman
