#include "forman/generators.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "forman/error.hpp"

namespace forman {

namespace detail {
extern const char kKarateEdgelist[];
}  // namespace detail

double WeightRange::draw(std::mt19937_64& rng) const {
  if (constant()) return lo;
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool GeneratorSpec::stochastic() const {
  return family == GraphFamily::kErdosRenyi || !vertex_weights.constant() ||
         !edge_weights.constant();
}

std::string GeneratorSpec::describe() const {
  std::ostringstream os;
  switch (family) {
    case GraphFamily::kComplete: os << "complete:" << n; break;
    case GraphFamily::kCycle: os << "cycle:" << n; break;
    case GraphFamily::kRegularTree: os << "tree:" << r << ":" << depth; break;
    case GraphFamily::kErdosRenyi: os << "er:" << n << ":" << p; break;
    case GraphFamily::kKarateClub: os << "karate"; break;
    case GraphFamily::kStar: os << "star:" << n; break;
    case GraphFamily::kPath: os << "path:" << n; break;
  }
  return os.str();
}

namespace {

GeneratorSpec unit(GraphFamily family) {
  GeneratorSpec s;
  s.family = family;
  s.vertex_weights = {1.0, 1.0};
  s.edge_weights = {1.0, 1.0};
  return s;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidSpec, what); }

bool valid_range(const WeightRange& r) {
  return std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo > 0.0 && r.lo <= r.hi;
}

template <typename T>
T parse_number(std::string_view field, std::string_view text) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    invalid("bad number '" + std::string(field) + "' in generator spec '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

GeneratorSpec complete_spec(std::size_t n) {
  auto s = unit(GraphFamily::kComplete);
  s.n = n;
  return s;
}

GeneratorSpec cycle_spec(std::size_t n) {
  auto s = unit(GraphFamily::kCycle);
  s.n = n;
  return s;
}

GeneratorSpec regular_tree_spec(std::size_t r, std::size_t depth) {
  auto s = unit(GraphFamily::kRegularTree);
  s.r = r;
  s.depth = depth;
  return s;
}

GeneratorSpec erdos_renyi_spec(std::size_t n, double p, std::uint64_t seed) {
  GeneratorSpec s;
  s.family = GraphFamily::kErdosRenyi;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}

GeneratorSpec karate_spec() { return unit(GraphFamily::kKarateClub); }

GeneratorSpec star_spec(std::size_t leaves) {
  auto s = unit(GraphFamily::kStar);
  s.n = leaves;
  return s;
}

GeneratorSpec path_spec(std::size_t n) {
  auto s = unit(GraphFamily::kPath);
  s.n = n;
  return s;
}

GeneratorSpec with_unit_weights(GeneratorSpec spec) {
  spec.vertex_weights = {1.0, 1.0};
  spec.edge_weights = {1.0, 1.0};
  return spec;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  const auto parts = split(text, ':');
  const auto kind = parts.front();
  const auto expect = [&](std::size_t count) {
    if (parts.size() != count) invalid("generator spec '" + std::string(text) + "' has wrong arity");
  };
  if (kind == "complete") {
    expect(2);
    return complete_spec(parse_number<std::size_t>(parts[1], text));
  }
  if (kind == "cycle") {
    expect(2);
    return cycle_spec(parse_number<std::size_t>(parts[1], text));
  }
  if (kind == "tree") {
    expect(3);
    return regular_tree_spec(parse_number<std::size_t>(parts[1], text),
                             parse_number<std::size_t>(parts[2], text));
  }
  if (kind == "er") {
    expect(3);
    GeneratorSpec s;
    s.family = GraphFamily::kErdosRenyi;
    s.n = parse_number<std::size_t>(parts[1], text);
    s.p = parse_number<double>(parts[2], text);
    return s;
  }
  if (kind == "karate") {
    expect(1);
    return karate_spec();
  }
  if (kind == "star") {
    expect(2);
    return star_spec(parse_number<std::size_t>(parts[1], text));
  }
  if (kind == "path") {
    expect(2);
    return path_spec(parse_number<std::size_t>(parts[1], text));
  }
  invalid("unknown generator '" + std::string(kind) + "'");
}

std::vector<Edge> parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1, v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0) {
      throw Error(ErrorCode::kSyntaxError, "edge list line " + std::to_string(lineno) +
                                               ": expected two non-negative vertex ids");
    }
    edges.push_back(Edge::canonical(static_cast<VertexId>(u), static_cast<VertexId>(v)));
  }
  return edges;
}

std::string_view karate_club_edgelist_text() { return detail::kKarateEdgelist; }

std::span<const Edge> karate_club_edges() {
  static const std::vector<Edge> edges = parse_edgelist(karate_club_edgelist_text());
  return edges;
}

DoublyWeightedGraph generate(const GeneratorSpec& spec) {
  if (!valid_range(spec.vertex_weights) || !valid_range(spec.edge_weights)) {
    invalid("weight ranges must satisfy 0 < lo <= hi");
  }
  if (spec.stochastic() && !spec.seed) {
    invalid("generator '" + spec.describe() + "' draws random values and needs a seed");
  }
  std::mt19937_64 rng(spec.seed.value_or(0));

  std::size_t n = 0;
  std::vector<Edge> edges;
  switch (spec.family) {
    case GraphFamily::kComplete:
      n = spec.n;
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
      }
      break;
    case GraphFamily::kCycle:
      if (spec.n < 3) invalid("cycle needs n >= 3");
      n = spec.n;
      for (VertexId i = 0; i < n; ++i) {
        edges.push_back(Edge::canonical(i, static_cast<VertexId>((i + 1) % n)));
      }
      break;
    case GraphFamily::kPath:
      n = spec.n;
      for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case GraphFamily::kStar:
      n = spec.n + 1;
      for (VertexId i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case GraphFamily::kRegularTree: {
      if (spec.r < 2 || spec.depth < 1) invalid("regular tree needs r >= 2 and depth >= 1");
      // Root gets r children, every other internal vertex r-1, so all
      // non-leaf vertices have degree r.
      std::vector<VertexId> frontier{0};
      n = 1;
      for (std::size_t level = 0; level < spec.depth; ++level) {
        std::vector<VertexId> next;
        for (const auto parent : frontier) {
          const std::size_t children = parent == 0 ? spec.r : spec.r - 1;
          for (std::size_t c = 0; c < children; ++c) {
            const auto child = static_cast<VertexId>(n++);
            edges.push_back({parent, child});
            next.push_back(child);
          }
        }
        frontier = std::move(next);
      }
      break;
    }
    case GraphFamily::kErdosRenyi: {
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) invalid("Erdős–Rényi needs 0 <= p <= 1");
      n = spec.n;
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
          if (coin(rng) < spec.p) edges.push_back({i, j});
        }
      }
      break;
    }
    case GraphFamily::kKarateClub: {
      n = 34;
      const auto k = karate_club_edges();
      edges.assign(k.begin(), k.end());
      break;
    }
  }

  std::vector<double> m(n);
  for (auto& x : m) x = spec.vertex_weights.draw(rng);
  std::vector<double> w(edges.size());
  for (auto& x : w) x = spec.edge_weights.draw(rng);
  return DoublyWeightedGraph::build(n, edges, m, w);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<DoublyWeightedGraph> generate_layers(std::span<const GeneratorSpec> specs,
                                                 std::uint64_t seed) {
  std::vector<DoublyWeightedGraph> layers;
  layers.reserve(specs.size());
  for (std::size_t l = 0; l < specs.size(); ++l) {
    auto spec = specs[l];
    spec.seed = mix_seed(seed, l);
    layers.push_back(generate(spec));
  }
  return layers;
}

CompileGraph build_compile_experiment(std::span<const GeneratorSpec> specs, std::uint64_t seed) {
  const auto layers = generate_layers(specs, seed);
  return compile(layers);
}

std::vector<GeneratorSpec> cg258_specs() {
  return {erdos_renyi_spec(25, 0.2, 0), erdos_renyi_spec(25, 0.5, 0),
          erdos_renyi_spec(25, 0.8, 0)};
}

std::vector<GeneratorSpec> cg888_specs() {
  return {erdos_renyi_spec(25, 0.8, 0), erdos_renyi_spec(25, 0.8, 0),
          erdos_renyi_spec(25, 0.8, 0)};
}

}  // namespace forman
