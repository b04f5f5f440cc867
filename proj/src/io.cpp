#include "forman/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "forman/error.hpp"
#include "forman/format.hpp"
#include "json.hpp"

namespace forman {

using nlohmann::json;

namespace {

constexpr std::string_view kFormatTag = "forman-multiplex";
constexpr int kVersion = 1;

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kValidationError, where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    invalid(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

double as_weight(const json& j, const std::string& where) {
  if (!j.is_number()) invalid(where, "expected a number");
  const double w = j.get<double>();
  if (!std::isfinite(w) || w <= 0.0) invalid(where, "weight must be positive and finite");
  return w;
}

const json& as_array(const json& j, const std::string& where, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) invalid(where, "expected an array");
  if (size && j.size() != *size) {
    invalid(where, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Numbers go through format_double so CSV and JSON agree digit for digit.
json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return json::parse(format_double(x));
}

json optional_number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

std::string csv_optional(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string state_text(const StateVertex& s) {
  return std::to_string(s.vertex) + "^" + std::to_string(s.layer.value);
}

}  // namespace

std::vector<DoublyWeightedGraph> GraphFile::layer_graphs() const {
  std::vector<DoublyWeightedGraph> out;
  out.reserve(layers.size());
  for (const auto& layer : layers) {
    std::vector<Edge> edges;
    std::vector<double> w;
    for (const auto& e : layer.edges) {
      edges.push_back({e.u, e.v});
      w.push_back(e.weight);
    }
    out.push_back(DoublyWeightedGraph::build(n, edges, layer.vertex_weights, w));
  }
  return out;
}

CompileGraph GraphFile::to_compile() const {
  if (!is_compile()) {
    throw Error(ErrorCode::kNotACompileGraph,
                "graph lists explicit inter-layer edges; it is not a compile graph");
  }
  const auto g = layer_graphs();
  return compile(g);
}

MultiplexGraph GraphFile::to_multiplex() const {
  if (is_compile()) return to_compile().graph();
  std::vector<double> m;
  std::vector<IntraEdge> intra;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    m.insert(m.end(), layers[l].vertex_weights.begin(), layers[l].vertex_weights.end());
    for (const auto& e : layers[l].edges) intra.push_back({LayerId::from_index(l), e.u, e.v, e.weight});
  }
  return MultiplexGraph::build(n, layers.size(), std::move(m), std::move(intra), *inter_edges);
}

GraphFile GraphFile::from_layers(std::span<const DoublyWeightedGraph> layers) {
  GraphFile file;
  file.n = layers.empty() ? 0 : layers.front().vertex_count();
  for (const auto& g : layers) {
    LayerData data;
    data.vertex_weights.assign(g.vertex_weights().begin(), g.vertex_weights().end());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      data.edges.push_back({g.edges()[i].u, g.edges()[i].v, g.edge_weight(i)});
    }
    file.layers.push_back(std::move(data));
  }
  return file;
}

GraphFile parse_graph_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ", column " +
                                             std::to_string(col) + ": malformed JSON");
  }
  if (!doc.is_object()) invalid("document", "expected a JSON object");

  const auto& tag = member(doc, "format", "document");
  if (!tag.is_string() || tag.get<std::string>() != kFormatTag) {
    invalid("format", "expected \"" + std::string(kFormatTag) + "\"");
  }
  const auto& version = member(doc, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != kVersion) {
    invalid("version", "unsupported version (expected " + std::to_string(kVersion) + ")");
  }

  GraphFile file;
  file.n = as_index(member(doc, "n", "document"), "n");
  const auto& layers = as_array(member(doc, "layers", "document"), "layers");
  if (layers.empty()) invalid("layers", "at least one layer is required");

  for (std::size_t l = 0; l < layers.size(); ++l) {
    const std::string where = "layers[" + std::to_string(l) + "]";
    if (!layers[l].is_object()) invalid(where, "expected an object");
    LayerData data;
    const auto& m = as_array(member(layers[l], "vertex_weights", where), where + ".vertex_weights",
                             file.n);
    for (std::size_t v = 0; v < m.size(); ++v) {
      data.vertex_weights.push_back(
          as_weight(m[v], where + ".vertex_weights[" + std::to_string(v) + "]"));
    }
    const auto& edges = as_array(member(layers[l], "edges", where), where + ".edges");
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string at = where + ".edges[" + std::to_string(i) + "]";
      const auto& e = as_array(edges[i], at, 3);
      const auto u = as_index(e[0], at + "[0]");
      const auto v = as_index(e[1], at + "[1]");
      if (u >= file.n || v >= file.n) invalid(at, "vertex id out of range 0.." + std::to_string(file.n - 1));
      if (u == v) invalid(at, "self-loop");
      const auto canon = Edge::canonical(static_cast<VertexId>(u), static_cast<VertexId>(v));
      if (!seen.insert(canon).second) invalid(at, "duplicate edge");
      data.edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), as_weight(e[2], at + "[2]")});
    }
    file.layers.push_back(std::move(data));
  }

  if (const auto it = doc.find("inter_edges"); it != doc.end()) {
    const auto& inter = as_array(*it, "inter_edges");
    std::vector<InterEdge> out;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < inter.size(); ++i) {
      const std::string at = "inter_edges[" + std::to_string(i) + "]";
      const auto& e = as_array(inter[i], at, 4);
      const auto x = as_index(e[0], at + "[0]");
      auto a = as_index(e[1], at + "[1]");
      auto b = as_index(e[2], at + "[2]");
      if (x >= file.n) invalid(at, "vertex id out of range");
      if (a < 1 || b < 1 || a > layers.size() || b > layers.size()) {
        invalid(at, "layer out of range 1.." + std::to_string(layers.size()));
      }
      if (a == b) invalid(at, "inter-layer edge must join two different layers");
      if (a > b) std::swap(a, b);
      if (!seen.insert({x, a, b}).second) invalid(at, "duplicate edge");
      out.push_back({static_cast<VertexId>(x), LayerId{static_cast<std::uint32_t>(a)},
                     LayerId{static_cast<std::uint32_t>(b)}, as_weight(e[3], at + "[3]")});
    }
    file.inter_edges = std::move(out);
  }

  if (const auto it = doc.find("labels"); it != doc.end()) {
    const auto& labels = as_array(*it, "labels", file.n);
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (!labels[v].is_string()) invalid("labels[" + std::to_string(v) + "]", "expected a string");
      file.labels.push_back(labels[v].get<std::string>());
    }
  }
  return file;
}

std::string serialize_graph_file(const GraphFile& file) {
  json doc;
  doc["format"] = kFormatTag;
  doc["version"] = kVersion;
  doc["n"] = file.n;
  json layers = json::array();
  for (const auto& layer : file.layers) {
    json m = json::array();
    for (const double x : layer.vertex_weights) m.push_back(number(x));
    json edges = json::array();
    for (const auto& e : layer.edges) edges.push_back({e.u, e.v, number(e.weight)});
    layers.push_back({{"vertex_weights", std::move(m)}, {"edges", std::move(edges)}});
  }
  doc["layers"] = std::move(layers);
  if (file.inter_edges) {
    json inter = json::array();
    for (const auto& e : *file.inter_edges) {
      inter.push_back({e.vertex, e.a.value, e.b.value, number(e.weight)});
    }
    doc["inter_edges"] = std::move(inter);
  }
  if (!file.labels.empty()) doc["labels"] = file.labels;
  return doc.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIoError, "failed writing '" + path + "'");
}

std::string curvature_report_text(const CurvatureReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json edges = json::array();
    for (const auto& e : report.entries) {
      json row = {{"kind", e.kind == EdgeKind::kIntra ? "intra" : "inter"},
                  {"u", e.edge.first.vertex},
                  {"layer_u", e.edge.first.layer.value},
                  {"v", e.edge.second.vertex},
                  {"layer_v", e.edge.second.layer.value},
                  {"curvature", number(e.value)}};
      if (e.low_layer) row["low_layer"] = e.low_layer->value;
      edges.push_back(std::move(row));
    }
    return dump({{"edges", std::move(edges)},
                 {"min", number(report.min)},
                 {"max", number(report.max)},
                 {"mean", number(report.mean)}});
  }
  std::ostringstream os;
  os << "kind,u,layer_u,v,layer_v,curvature\n";
  for (const auto& e : report.entries) {
    os << (e.kind == EdgeKind::kIntra ? "intra" : "inter") << "," << e.edge.first.vertex << ","
       << e.edge.first.layer.value << "," << e.edge.second.vertex << ","
       << e.edge.second.layer.value << "," << format_double(e.value) << "\n";
  }
  return os.str();
}

std::string sensitivity_text(const DoublyWeightedGraph& g,
                             std::span<const SensitivityRecord> records, ReportFormat format) {
  const auto parameter_name = [&](const Parameter& p) {
    if (p.kind == Parameter::Kind::kVertexWeight) return "m(" + std::to_string(p.index) + ")";
    const auto e = g.edges()[p.index];
    return "w(" + std::to_string(e.u) + "-" + std::to_string(e.v) + ")";
  };
  if (format == ReportFormat::kJson) {
    json rows = json::array();
    for (const auto& r : records) {
      const auto e = g.edges()[r.edge];
      rows.push_back({{"u", e.u},
                      {"v", e.v},
                      {"parameter", parameter_name(r.parameter)},
                      {"partial", number(r.partial)},
                      {"sensitivity", optional_number(r.dimensionless)}});
    }
    return dump({{"records", std::move(rows)}});
  }
  std::ostringstream os;
  os << "u,v,parameter,partial,sensitivity\n";
  for (const auto& r : records) {
    const auto e = g.edges()[r.edge];
    os << e.u << "," << e.v << "," << parameter_name(r.parameter) << ","
       << format_double(r.partial) << "," << csv_optional(r.dimensionless) << "\n";
  }
  return os.str();
}

namespace {

json evaluation_rows(std::span<const EvaluationRow> rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"vertex", r.vertex},
                   {"ce", number(r.ce)},
                   {"ce_uni", number(r.ce_uni)},
                   {"ce_uni_unscaled", number(r.ce_uni_unscaled)},
                   {"difference", number(r.difference)},
                   {"degenerate", r.degenerate}});
  }
  return out;
}

std::string evaluation_csv(std::span<const EvaluationRow> rows) {
  std::ostringstream os;
  os << "vertex,ce,ce_uni,ce_uni_unscaled,difference,degenerate\n";
  for (const auto& r : rows) {
    os << r.vertex << "," << format_double(r.ce) << "," << format_double(r.ce_uni) << ","
       << format_double(r.ce_uni_unscaled) << "," << format_double(r.difference) << ","
       << (r.degenerate ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace

std::string evaluation_text(const EvaluationReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    return dump({{"rows", evaluation_rows(report.rows)},
                 {"difference_spread", number(report.difference_spread())}});
  }
  return evaluation_csv(report.rows);
}

std::vector<std::pair<std::string, std::string>> weakness_artifacts(const WeaknessFinding& f,
                                                                    ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json sums = json::array();
    for (const auto& s : f.layer_sums) {
      sums.push_back({{"layer", s.layer.value},
                      {"sum", number(s.sum)},
                      {"edges", s.edges},
                      {"empty", s.empty}});
    }
    json scores = json::array();
    for (const auto& s : f.edge_scores) {
      scores.push_back({{"neighbor", s.neighbor}, {"curvature", number(s.curvature)}});
    }
    json doc = {{"vertex", f.vertex},
                {"layer", f.layer.value},
                {"edge", {f.edge.u, f.edge.v}},
                {"edge_curvature", number(f.edge_curvature)},
                {"difference", number(f.difference)},
                {"low_confidence", f.low_confidence},
                {"ranking", evaluation_rows(f.ranking)},
                {"layer_sums", std::move(sums)},
                {"edge_scores", std::move(scores)}};
    return {{"identify.json", dump(doc)}};
  }

  std::ostringstream head;
  head << "vertex,layer,u,v,edge_curvature,difference,low_confidence\n"
       << f.vertex << "," << f.layer.value << "," << f.edge.u << "," << f.edge.v << ","
       << format_double(f.edge_curvature) << "," << format_double(f.difference) << ","
       << (f.low_confidence ? 1 : 0) << "\n";
  std::ostringstream sums;
  sums << "layer,sum,edges,empty\n";
  for (const auto& s : f.layer_sums) {
    sums << s.layer.value << "," << format_double(s.sum) << "," << s.edges << ","
         << (s.empty ? 1 : 0) << "\n";
  }
  std::ostringstream scores;
  scores << "edge,curvature\n";
  for (const auto& s : f.edge_scores) {
    scores << state_text({f.vertex, f.layer}) << "-" << state_text({s.neighbor, f.layer}) << ","
           << format_double(s.curvature) << "\n";
  }
  return {{"identify.csv", head.str()},
          {"ranking.csv", evaluation_csv(f.ranking)},
          {"layer_sums.csv", sums.str()},
          {"edge_scores.csv", scores.str()}};
}

}  // namespace forman
