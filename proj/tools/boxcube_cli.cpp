// boxcube: generate graphs and interval/box representations, convert them to
// unit-cube representations, verify representations against graphs, and run
// the exact boxicity/cubicity oracle on tiny instances.
//
// Exit codes: 0 success or match, 1 verification mismatch, 2 input error,
// 3 resource limit (size limit or oracle cap exceeded).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "boxcube/box.hpp"
#include "boxcube/cube.hpp"
#include "boxcube/generate.hpp"
#include "boxcube/io.hpp"
#include "boxcube/oracle.hpp"

namespace {

using namespace boxcube;
using io::Json;

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kResourceLimit = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    io::write_file_atomic(out, text);
}

std::optional<int> env_limit() {
  const char* raw = std::getenv("BOXCUBE_BRUTE_LIMIT");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("BOXCUBE_BRUTE_LIMIT: not a non-negative integer: ") + raw);
  }
}

std::string edge_list_text(const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i)
    os << (i ? " " : "") << "(" << edges[i].first << "," << edges[i].second << ")";
  return os.str();
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string rep_out;
};

std::string derived_rep_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
    return out.substr(0, out.size() - suffix.size()) + ".intervals.json";
  return out + ".intervals.json";
}

int cmd_gen(const GenOptions& o) {
  if (o.n < 1) throw InputError("gen: --n must be at least 1");
  std::optional<IntervalRepresentation> rep;
  Graph g;
  if (o.family == "star") {
    g = star(o.n);
    rep = star_interval_rep(o.n);
  } else if (o.family == "path") {
    g = path(o.n);
    rep = path_interval_rep(o.n);
  } else if (o.family == "complete") {
    g = complete(o.n);
    rep = complete_interval_rep(o.n);
  } else if (o.family == "cycle") {
    if (o.n < 3) throw InputError("gen: cycle needs --n >= 3");
    if (!o.rep_out.empty() && o.n > 3) throw InputError("gen: cycles on more than 3 vertices have no interval representation");
    g = cycle(o.n);
    rep = complete_interval_rep(o.n);
  } else if (o.family == "random-interval") {
    if (!o.seed) throw InputError("gen: random-interval requires --seed");
    rep = random_interval_rep(o.n, *o.seed);
    g = intersection_graph_of_intervals(*rep);
  } else {
    throw InputError("gen: unknown family '" + o.family + "'");
  }

  emit(o.out, io::canonical_text(io::to_json(g)));
  std::string rep_out = o.rep_out;
  if (rep_out.empty() && o.family == "random-interval")
    rep_out = (o.out.empty() || o.out == "-") ? "" : derived_rep_path(o.out);
  if (!rep_out.empty()) {
    emit(rep_out, io::canonical_text(io::to_json(*rep)));
  } else if (o.family == "random-interval") {
    emit("", io::canonical_text(io::to_json(*rep)));
  }
  return kOk;
}

// --- order -----------------------------------------------------------------

int cmd_order(const std::string& in, const std::string& out) {
  const auto rep = io::intervals_from_json(io::read_json_file(in));
  emit(out, io::canonical_text(io::to_json(left_endpoint_ordering(rep))));
  return kOk;
}

// --- convert ---------------------------------------------------------------

struct ConvertOptions {
  std::string kind;
  std::string in;
  std::string out;
  bool normalize = false;
  bool no_selfcheck = false;
};

int cmd_convert(const ConvertOptions& o) {
  const Json doc = io::read_json_file(o.in);
  CubeRepresentation cube;
  Graph expected;
  if (o.kind == "interval-to-cube") {
    const auto rep = io::intervals_from_json(doc);
    if (rep.vertex_count() < 1) throw InputError("convert: representation has no vertices");
    cube = interval_to_cube(rep);
    if (!o.no_selfcheck) expected = intersection_graph_of_intervals(rep);
  } else if (o.kind == "box-to-cube") {
    const auto rep = io::boxes_from_json(doc);
    if (rep.vertex_count() < 1) throw InputError("convert: representation has no vertices");
    cube = box_to_cube(rep);
    if (!o.no_selfcheck) expected = intersection_graph_of_boxes(rep);
  } else {
    throw InputError("convert: unknown kind '" + o.kind + "'");
  }

  if (!o.no_selfcheck) {
    const auto diff = edge_diff(expected, intersection_graph_of_cubes(cube));
    if (!diff.empty()) {
      std::cerr << "convert: self-check failed; missing " << edge_list_text(diff.missing) << "; extra "
                << edge_list_text(diff.extra) << "\n";
      return kMismatch;
    }
  }
  emit(o.out, io::canonical_text(o.normalize ? io::to_json_normalized(cube) : io::to_json(cube)));
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string graph;
  std::string cubes;
  std::string boxes;
  std::string intervals;
  std::string report;
};

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const auto& [u, v] : edges) a.push_back(Json::array({u, v}));
  return a;
}

// Per-dimension diagnostics for a stack of interval layers whose edge
// intersection is supposed to be E(G).
void layer_diagnostics(const Graph& g, const std::vector<Graph>& layers, Json& report, std::ostream& os) {
  Json dims = Json::array();
  for (std::size_t p = 0; p < layers.size(); ++p) {
    const auto d = diameter(layers[p]);
    const bool superset = edge_diff(g, layers[p]).missing.empty();
    std::size_t kills = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = u + 1; v < g.vertex_count(); ++v)
        if (!g.has_edge(u, v) && !layers[p].has_edge(u, v)) ++kills;
    os << "dimension " << p << ": superset " << (superset ? "yes" : "no") << ", separates " << kills
       << " non-edges, component diameters [";
    for (std::size_t c = 0; c < d.component_diameters.size(); ++c)
      os << (c ? "," : "") << d.component_diameters[c];
    os << "]" << (d.connected ? "" : " (disconnected)") << "\n";
    dims.push_back(Json{{"index", p},
                        {"superset", superset},
                        {"separates", kills},
                        {"component_diameters", d.component_diameters},
                        {"connected", d.connected}});
  }
  report["dimensions"] = std::move(dims);

  Json non_edges = Json::array();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v)) continue;
      Json killers = Json::array();
      for (std::size_t p = 0; p < layers.size(); ++p)
        if (!layers[p].has_edge(u, v)) killers.push_back(p);
      os << "non-edge (" << u << "," << v << "): separated by dimensions " << killers.dump() << "\n";
      non_edges.push_back(Json{{"edge", Json::array({u, v})}, {"dimensions", std::move(killers)}});
    }
  }
  report["non_edges"] = std::move(non_edges);
}

int cmd_verify(const VerifyOptions& o) {
  const int given = !o.cubes.empty() + !o.boxes.empty() + !o.intervals.empty();
  if (given != 1) throw InputError("verify: give exactly one of --cubes, --boxes, --intervals");
  const Graph g = io::read_graph_file(o.graph);

  Graph actual;
  std::vector<Graph> layers;
  std::string kind;
  if (!o.cubes.empty()) {
    kind = "cubes";
    const auto cube = io::cubes_from_json(io::read_json_file(o.cubes));
    if (cube.vertex_count() != g.vertex_count()) throw InputError("verify: vertex counts differ");
    actual = intersection_graph_of_cubes(cube);
    for (int p = 0; p < cube.dims(); ++p) layers.push_back(intersection_graph_of_unit_intervals(cube.layer(p)));
  } else if (!o.boxes.empty()) {
    kind = "boxes";
    const auto boxes = io::boxes_from_json(io::read_json_file(o.boxes));
    if (boxes.vertex_count() != g.vertex_count()) throw InputError("verify: vertex counts differ");
    actual = intersection_graph_of_boxes(boxes);
    for (int p = 0; p < boxes.dims(); ++p)
      layers.push_back(intersection_graph_of_intervals(project_to_intervals(boxes, p)));
  } else {
    kind = "intervals";
    const auto rep = io::intervals_from_json(io::read_json_file(o.intervals));
    if (rep.vertex_count() != g.vertex_count()) throw InputError("verify: vertex counts differ");
    actual = intersection_graph_of_intervals(rep);
    layers.push_back(actual);
  }

  const auto diff = edge_diff(g, actual);
  std::ostringstream os;
  os << (diff.empty() ? "match" : "mismatch") << " (" << kind << ", n = " << g.vertex_count() << ")\n";
  if (!diff.empty()) {
    os << "missing edges: " << edge_list_text(diff.missing) << "\n";
    os << "extra edges: " << edge_list_text(diff.extra) << "\n";
  }
  Json report{{"match", diff.empty()},
              {"kind", kind},
              {"n", g.vertex_count()},
              {"missing", edges_json(diff.missing)},
              {"extra", edges_json(diff.extra)}};
  layer_diagnostics(g, layers, report, os);
  std::cout << os.str();
  if (!o.report.empty()) io::write_file_atomic(o.report, io::canonical_text(report));
  return diff.empty() ? kOk : kMismatch;
}

// --- oracle ----------------------------------------------------------------

struct OracleOptions {
  std::string graph;
  std::string parameter;
  int max_b = 4;
  std::optional<int> limit;
  std::string out;
};

int cmd_oracle(const OracleOptions& o) {
  const Graph g = io::read_graph_file(o.graph);
  Parameter p;
  try {
    p = parse_parameter(o.parameter);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("oracle: ") + e.what());
  }
  if (o.max_b < 0) throw InputError("oracle: --max-b must be non-negative");
  const int limit = o.limit ? *o.limit : env_limit().value_or(kDefaultOracleLimit);

  const OracleResult result = run_oracle(p, g, o.max_b, limit);
  if (!verify_oracle_witness(g, result, std::max(limit, g.vertex_count()))) {
    std::cerr << "oracle: witness failed re-verification\n";
    return kMismatch;
  }
  emit(o.out, io::canonical_text(io::to_json(result)));
  if (result.exceeded) {
    std::cerr << "oracle: no " << to_string(p) << " witness with at most " << o.max_b << " layers\n";
    return kResourceLimit;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boxcube: interval and box representations to unit-cube representations"};
  app.require_subcommand(1, 1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a fixture graph (and interval representation)");
  gen_cmd->add_option("--family", gen.family, "star|path|cycle|complete|random-interval")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed for random-interval");
  gen_cmd->add_option("--out", gen.out, "Graph output path (stdout if omitted)");
  gen_cmd->add_option("--rep-out", gen.rep_out, "Interval representation output path");

  std::string order_in, order_out;
  auto* order_cmd = app.add_subcommand("order", "Emit the left-endpoint ordering of an interval file");
  order_cmd->add_option("--in", order_in, "Interval representation file")->required();
  order_cmd->add_option("--out", order_out, "Output path (stdout if omitted)");

  ConvertOptions conv;
  auto* conv_cmd = app.add_subcommand("convert", "Convert an interval or box file to a cube file");
  conv_cmd->add_option("--kind", conv.kind, "interval-to-cube|box-to-cube")->required();
  conv_cmd->add_option("--in", conv.in, "Input representation file")->required();
  conv_cmd->add_option("--out", conv.out, "Output path (stdout if omitted)");
  conv_cmd->add_flag("--normalize", conv.normalize, "Emit side 1 with rational anchors");
  conv_cmd->add_flag("--no-selfcheck", conv.no_selfcheck, "Skip verifying the output before writing");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a representation against a graph");
  ver_cmd->add_option("--graph", ver.graph, "Graph file (JSON or edge list)")->required();
  ver_cmd->add_option("--cubes", ver.cubes, "Cube representation file");
  ver_cmd->add_option("--boxes", ver.boxes, "Box representation file");
  ver_cmd->add_option("--intervals", ver.intervals, "Interval representation file");
  ver_cmd->add_option("--report", ver.report, "Write a JSON report here");

  OracleOptions orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Exact boxicity or cubicity of a tiny graph");
  orc_cmd->add_option("--graph", orc.graph, "Graph file (JSON or edge list)")->required();
  orc_cmd->add_option("--parameter", orc.parameter, "boxicity|cubicity")->required();
  orc_cmd->add_option("--max-b", orc.max_b, "Give up above this many layers")->capture_default_str();
  orc_cmd->add_option("--limit", orc.limit, "Vertex limit (overrides BOXCUBE_BRUTE_LIMIT)");
  orc_cmd->add_option("--out", orc.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*order_cmd) return cmd_order(order_in, order_out);
    if (*conv_cmd) return cmd_convert(conv);
    if (*ver_cmd) return cmd_verify(ver);
    if (*orc_cmd) return cmd_oracle(orc);
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
