#include "boxcube/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace boxcube::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError("field '" + path + "': " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

int as_count(const Json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < 0 || v > (1 << 24)) fail(path, "expected a non-negative count");
  return static_cast<int>(v);
}

Rational make_rational(std::int64_t num, std::int64_t den, const std::string& path) {
  if (den == 0) fail(path, "zero denominator");
  return Rational(num, den);
}

Json rational_pair(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

Json interval_quad(const Interval& iv) {
  return Json::array({iv.lo.numerator(), iv.lo.denominator(), iv.hi.numerator(), iv.hi.denominator()});
}

Interval interval_from_quad(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) fail(path, "expected [l_num, l_den, r_num, r_den]");
  const Rational lo = make_rational(as_int(j[0], path + "[0]"), as_int(j[1], path + "[1]"), path);
  const Rational hi = make_rational(as_int(j[2], path + "[2]"), as_int(j[3], path + "[3]"), path);
  if (lo > hi) fail(path, "left endpoint greater than right endpoint");
  return {lo, hi};
}

// Per-vertex map {"0": ..., "1": ..., ...} covering exactly 0..n-1.
template <typename Fn>
void for_each_vertex_entry(const Json& map, int n, const std::string& path, Fn&& fn) {
  if (!map.is_object()) fail(path, "expected an object keyed by vertex");
  if (static_cast<int>(map.size()) != n)
    fail(path, "expected " + std::to_string(n) + " vertex entries, found " + std::to_string(map.size()));
  for (Vertex v = 0; v < n; ++v) {
    const std::string key = std::to_string(v);
    auto it = map.find(key);
    if (it == map.end()) fail(join(path, key), "missing vertex entry");
    fn(v, *it, join(path, key));
  }
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json to_json(const IntervalRepresentation& rep) {
  Json map = Json::object();
  for (Vertex v = 0; v < rep.vertex_count(); ++v) map[std::to_string(v)] = interval_quad(rep[v]);
  return Json{{"n", rep.vertex_count()}, {"intervals", std::move(map)}};
}

Json to_json(const BoxRepresentation& rep) {
  Json map = Json::object();
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    Json row = Json::array();
    for (int p = 0; p < rep.dims(); ++p) row.push_back(interval_quad(rep.box(v, p)));
    map[std::to_string(v)] = std::move(row);
  }
  return Json{{"n", rep.vertex_count()}, {"dims", rep.dims()}, {"boxes", std::move(map)}};
}

Json to_json(const CubeRepresentation& rep) {
  Json map = Json::object();
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    Json row = Json::array();
    for (int p = 0; p < rep.dims(); ++p) row.push_back(rep.anchor(v, p));
    map[std::to_string(v)] = std::move(row);
  }
  return Json{{"n", rep.vertex_count()}, {"dims", rep.dims()}, {"side", rep.side()}, {"anchors", std::move(map)}};
}

Json to_json_normalized(const CubeRepresentation& rep) {
  Json map = Json::object();
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    Json row = Json::array();
    for (int p = 0; p < rep.dims(); ++p) row.push_back(rational_pair(Rational(rep.anchor(v, p), rep.side())));
    map[std::to_string(v)] = std::move(row);
  }
  return Json{{"n", rep.vertex_count()}, {"dims", rep.dims()}, {"side", 1}, {"anchors", std::move(map)}};
}

Json to_json(const VertexOrdering& f) {
  return Json{{"n", f.size()}, {"order", f.order()}};
}

Json to_json(const OracleResult& result) {
  Json witness = Json::array();
  for (const auto& rep : result.witness) witness.push_back(to_json(rep));
  return Json{{"parameter", std::string(to_string(result.parameter))},
              {"value", result.value ? Json(*result.value) : Json(nullptr)},
              {"exceeded", result.exceeded},
              {"witness", std::move(witness)}};
}

Graph graph_from_json(const Json& j) {
  const int n = as_count(field(j, "n", ""), "n");
  const Json& edges = field(j, "edges", "");
  if (!edges.is_array()) fail("edges", "expected an array of [u, v] pairs");
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2) fail(path, "expected [u, v]");
    const auto u = as_int(e[0], path + "[0]");
    const auto v = as_int(e[1], path + "[1]");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(path, "vertex out of range");
    if (u == v) fail(path, "self-loop");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

IntervalRepresentation intervals_from_json(const Json& j) {
  const int n = as_count(field(j, "n", ""), "n");
  std::vector<Interval> out(static_cast<std::size_t>(n));
  for_each_vertex_entry(field(j, "intervals", ""), n, "intervals",
                        [&](Vertex v, const Json& e, const std::string& path) {
                          out[static_cast<std::size_t>(v)] = interval_from_quad(e, path);
                        });
  return IntervalRepresentation(std::move(out));
}

BoxRepresentation boxes_from_json(const Json& j) {
  const int n = as_count(field(j, "n", ""), "n");
  const int dims = as_count(field(j, "dims", ""), "dims");
  std::vector<Interval> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(dims));
  for_each_vertex_entry(field(j, "boxes", ""), n, "boxes", [&](Vertex v, const Json& e, const std::string& path) {
    if (!e.is_array() || static_cast<int>(e.size()) != dims)
      fail(path, "expected " + std::to_string(dims) + " intervals");
    for (int p = 0; p < dims; ++p)
      out[static_cast<std::size_t>(v) * dims + p] = interval_from_quad(e[p], path + "[" + std::to_string(p) + "]");
  });
  return BoxRepresentation(n, dims, std::move(out));
}

CubeRepresentation cubes_from_json(const Json& j) {
  const int n = as_count(field(j, "n", ""), "n");
  const int dims = as_count(field(j, "dims", ""), "dims");
  const auto side = as_int(field(j, "side", ""), "side");
  if (side <= 0) fail("side", "must be positive");
  const Json& map = field(j, "anchors", "");

  std::vector<Rational> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(dims));
  bool normalized = false;
  for_each_vertex_entry(map, n, "anchors", [&](Vertex v, const Json& e, const std::string& path) {
    if (!e.is_array() || static_cast<int>(e.size()) != dims)
      fail(path, "expected " + std::to_string(dims) + " anchors");
    for (int p = 0; p < dims; ++p) {
      const std::string at = path + "[" + std::to_string(p) + "]";
      const Json& a = e[p];
      Rational r;
      if (a.is_array()) {
        if (a.size() != 2) fail(at, "expected [num, den]");
        r = make_rational(as_int(a[0], at + "[0]"), as_int(a[1], at + "[1]"), at);
        normalized = true;
      } else {
        r = Rational(as_int(a, at));
      }
      values[static_cast<std::size_t>(v) * dims + p] = r;
    }
  });

  std::int64_t scale = 1;
  if (normalized) {
    if (side != 1) fail("side", "normalized anchors require side 1");
    for (const auto& r : values) scale = std::lcm(scale, r.denominator());
  }
  std::vector<std::int64_t> anchors;
  anchors.reserve(values.size());
  for (const auto& r : values) anchors.push_back(r.numerator() * (scale / r.denominator()));
  return CubeRepresentation(n, dims, normalized ? scale : side, std::move(anchors));
}

VertexOrdering ordering_from_json(const Json& j) {
  const int n = as_count(field(j, "n", ""), "n");
  const Json& order = field(j, "order", "");
  if (!order.is_array() || static_cast<int>(order.size()) != n)
    fail("order", "expected an array of " + std::to_string(n) + " vertices");
  std::vector<Vertex> seq;
  for (std::size_t i = 0; i < order.size(); ++i)
    seq.push_back(static_cast<Vertex>(as_int(order[i], "order[" + std::to_string(i) + "]")));
  try {
    return VertexOrdering::from_order(std::move(seq));
  } catch (const std::invalid_argument& e) {
    fail("order", e.what());
  }
}

OracleResult oracle_result_from_json(const Json& j) {
  OracleResult r;
  const Json& p = field(j, "parameter", "");
  if (!p.is_string()) fail("parameter", "expected a string");
  try {
    r.parameter = parse_parameter(p.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail("parameter", e.what());
  }
  const Json& value = field(j, "value", "");
  if (!value.is_null()) r.value = as_count(value, "value");
  const Json& exceeded = field(j, "exceeded", "");
  if (!exceeded.is_boolean()) fail("exceeded", "expected a boolean");
  r.exceeded = exceeded.get<bool>();
  const Json& witness = field(j, "witness", "");
  if (!witness.is_array()) fail("witness", "expected an array");
  for (const auto& w : witness) r.witness.push_back(intervals_from_json(w));
  return r;
}

std::string canonical_text(const Json& j) { return j.dump() + "\n"; }

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) { return parse_text(read_text_file(path), path.string()); }

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::int64_t> tokens;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        tokens.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw FormatError("edge list: bad token '" + tok + "'");
      }
    }
  }
  if (tokens.empty()) throw FormatError("edge list: missing vertex count");
  if (tokens.size() % 2 != 1) throw FormatError("edge list: odd number of endpoints");
  const auto n = tokens[0];
  if (n < 0 || n > (1 << 24)) throw FormatError("edge list: bad vertex count");
  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    const auto u = tokens[i], v = tokens[i + 1];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw FormatError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return graph_from_json(parse_text(text, path.string()));
  return graph_from_edge_list(text);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace boxcube::io
