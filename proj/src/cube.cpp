#include "boxcube/cube.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace boxcube {

int ceil_log2(int n) {
  if (n <= 1) return 0;
  return static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
}

CubeRepresentation::CubeRepresentation(int n, int dims, std::int64_t side,
                                       std::vector<std::int64_t> anchors)
    : n_(n), dims_(dims), side_(side), anchors_(std::move(anchors)) {
  if (n < 0 || dims < 0) throw std::invalid_argument("cube representation: negative size");
  if (side <= 0) throw std::invalid_argument("cube representation: side must be positive");
  if (anchors_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(dims))
    throw std::invalid_argument("cube representation: anchor matrix has wrong size");
}

UnitIntervalRepresentation CubeRepresentation::layer(int p) const {
  if (p < 0 || p >= dims_) throw std::invalid_argument("cube representation: dimension out of range");
  std::vector<Rational> a(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) a[static_cast<std::size_t>(v)] = Rational(anchor(v, p));
  return UnitIntervalRepresentation(std::move(a), Rational(side_));
}

Graph intersection_graph_of_cubes(const CubeRepresentation& rep) {
  const int n = rep.vertex_count();
  const int d = rep.dims();
  const std::int64_t s = rep.side();
  Graph g(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t* row = g.mutable_row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      bool meet = true;
      for (int p = 0; p < d && meet; ++p) {
        const std::int64_t diff = rep.anchor(u, p) - rep.anchor(v, p);
        meet = (diff < 0 ? -diff : diff) <= s;
      }
      if (meet) row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
  return g;
}

LayerPlan make_layer_plan(const VertexOrdering& f, int layer) {
  if (layer < 1 || layer > 30) throw std::invalid_argument("make_layer_plan: bad layer index");
  LayerPlan plan;
  plan.layer = layer;
  plan.block_size = 1 << (layer - 1);
  const int n = f.size();
  plan.block.resize(static_cast<std::size_t>(n));
  plan.side.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const int j = (f.position(v) - 1) / plan.block_size + 1;
    plan.block[static_cast<std::size_t>(v)] = j;
    plan.side[static_cast<std::size_t>(v)] = (j % 2 == 1) ? Side::A : Side::B;
  }
  return plan;
}

PaddedInstance pad_to_power_of_two(const Graph& g, const VertexOrdering& f) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("pad_to_power_of_two: empty graph");
  if (f.size() != n) throw std::invalid_argument("pad_to_power_of_two: ordering size mismatch");
  const int k = ceil_log2(n);
  const int padded = 1 << k;
  std::vector<int> positions = f.positions();
  for (int v = n; v < padded; ++v) positions.push_back(v + 1);
  return {add_isolated(g, padded - n), VertexOrdering::from_positions(std::move(positions)), k};
}

namespace {

// Layer anchors without precondition checks. With B-side rows masked as a
// bit set, each A-side vertex scans its row once for the highest-positioned
// B neighbour.
std::vector<std::int64_t> layer_anchors(const Graph& g, const VertexOrdering& f, int n, int layer) {
  const std::size_t words = g.words();
  const int shift = layer - 1;
  auto on_b_side = [&](Vertex v) { return (((f.position(v) - 1) >> shift) & 1) == 1; };

  std::vector<std::uint64_t> b_mask(words, 0);
  for (Vertex v = 0; v < n; ++v)
    if (on_b_side(v)) b_mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);

  std::vector<std::int64_t> anchors(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (on_b_side(v)) {
      anchors[static_cast<std::size_t>(v)] = std::int64_t{n} + f.position(v);
      continue;
    }
    int t = 0;
    const std::uint64_t* row = g.row(v);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = row[w] & b_mask[w];
      while (bits != 0) {
        const Vertex x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        t = std::max(t, f.position(x));
        bits &= bits - 1;
      }
    }
    anchors[static_cast<std::size_t>(v)] = t;
  }
  return anchors;
}

}  // namespace

UnitIntervalRepresentation build_layer(const Graph& padded, const VertexOrdering& f, int n,
                                       int layer) {
  if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw std::invalid_argument("build_layer: n must be a power of two");
  if (padded.vertex_count() != n || f.size() != n)
    throw std::invalid_argument("build_layer: graph and ordering must have n vertices");
  const int k = ceil_log2(n);
  if (layer < 1 || layer > k)
    throw std::invalid_argument("build_layer: layer index must lie in [1, " + std::to_string(k) + "]");
  if (!check_ordering_property(padded, f))
    throw std::invalid_argument("build_layer: ordering lacks the closure property");

  const auto raw = layer_anchors(padded, f, n, layer);
  std::vector<Rational> anchors(raw.begin(), raw.end());
  return UnitIntervalRepresentation(std::move(anchors), Rational(n));
}

CubeConstruction interval_to_cube_traced(const IntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  if (n < 1) throw std::invalid_argument("interval_to_cube: empty representation");

  CubeConstruction out;
  out.graph = intersection_graph_of_intervals(rep);
  const int k = ceil_log2(n);
  const int padded_n = 1 << k;
  if (is_complete(out.graph)) {
    out.cube = CubeRepresentation(n, 0, padded_n, {});
    return out;
  }

  out.padded = pad_to_power_of_two(out.graph, left_endpoint_ordering(rep));
  const Graph& pg = out.padded.graph;
  const VertexOrdering& pf = out.padded.order;

  std::vector<std::vector<std::int64_t>> columns(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(static, 1)
  for (int i = 1; i <= k; ++i) columns[static_cast<std::size_t>(i - 1)] = layer_anchors(pg, pf, padded_n, i);

  std::vector<std::int64_t> anchors(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (Vertex v = 0; v < n; ++v)
    for (int p = 0; p < k; ++p)
      anchors[static_cast<std::size_t>(v) * k + p] = columns[p][static_cast<std::size_t>(v)];
  out.cube = CubeRepresentation(n, k, padded_n, std::move(anchors));

  out.layers.reserve(columns.size());
  for (const auto& col : columns)
    out.layers.emplace_back(std::vector<Rational>(col.begin(), col.end()), Rational(padded_n));
  return out;
}

CubeRepresentation interval_to_cube(const IntervalRepresentation& rep) {
  return interval_to_cube_traced(rep).cube;
}

bool LayerReport::all_ok() const {
  return intersection_ok && std::all_of(superset_ok.begin(), superset_ok.end(), [](bool b) { return b; });
}

LayerReport verify_layers(const Graph& g, const std::vector<UnitIntervalRepresentation>& layers) {
  if (layers.empty()) throw std::invalid_argument("verify_layers: no layers");
  for (const auto& layer : layers) {
    if (layer.vertex_count() != g.vertex_count())
      throw std::invalid_argument("verify_layers: layer vertex set differs from graph");
  }
  LayerReport report;
  for (const auto& layer : layers) {
    Graph lg = intersection_graph_of_unit_intervals(layer);
    report.superset_ok.push_back(edge_diff(g, lg).missing.empty());
    report.diameters.push_back(diameter(lg));
    report.layer_graphs.push_back(std::move(lg));
  }
  report.intersection_ok = edge_intersection(report.layer_graphs) == g;
  return report;
}

}  // namespace boxcube
