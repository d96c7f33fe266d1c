#include "boxcube/reference.hpp"

#include "permutation_search.hpp"

namespace boxcube::reference {

Graph intersection_graph_of_intervals(const IntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (intersects(rep[u], rep[v])) g.add_edge(u, v);
  return g;
}

Graph intersection_graph_of_boxes(const BoxRepresentation& rep) {
  const int n = rep.vertex_count();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool meet = true;
      for (int p = 0; p < rep.dims(); ++p) meet = meet && intersects(rep.box(u, p), rep.box(v, p));
      if (meet) g.add_edge(u, v);
    }
  }
  return g;
}

Graph intersection_graph_of_cubes(const CubeRepresentation& rep) {
  const int n = rep.vertex_count();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool meet = true;
      for (int p = 0; p < rep.dims(); ++p) {
        const std::int64_t lo = std::max(rep.anchor(u, p), rep.anchor(v, p));
        const std::int64_t hi = std::min(rep.anchor(u, p), rep.anchor(v, p)) + rep.side();
        meet = meet && lo <= hi;
      }
      if (meet) g.add_edge(u, v);
    }
  }
  return g;
}

std::optional<VertexOrdering> recognize_interval_brute(const Graph& g, int limit) {
  if (g.vertex_count() > limit) throw SizeLimitError("recognize_interval_brute", g.vertex_count(), limit);
  auto order = detail::first_ordering_serial(
      g.vertex_count(), [&](const std::vector<Vertex>& o) { return detail::has_forward_closure(g, o); });
  if (!order) return std::nullopt;
  return VertexOrdering::from_order(std::move(*order));
}

std::optional<VertexOrdering> find_unit_interval_ordering(const Graph& g, int limit) {
  if (g.vertex_count() > limit) throw SizeLimitError("recognize_unit_interval_brute", g.vertex_count(), limit);
  auto order = detail::first_ordering_serial(
      g.vertex_count(), [&](const std::vector<Vertex>& o) { return detail::has_two_sided_closure(g, o); });
  if (!order) return std::nullopt;
  return VertexOrdering::from_order(std::move(*order));
}

CubeRepresentation interval_to_cube(const IntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  if (n < 1) throw std::invalid_argument("interval_to_cube: empty representation");
  const Graph g = reference::intersection_graph_of_intervals(rep);
  const int k = ceil_log2(n);
  if (is_complete(g)) return CubeRepresentation(n, 0, std::int64_t{1} << k, {});

  const PaddedInstance padded = pad_to_power_of_two(g, left_endpoint_ordering(rep));
  const int padded_n = padded.graph.vertex_count();
  std::vector<std::int64_t> anchors(static_cast<std::size_t>(n) * k);
  for (int i = 1; i <= k; ++i) {
    const auto layer = build_layer(padded.graph, padded.order, padded_n, i);
    for (Vertex v = 0; v < n; ++v)
      anchors[static_cast<std::size_t>(v) * k + (i - 1)] = boost::rational_cast<std::int64_t>(layer.anchor(v));
  }
  return CubeRepresentation(n, k, padded_n, std::move(anchors));
}

CubeRepresentation box_to_cube(const BoxRepresentation& rep) {
  const int n = rep.vertex_count();
  if (n < 1) throw std::invalid_argument("box_to_cube: empty representation");
  const std::int64_t side = std::int64_t{1} << ceil_log2(n);
  if (is_complete(reference::intersection_graph_of_boxes(rep))) return CubeRepresentation(n, 0, side, {});

  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n));
  int total = 0;
  for (int p = 0; p < rep.dims(); ++p) {
    const auto part = reference::interval_to_cube(project_to_intervals(rep, p));
    total += part.dims();
    for (Vertex v = 0; v < n; ++v)
      for (int q = 0; q < part.dims(); ++q) rows[static_cast<std::size_t>(v)].push_back(part.anchor(v, q));
  }
  std::vector<std::int64_t> anchors;
  for (const auto& r : rows) anchors.insert(anchors.end(), r.begin(), r.end());
  return CubeRepresentation(n, total, side, std::move(anchors));
}

}  // namespace boxcube::reference
