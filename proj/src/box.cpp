#include "boxcube/box.hpp"

#include <string>

namespace boxcube {

BoxRepresentation::BoxRepresentation(int n, int dims, std::vector<Interval> boxes)
    : n_(n), dims_(dims), boxes_(std::move(boxes)) {
  if (n < 0 || dims < 0) throw std::invalid_argument("box representation: negative size");
  if (boxes_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(dims))
    throw std::invalid_argument("box representation: box matrix has wrong size");
  for (Vertex v = 0; v < n; ++v) {
    for (int p = 0; p < dims; ++p) {
      if (box(v, p).lo > box(v, p).hi) {
        throw std::invalid_argument("box representation: vertex " + std::to_string(v) +
                                    ", dimension " + std::to_string(p) +
                                    " has left endpoint greater than right endpoint");
      }
    }
  }
}

IntervalRepresentation project_to_intervals(const BoxRepresentation& rep, int p) {
  if (p < 0 || p >= rep.dims())
    throw std::invalid_argument("project_to_intervals: dimension " + std::to_string(p) +
                                " out of range");
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(rep.vertex_count()));
  for (Vertex v = 0; v < rep.vertex_count(); ++v) out.push_back(rep.box(v, p));
  return IntervalRepresentation(std::move(out));
}

Graph intersection_graph_of_boxes(const BoxRepresentation& rep) {
  const int n = rep.vertex_count();
  const int d = rep.dims();
  Graph g(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t* row = g.mutable_row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      bool meet = true;
      for (int p = 0; p < d && meet; ++p) meet = intersects(rep.box(u, p), rep.box(v, p));
      if (meet) row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
  return g;
}

CubeRepresentation box_to_cube(const BoxRepresentation& rep) {
  const int n = rep.vertex_count();
  if (n < 1) throw std::invalid_argument("box_to_cube: empty representation");
  const std::int64_t side = std::int64_t{1} << ceil_log2(n);
  if (is_complete(intersection_graph_of_boxes(rep))) return CubeRepresentation(n, 0, side, {});

  const int b = rep.dims();
  std::vector<CubeRepresentation> parts(static_cast<std::size_t>(b));
#pragma omp parallel for schedule(dynamic, 1)
  for (int p = 0; p < b; ++p) parts[static_cast<std::size_t>(p)] = interval_to_cube(project_to_intervals(rep, p));

  int total = 0;
  for (const auto& part : parts) total += part.dims();
  std::vector<std::int64_t> anchors;
  anchors.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(total));
  for (Vertex v = 0; v < n; ++v)
    for (const auto& part : parts)
      for (int q = 0; q < part.dims(); ++q) anchors.push_back(part.anchor(v, q));
  return CubeRepresentation(n, total, side, std::move(anchors));
}

}  // namespace boxcube
