#pragma once

#include <vector>

#include "boxcube/cube.hpp"
#include "boxcube/interval.hpp"

namespace boxcube {

/// One axis-parallel box per vertex, stored as `dims` closed intervals.
class BoxRepresentation {
 public:
  BoxRepresentation() = default;
  /// `boxes` is row-major: n rows of `dims` intervals. Throws
  /// std::invalid_argument on a size mismatch or an interval with lo > hi.
  BoxRepresentation(int n, int dims, std::vector<Interval> boxes);

  int vertex_count() const { return n_; }
  int dims() const { return dims_; }
  const Interval& box(Vertex v, int p) const {
    return boxes_[static_cast<std::size_t>(v) * static_cast<std::size_t>(dims_) +
                  static_cast<std::size_t>(p)];
  }
  const std::vector<Interval>& boxes() const { return boxes_; }

  friend bool operator==(const BoxRepresentation&, const BoxRepresentation&) = default;

 private:
  int n_ = 0;
  int dims_ = 0;
  std::vector<Interval> boxes_;
};

/// Coordinate p of every box as an interval representation.
IntervalRepresentation project_to_intervals(const BoxRepresentation& rep, int p);

/// Boxes meet iff their intervals meet in every dimension; with zero
/// dimensions every pair meets.
Graph intersection_graph_of_boxes(const BoxRepresentation& rep);

/// Concatenates interval_to_cube over every projection, in dimension order.
/// Projections whose interval graph is complete contribute no dimensions.
/// Output has at most dims * ceil(log2 n) dimensions and side
/// 2^ceil(log2 n). Requires n >= 1.
CubeRepresentation box_to_cube(const BoxRepresentation& rep);

}  // namespace boxcube
