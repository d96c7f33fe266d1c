#pragma once

#include <cstdint>
#include <vector>

#include "boxcube/graph.hpp"
#include "boxcube/interval.hpp"

namespace boxcube {

/// ceil(log2(n)) for n >= 1; 0 for n <= 1.
int ceil_log2(int n);

/// Axis-parallel cubes sharing side length `side`: vertex v occupies
/// prod_p [anchor(v, p), anchor(v, p) + side]. Zero dimensions encode the
/// complete graph.
class CubeRepresentation {
 public:
  CubeRepresentation() = default;
  /// `anchors` is row-major, n rows of `dims` entries.
  CubeRepresentation(int n, int dims, std::int64_t side, std::vector<std::int64_t> anchors);

  int vertex_count() const { return n_; }
  int dims() const { return dims_; }
  std::int64_t side() const { return side_; }
  std::int64_t anchor(Vertex v, int p) const {
    return anchors_[static_cast<std::size_t>(v) * static_cast<std::size_t>(dims_) +
                    static_cast<std::size_t>(p)];
  }
  const std::vector<std::int64_t>& anchors() const { return anchors_; }

  /// Dimension p viewed as a unit-interval layer of length `side`.
  UnitIntervalRepresentation layer(int p) const;

  friend bool operator==(const CubeRepresentation&, const CubeRepresentation&) = default;

 private:
  int n_ = 0;
  int dims_ = 0;
  std::int64_t side_ = 1;
  std::vector<std::int64_t> anchors_;
};

Graph intersection_graph_of_cubes(const CubeRepresentation& rep);

enum class Side { A, B };

/// Dyadic split used by layer i: blocks of 2^(i-1) consecutive positions,
/// odd-numbered blocks on side A, even-numbered on side B.
struct LayerPlan {
  int layer = 1;
  int block_size = 1;
  std::vector<int> block;   // 1-based block index per vertex
  std::vector<Side> side;   // per vertex
};

LayerPlan make_layer_plan(const VertexOrdering& f, int layer);

struct PaddedInstance {
  Graph graph;
  VertexOrdering order;
  int k = 0;  // log2 of the padded vertex count
};

/// Appends isolated vertices up to 2^ceil(log2 n); they take positions
/// n+1, ..., 2^k in the same order as their ids. Requires n >= 1.
PaddedInstance pad_to_power_of_two(const Graph& g, const VertexOrdering& f);

/// Unit-interval layer i (1 <= i <= log2 n) of length n over a padded
/// instance. B-side vertices anchor at n + f(v); A-side vertices anchor at
/// the largest position among their B-side neighbours, or 0 if none.
/// Throws std::invalid_argument on any precondition violation, including an
/// ordering without the closure property.
UnitIntervalRepresentation build_layer(const Graph& padded, const VertexOrdering& f, int n,
                                       int layer);

/// Every intermediate of the interval-to-cube construction.
struct CubeConstruction {
  Graph graph;                                     // intersection graph of the input
  PaddedInstance padded;                           // empty graph if short-circuited
  std::vector<UnitIntervalRepresentation> layers;  // over the padded vertex set
  CubeRepresentation cube;                         // restricted to original vertices
};

/// Cube representation of the interval graph of `rep` in ceil(log2 n)
/// dimensions with side 2^ceil(log2 n), or 0 dimensions if that graph is
/// complete. Requires n >= 1.
CubeRepresentation interval_to_cube(const IntervalRepresentation& rep);
CubeConstruction interval_to_cube_traced(const IntervalRepresentation& rep);

struct LayerReport {
  std::vector<bool> superset_ok;          // per layer: E(layer) contains E(G)
  bool intersection_ok = false;           // edge intersection of layers equals E(G)
  std::vector<DiameterReport> diameters;  // per layer
  std::vector<Graph> layer_graphs;

  bool all_ok() const;
};

LayerReport verify_layers(const Graph& g, const std::vector<UnitIntervalRepresentation>& layers);

}  // namespace boxcube
