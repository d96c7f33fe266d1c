#pragma once

// Serial reference implementations of the OpenMP kernels. They share no
// loop code with the parallel versions and exist for cross-checking in tests
// and for the benchmark baseline.

#include <optional>

#include "boxcube/box.hpp"
#include "boxcube/cube.hpp"
#include "boxcube/interval.hpp"

namespace boxcube::reference {

Graph intersection_graph_of_intervals(const IntervalRepresentation& rep);
Graph intersection_graph_of_boxes(const BoxRepresentation& rep);
Graph intersection_graph_of_cubes(const CubeRepresentation& rep);

std::optional<VertexOrdering> recognize_interval_brute(const Graph& g,
                                                       int limit = kDefaultRecognizerLimit);
std::optional<VertexOrdering> find_unit_interval_ordering(const Graph& g,
                                                          int limit = kDefaultRecognizerLimit);

/// Layers built one after another through build_layer.
CubeRepresentation interval_to_cube(const IntervalRepresentation& rep);
CubeRepresentation box_to_cube(const BoxRepresentation& rep);

}  // namespace boxcube::reference
