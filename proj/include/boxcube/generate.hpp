#pragma once

#include <cstdint>
#include <string_view>

#include "boxcube/box.hpp"
#include "boxcube/interval.hpp"

namespace boxcube {

/// n intervals with integer endpoints drawn uniformly from [1, 2n]
/// (std::mt19937_64 seeded with `seed`). Deterministic for a given build.
IntervalRepresentation random_interval_rep(int n, std::uint64_t seed);

/// n boxes whose coordinates are independent random_interval_rep draws.
BoxRepresentation random_box_rep(int n, int dims, std::uint64_t seed);

/// Interval witnesses for the interval-graph fixture families.
IntervalRepresentation star_interval_rep(int n);      // centre [0, n], leaves [v, v]
IntervalRepresentation path_interval_rep(int n);      // v -> [v, v + 1]
IntervalRepresentation complete_interval_rep(int n);  // all [0, 1]

}  // namespace boxcube
