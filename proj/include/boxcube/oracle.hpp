#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "boxcube/graph.hpp"
#include "boxcube/interval.hpp"

namespace boxcube {

inline constexpr int kDefaultOracleLimit = 6;

/// Hard ceiling on the oracle: supergraphs are encoded as 64-bit edge masks.
inline constexpr int kOracleMaskCeiling = 11;

enum class Parameter { Boxicity, Cubicity };

std::string_view to_string(Parameter p);
Parameter parse_parameter(std::string_view name);

/// value is empty iff the search gave up at max_b (exceeded == true).
/// witness holds `value` interval representations whose intersection graphs
/// have edge intersection E(G); for cubicity every one of them uses a single
/// shared length.
struct OracleResult {
  Parameter parameter = Parameter::Boxicity;
  std::optional<int> value;
  bool exceeded = false;
  std::vector<IntervalRepresentation> witness;
};

/// Smallest b <= max_b such that E(G) is the intersection of b
/// indifference-graph edge sets on V(G).
OracleResult cubicity_oracle(const Graph& g, int max_b, int limit = kDefaultOracleLimit);

/// Smallest b <= max_b such that E(G) is the intersection of b interval-graph
/// edge sets on V(G).
OracleResult boxicity_oracle(const Graph& g, int max_b, int limit = kDefaultOracleLimit);

OracleResult run_oracle(Parameter parameter, const Graph& g, int max_b,
                        int limit = kDefaultOracleLimit);

/// Independent re-check of a result: witness size, per-layer class
/// membership and the edge-intersection identity.
bool verify_oracle_witness(const Graph& g, const OracleResult& result,
                           int recognizer_limit = kDefaultRecognizerLimit);

}  // namespace boxcube
