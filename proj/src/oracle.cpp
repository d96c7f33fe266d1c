#include "boxcube/oracle.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "permutation_search.hpp"

namespace boxcube {

std::string_view to_string(Parameter p) {
  return p == Parameter::Boxicity ? "boxicity" : "cubicity";
}

Parameter parse_parameter(std::string_view name) {
  if (name == "boxicity") return Parameter::Boxicity;
  if (name == "cubicity") return Parameter::Cubicity;
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

namespace {

using Mask = std::uint64_t;

// Bit index of each unordered pair u < v, in lexicographic pair order.
struct PairIndex {
  explicit PairIndex(int n) : n(n) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  int n;
  std::vector<Edge> pairs;
};

Graph graph_from_mask(const PairIndex& idx, Mask mask) {
  Graph g(idx.n);
  for (std::size_t b = 0; b < idx.pairs.size(); ++b)
    if ((mask >> b) & 1u) g.add_edge(idx.pairs[b].first, idx.pairs[b].second);
  return g;
}

Mask mask_from_graph(const PairIndex& idx, const Graph& g) {
  Mask m = 0;
  for (std::size_t b = 0; b < idx.pairs.size(); ++b)
    if (g.has_edge(idx.pairs[b].first, idx.pairs[b].second)) m |= Mask{1} << b;
  return m;
}

bool in_class(Parameter p, const Graph& h) {
  const int n = h.vertex_count();
  if (p == Parameter::Boxicity)
    return detail::first_ordering_serial(n, [&](const auto& o) { return detail::has_forward_closure(h, o); })
        .has_value();
  return detail::first_ordering_serial(n, [&](const auto& o) { return detail::has_two_sided_closure(h, o); })
      .has_value();
}

// Class membership memo shared by all oracle calls, keyed by
// (parameter, n, edge mask).
class MembershipCache {
 public:
  static MembershipCache& instance() {
    static MembershipCache cache;
    return cache;
  }

  std::vector<char> classify(Parameter p, const PairIndex& idx, const std::vector<Mask>& masks) {
    std::vector<char> out(masks.size(), 0);
    std::vector<std::size_t> todo;
    {
      std::lock_guard lock(mu_);
      for (std::size_t i = 0; i < masks.size(); ++i) {
        auto it = memo_.find(key(p, idx.n, masks[i]));
        if (it == memo_.end())
          todo.push_back(i);
        else
          out[i] = it->second;
      }
    }
    const auto count = static_cast<std::int64_t>(todo.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t t = 0; t < count; ++t) {
      const std::size_t i = todo[static_cast<std::size_t>(t)];
      out[i] = in_class(p, graph_from_mask(idx, masks[i])) ? 1 : 0;
    }
    std::lock_guard lock(mu_);
    for (std::size_t i : todo) memo_.emplace(key(p, idx.n, masks[i]), out[i]);
    return out;
  }

 private:
  static Mask key(Parameter p, int n, Mask m) {
    return m | (static_cast<Mask>(n) << 56) | (static_cast<Mask>(p == Parameter::Cubicity) << 62);
  }
  std::mutex mu_;
  std::unordered_map<Mask, char> memo_;
};

struct Candidate {
  Mask supergraph;  // edge mask of H over all pairs
  Mask kills;       // non-edges of G absent from H, over non-edge indices
};

class CoverSearch {
 public:
  explicit CoverSearch(std::vector<Candidate> candidates) : candidates_(std::move(candidates)) {
    for (const auto& c : candidates_) widest_ = std::max(widest_, std::popcount(c.kills));
  }

  std::optional<std::vector<std::size_t>> solve(Mask universe, int depth) {
    chosen_.clear();
    if (dfs(universe, depth)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(Mask uncovered, int depth) {
    if (uncovered == 0) return true;
    if (depth == 0) return false;
    if (std::popcount(uncovered) > depth * widest_) return false;
    const Mask first = uncovered & (~uncovered + 1);
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if ((candidates_[c].kills & first) == 0) continue;
      chosen_.push_back(c);
      if (dfs(uncovered & ~candidates_[c].kills, depth - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Candidate> candidates_;
  std::vector<std::size_t> chosen_;
  int widest_ = 0;
};

IntervalRepresentation witness_layer(Parameter p, const Graph& h) {
  if (p == Parameter::Boxicity) {
    auto f = recognize_interval_brute(h, h.vertex_count());
    return ordering_to_interval_rep(h, *f);
  }
  auto f = find_unit_interval_ordering(h, h.vertex_count());
  return unit_ordering_to_representation(h, *f).to_intervals();
}

}  // namespace

OracleResult run_oracle(Parameter parameter, const Graph& g, int max_b, int limit) {
  const int n = g.vertex_count();
  const char* name = parameter == Parameter::Boxicity ? "boxicity_oracle" : "cubicity_oracle";
  if (max_b < 0) throw std::invalid_argument(std::string(name) + ": max_b must be non-negative");
  if (n > limit) throw SizeLimitError(name, n, limit);
  if (n > kOracleMaskCeiling) throw SizeLimitError(name, n, kOracleMaskCeiling);

  OracleResult result;
  result.parameter = parameter;
  if (is_complete(g)) {
    result.value = 0;
    return result;
  }

  const PairIndex idx(n);
  const Mask base = mask_from_graph(idx, g);
  std::vector<int> non_edges;
  for (std::size_t b = 0; b < idx.pairs.size(); ++b)
    if (((base >> b) & 1u) == 0) non_edges.push_back(static_cast<int>(b));
  const int m = static_cast<int>(non_edges.size());

  // Every supergraph H of G, indexed by the subset of G's non-edges it adds.
  std::vector<Mask> supergraphs(std::size_t{1} << m);
  for (Mask s = 0; s < supergraphs.size(); ++s) {
    Mask h = base;
    for (int j = 0; j < m; ++j)
      if ((s >> j) & 1u) h |= Mask{1} << non_edges[static_cast<std::size_t>(j)];
    supergraphs[s] = h;
  }
  const auto member = MembershipCache::instance().classify(parameter, idx, supergraphs);

  const Mask universe = (Mask{1} << m) - 1;

  // Only inclusion-maximal kill sets matter for a cover, i.e. supergraphs
  // adding a minimal set of non-edges. below[s]: some subset of s is a member.
  const std::size_t count = supergraphs.size();
  std::vector<char> below(member.begin(), member.end());
  for (int j = 0; j < m; ++j)
    for (Mask s = 0; s < count; ++s)
      if ((s >> j) & 1u) below[s] = below[s] || below[s ^ (Mask{1} << j)];

  std::vector<Candidate> maximal;
  for (Mask s = 0; s < universe; ++s) {
    if (!member[s]) continue;
    bool minimal = true;
    for (int j = 0; j < m && minimal; ++j)
      if ((s >> j) & 1u) minimal = !below[s ^ (Mask{1} << j)];
    if (minimal) maximal.push_back({supergraphs[s], universe & ~s});
  }

  CoverSearch search(maximal);
  for (int b = 1; b <= max_b; ++b) {
    auto picks = search.solve(universe, b);
    if (!picks) continue;
    result.value = b;
    for (std::size_t c : *picks)
      result.witness.push_back(witness_layer(parameter, graph_from_mask(idx, maximal[c].supergraph)));
    return result;
  }
  result.exceeded = true;
  return result;
}

OracleResult cubicity_oracle(const Graph& g, int max_b, int limit) {
  return run_oracle(Parameter::Cubicity, g, max_b, limit);
}

OracleResult boxicity_oracle(const Graph& g, int max_b, int limit) {
  return run_oracle(Parameter::Boxicity, g, max_b, limit);
}

bool verify_oracle_witness(const Graph& g, const OracleResult& result, int recognizer_limit) {
  if (result.exceeded) return !result.value.has_value();
  if (!result.value) return false;
  if (static_cast<int>(result.witness.size()) != *result.value) return false;
  if (*result.value == 0) return is_complete(g);

  std::vector<Graph> layers;
  for (const auto& rep : result.witness) {
    if (rep.vertex_count() != g.vertex_count()) return false;
    Graph h = intersection_graph_of_intervals(rep);
    if (result.parameter == Parameter::Cubicity) {
      const Rational len = rep[0].hi - rep[0].lo;
      for (const auto& iv : rep.intervals())
        if (iv.hi - iv.lo != len) return false;
      if (!recognize_unit_interval_brute(h, recognizer_limit)) return false;
    } else if (!recognize_interval_brute(h, recognizer_limit)) {
      return false;
    }
    layers.push_back(std::move(h));
  }
  return edge_intersection(layers) == g;
}

}  // namespace boxcube
