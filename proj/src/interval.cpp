#include "boxcube/interval.hpp"

#include <limits>
#include <numeric>

#include "permutation_search.hpp"

namespace boxcube {

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (intervals_[v].lo > intervals_[v].hi) {
      throw std::invalid_argument("interval representation: vertex " + std::to_string(v) +
                                  " has left endpoint greater than right endpoint");
    }
  }
}

UnitIntervalRepresentation::UnitIntervalRepresentation(std::vector<Rational> anchors,
                                                       Rational length)
    : anchors_(std::move(anchors)), length_(length) {
  if (length_ <= 0) throw std::invalid_argument("unit interval representation: length must be positive");
}

IntervalRepresentation UnitIntervalRepresentation::to_intervals() const {
  std::vector<Interval> out;
  out.reserve(anchors_.size());
  for (const auto& a : anchors_) out.push_back({a, a + length_});
  return IntervalRepresentation(std::move(out));
}

VertexOrdering VertexOrdering::from_order(std::vector<Vertex> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> positions(order.size(), 0);
  for (int p = 0; p < n; ++p) {
    const Vertex v = order[static_cast<std::size_t>(p)];
    if (v < 0 || v >= n || positions[static_cast<std::size_t>(v)] != 0)
      throw std::invalid_argument("vertex ordering: not a bijection");
    positions[static_cast<std::size_t>(v)] = p + 1;
  }
  VertexOrdering f;
  f.order_ = std::move(order);
  f.positions_ = std::move(positions);
  return f;
}

VertexOrdering VertexOrdering::from_positions(std::vector<int> positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<Vertex> order(positions.size(), -1);
  for (Vertex v = 0; v < n; ++v) {
    const int p = positions[static_cast<std::size_t>(v)];
    if (p < 1 || p > n || order[static_cast<std::size_t>(p - 1)] != -1)
      throw std::invalid_argument("vertex ordering: not a bijection");
    order[static_cast<std::size_t>(p - 1)] = v;
  }
  VertexOrdering f;
  f.order_ = std::move(order);
  f.positions_ = std::move(positions);
  return f;
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return from_order(std::move(order));
}

Graph intersection_graph_of_intervals(const IntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  Graph g(n);
  const auto& iv = rep.intervals();
  // Each thread fills whole rows, so writes never collide.
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t* row = g.mutable_row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && intersects(iv[u], iv[v])) row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
  return g;
}

Graph intersection_graph_of_unit_intervals(const UnitIntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  Graph g(n);
  const auto& a = rep.anchors();
  const Rational len = rep.length();
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t* row = g.mutable_row(u);
    for (Vertex v = 0; v < n; ++v) {
      const Rational d = a[u] > a[v] ? a[u] - a[v] : a[v] - a[u];
      if (v != u && d <= len) row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
  return g;
}

VertexOrdering left_endpoint_ordering(const IntervalRepresentation& rep) {
  std::vector<Vertex> order(static_cast<std::size_t>(rep.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const auto& x = rep[a];
    const auto& y = rep[b];
    if (x.lo != y.lo) return x.lo < y.lo;
    if (x.hi != y.hi) return x.hi < y.hi;
    return a < b;
  });
  return VertexOrdering::from_order(std::move(order));
}

namespace {

void require_matching(const Graph& g, const VertexOrdering& f) {
  if (f.size() != g.vertex_count())
    throw std::invalid_argument("ordering size does not match graph vertex count");
}

}  // namespace

bool check_ordering_property(const Graph& g, const VertexOrdering& f) {
  require_matching(g, f);
  return detail::has_forward_closure(g, f.order());
}

bool check_unit_ordering_property(const Graph& g, const VertexOrdering& f) {
  require_matching(g, f);
  return detail::has_two_sided_closure(g, f.order());
}

IntervalRepresentation ordering_to_interval_rep(const Graph& g, const VertexOrdering& f) {
  if (!check_ordering_property(g, f))
    throw std::invalid_argument("ordering_to_interval_rep: ordering lacks the closure property");
  const int n = g.vertex_count();
  std::vector<Interval> out(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    int last = f.position(u);
    g.for_each_neighbor(u, [&](Vertex v) { last = std::max(last, f.position(v)); });
    out[static_cast<std::size_t>(u)] = {Rational(f.position(u)), Rational(last)};
  }
  return IntervalRepresentation(std::move(out));
}

UnitIntervalRepresentation unit_ordering_to_representation(const Graph& g,
                                                           const VertexOrdering& f) {
  if (!check_unit_ordering_property(g, f)) {
    throw std::invalid_argument(
        "unit_ordering_to_representation: ordering lacks the two-sided closure property");
  }
  const int n = g.vertex_count();
  const std::int64_t length = std::max(n, 1);

  // Difference constraints x[j] - x[i] <= w over order indices, solved by
  // Bellman-Ford from an implicit source at distance 0 to every node.
  struct Arc {
    int from, to;
    std::int64_t w;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i + 1, i, 0});  // x[i] <= x[i+1]
  for (int i = 0; i < n; ++i) {
    const Vertex u = f.order()[static_cast<std::size_t>(i)];
    int last = i;
    g.for_each_neighbor(u, [&](Vertex v) { last = std::max(last, f.position(v) - 1); });
    if (last > i) arcs.push_back({i, last, length});  // x[last] - x[i] <= L
    if (last + 1 < n) arcs.push_back({last + 1, i, -(length + 1)});  // x[last+1] - x[i] >= L+1
  }

  std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
  bool changed = true;
  for (int round = 0; round <= n && changed; ++round) {
    changed = false;
    for (const auto& a : arcs) {
      if (x[a.from] + a.w < x[a.to]) {
        x[a.to] = x[a.from] + a.w;
        changed = true;
      }
    }
  }
  if (changed) {
    // Unreachable when the two-sided property holds.
    throw std::logic_error("unit_ordering_to_representation: constraint system infeasible");
  }

  const std::int64_t lo = n == 0 ? 0 : *std::min_element(x.begin(), x.end());
  std::vector<Rational> anchors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    anchors[static_cast<std::size_t>(f.order()[static_cast<std::size_t>(i)])] = Rational(x[i] - lo);
  return UnitIntervalRepresentation(std::move(anchors), Rational(length));
}

namespace {

void check_limit(const char* what, const Graph& g, int limit) {
  if (g.vertex_count() > limit) throw SizeLimitError(what, g.vertex_count(), limit);
}

}  // namespace

std::optional<VertexOrdering> recognize_interval_brute(const Graph& g, int limit) {
  check_limit("recognize_interval_brute", g, limit);
  auto order = detail::first_ordering_parallel(
      g.vertex_count(), [&](const std::vector<Vertex>& o) { return detail::has_forward_closure(g, o); });
  if (!order) return std::nullopt;
  return VertexOrdering::from_order(std::move(*order));
}

std::optional<VertexOrdering> find_unit_interval_ordering(const Graph& g, int limit) {
  check_limit("recognize_unit_interval_brute", g, limit);
  auto order = detail::first_ordering_parallel(
      g.vertex_count(), [&](const std::vector<Vertex>& o) { return detail::has_two_sided_closure(g, o); });
  if (!order) return std::nullopt;
  return VertexOrdering::from_order(std::move(*order));
}

bool recognize_unit_interval_brute(const Graph& g, int limit) {
  return find_unit_interval_ordering(g, limit).has_value();
}

}  // namespace boxcube
