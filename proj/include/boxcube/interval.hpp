#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcube/graph.hpp"
#include "boxcube/rational.hpp"

namespace boxcube {

inline constexpr int kDefaultRecognizerLimit = 8;

/// Raised when a factorial- or exponential-time routine is asked to run on
/// an instance above its configured size limit.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(const std::string& what, int n, int limit)
      : std::runtime_error(what + ": n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

/// Closed interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed intervals touch-or-overlap.
inline bool intersects(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

/// One closed interval per vertex.
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  /// Throws std::invalid_argument if some interval has lo > hi.
  explicit IntervalRepresentation(std::vector<Interval> intervals);

  int vertex_count() const { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](Vertex v) const { return intervals_[static_cast<std::size_t>(v)]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Intervals [anchor(v), anchor(v) + length] sharing one positive length.
class UnitIntervalRepresentation {
 public:
  UnitIntervalRepresentation() = default;
  UnitIntervalRepresentation(std::vector<Rational> anchors, Rational length);

  int vertex_count() const { return static_cast<int>(anchors_.size()); }
  const std::vector<Rational>& anchors() const { return anchors_; }
  const Rational& anchor(Vertex v) const { return anchors_[static_cast<std::size_t>(v)]; }
  const Rational& length() const { return length_; }

  IntervalRepresentation to_intervals() const;

  friend bool operator==(const UnitIntervalRepresentation&,
                         const UnitIntervalRepresentation&) = default;

 private:
  std::vector<Rational> anchors_;
  Rational length_{1};
};

/// Bijection f: V -> {1, ..., n}.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// order[p] is the vertex placed at position p + 1.
  static VertexOrdering from_order(std::vector<Vertex> order);
  /// positions[v] = f(v), 1-based.
  static VertexOrdering from_positions(std::vector<int> positions);
  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  /// f(v), 1-based.
  int position(Vertex v) const { return positions_[static_cast<std::size_t>(v)]; }
  /// Vertex at 1-based position p.
  Vertex at(int p) const { return order_[static_cast<std::size_t>(p - 1)]; }
  const std::vector<Vertex>& order() const { return order_; }
  const std::vector<int>& positions() const { return positions_; }

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<int> positions_;
};

Graph intersection_graph_of_intervals(const IntervalRepresentation& rep);
Graph intersection_graph_of_unit_intervals(const UnitIntervalRepresentation& rep);

/// Sort by (left endpoint, right endpoint, vertex id), all ascending.
VertexOrdering left_endpoint_ordering(const IntervalRepresentation& rep);

/// True iff f(u) < f(w) < f(v) and uv in E always imply uw in E.
bool check_ordering_property(const Graph& g, const VertexOrdering& f);

/// Two-sided closure: f(u) < f(w) < f(v) and uv in E imply uw and wv in E.
/// This is the proper-interval (indifference) ordering condition.
bool check_unit_ordering_property(const Graph& g, const VertexOrdering& f);

/// u -> [f(u), m(u)] with m(u) the largest position among u and its later
/// neighbours. Throws std::invalid_argument unless check_ordering_property
/// holds.
IntervalRepresentation ordering_to_interval_rep(const Graph& g, const VertexOrdering& f);

/// Realizes a two-sided closure ordering as unit intervals of length
/// max(n, 1) with integer anchors that are non-decreasing along f.
/// Throws std::invalid_argument if f lacks the two-sided property.
UnitIntervalRepresentation unit_ordering_to_representation(const Graph& g,
                                                           const VertexOrdering& f);

/// Exhaustive search over all n! orderings. Returns the lexicographically
/// smallest (by vertex sequence along positions) ordering with the
/// one-sided property, or nullopt if G is not an interval graph.
std::optional<VertexOrdering> recognize_interval_brute(const Graph& g,
                                                       int limit = kDefaultRecognizerLimit);

/// As recognize_interval_brute, for the two-sided property.
std::optional<VertexOrdering> find_unit_interval_ordering(const Graph& g,
                                                          int limit = kDefaultRecognizerLimit);

bool recognize_unit_interval_brute(const Graph& g, int limit = kDefaultRecognizerLimit);

}  // namespace boxcube
