#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace boxcube {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Adjacency is held as one bit row per vertex, so membership queries are
/// O(1) and row scans are word-parallel. Rows are kept symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;

  bool has_edge(Vertex u, Vertex v) const {
    return u != v && ((rows_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u);
  }

  /// Idempotent. Self-loops and out-of-range vertices throw
  /// std::invalid_argument.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex u) const;
  int degree(Vertex u) const;

  /// Calls fn(v) for every neighbour v of u in increasing order.
  template <typename Fn>
  void for_each_neighbor(Vertex u, Fn&& fn) const {
    const std::uint64_t* row = rows_.data() + row_offset(u);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  /// Raw bit row of u; bit v set iff (u, v) is an edge. Length words().
  const std::uint64_t* row(Vertex u) const { return rows_.data() + row_offset(u); }
  std::uint64_t* mutable_row(Vertex u) { return rows_.data() + row_offset(u); }
  std::size_t words() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t row_offset(Vertex u) const { return static_cast<std::size_t>(u) * words_; }
  void check_vertex(Vertex u) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Generators.
Graph star(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);

/// Edge (u, v) present iff present in every input.
Graph edge_intersection(const std::vector<Graph>& graphs);

bool is_complete(const Graph& g);

/// Appends `count` isolated vertices numbered n, ..., n+count-1.
Graph add_isolated(const Graph& g, int count);

/// Induced subgraph on vertices 0..k-1.
Graph restrict_to_prefix(const Graph& g, int k);

struct DiameterReport {
  int max_diameter = 0;                  // largest component diameter
  bool connected = true;                 // false if more than one component
  std::vector<int> component_diameters;  // by smallest vertex of each component
};

DiameterReport diameter(const Graph& g);

/// Edges of `expected` absent from `actual`, and edges of `actual` absent
/// from `expected`. Both graphs must have the same vertex count.
struct EdgeDiff {
  std::vector<Edge> missing;
  std::vector<Edge> extra;
  bool empty() const { return missing.empty() && extra.empty(); }
};

EdgeDiff edge_diff(const Graph& expected, const Graph& actual);

}  // namespace boxcube
