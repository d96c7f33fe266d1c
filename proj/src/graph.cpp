#include "boxcube/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace boxcube {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_) {
    throw std::invalid_argument("graph: vertex " + std::to_string(u) + " out of range [0, " +
                                std::to_string(n_) + ")");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
  rows_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : rows_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  std::vector<Vertex> out;
  for_each_neighbor(u, [&](Vertex v) { out.push_back(v); });
  return out;
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  int d = 0;
  const auto* r = row(u);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star: n must be at least 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: negative n");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  if (n < 0) throw std::invalid_argument("path: negative n");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 0) throw std::invalid_argument("complete_multipartite: negative part size");
    part.insert(part.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part.size());
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

Graph edge_intersection(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw std::invalid_argument("edge_intersection: empty list");
  Graph out = graphs.front();
  for (const auto& g : graphs) {
    if (g.vertex_count() != out.vertex_count())
      throw std::invalid_argument("edge_intersection: vertex counts differ");
  }
  for (std::size_t k = 1; k < graphs.size(); ++k) {
    for (Vertex u = 0; u < out.vertex_count(); ++u) {
      std::uint64_t* dst = out.mutable_row(u);
      const std::uint64_t* src = graphs[k].row(u);
      for (std::size_t w = 0; w < out.words(); ++w) dst[w] &= src[w];
    }
  }
  return out;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

Graph add_isolated(const Graph& g, int count) {
  if (count < 0) throw std::invalid_argument("add_isolated: negative count");
  Graph out(g.vertex_count() + count);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    g.for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.add_edge(u, v);
    });
  }
  return out;
}

Graph restrict_to_prefix(const Graph& g, int k) {
  if (k < 0 || k > g.vertex_count()) throw std::invalid_argument("restrict_to_prefix: bad size");
  Graph out(k);
  for (Vertex u = 0; u < k; ++u) {
    g.for_each_neighbor(u, [&](Vertex v) {
      if (u < v && v < k) out.add_edge(u, v);
    });
  }
  return out;
}

DiameterReport diameter(const Graph& g) {
  const int n = g.vertex_count();
  DiameterReport report;
  std::vector<int> component(n, -1);
  std::vector<int> dist(n);
  std::vector<std::vector<Vertex>> members;

  for (Vertex s = 0; s < n; ++s) {
    if (component[s] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    component[s] = id;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      members[id].push_back(u);
      g.for_each_neighbor(u, [&](Vertex v) {
        if (component[v] == -1) {
          component[v] = id;
          q.push(v);
        }
      });
    }
  }

  for (const auto& comp : members) {
    int ecc_max = 0;
    for (Vertex s : comp) {
      for (Vertex v : comp) dist[v] = -1;
      std::queue<Vertex> q;
      q.push(s);
      dist[s] = 0;
      while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        ecc_max = std::max(ecc_max, dist[u]);
        g.for_each_neighbor(u, [&](Vertex v) {
          if (dist[v] == -1) {
            dist[v] = dist[u] + 1;
            q.push(v);
          }
        });
      }
    }
    report.component_diameters.push_back(ecc_max);
    report.max_diameter = std::max(report.max_diameter, ecc_max);
  }
  report.connected = members.size() <= 1;
  return report;
}

EdgeDiff edge_diff(const Graph& expected, const Graph& actual) {
  if (expected.vertex_count() != actual.vertex_count())
    throw std::invalid_argument("edge_diff: vertex counts differ");
  EdgeDiff diff;
  const int n = expected.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool e = expected.has_edge(u, v);
      const bool a = actual.has_edge(u, v);
      if (e && !a) diff.missing.emplace_back(u, v);
      if (a && !e) diff.extra.emplace_back(u, v);
    }
  }
  return diff;
}

}  // namespace boxcube
