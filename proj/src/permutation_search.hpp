#pragma once

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <vector>

#include "boxcube/graph.hpp"

namespace boxcube::detail {

/// order[p] is the vertex at position p. For each u, every vertex strictly
/// between u and u's last later neighbour must be adjacent to u.
inline bool has_forward_closure(const Graph& g, const std::vector<Vertex>& order) {
  const int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p) {
    const Vertex u = order[p];
    int last = p;
    for (int q = n - 1; q > p; --q) {
      if (g.has_edge(u, order[q])) {
        last = q;
        break;
      }
    }
    for (int q = p + 1; q < last; ++q)
      if (!g.has_edge(u, order[q])) return false;
  }
  return true;
}

/// Forward closure plus its mirror image: every vertex strictly between v's
/// first earlier neighbour and v is adjacent to v.
inline bool has_two_sided_closure(const Graph& g, const std::vector<Vertex>& order) {
  if (!has_forward_closure(g, order)) return false;
  const int n = static_cast<int>(order.size());
  for (int q = 0; q < n; ++q) {
    const Vertex v = order[q];
    int first = q;
    for (int p = 0; p < q; ++p) {
      if (g.has_edge(v, order[p])) {
        first = p;
        break;
      }
    }
    for (int p = first + 1; p < q; ++p)
      if (!g.has_edge(v, order[p])) return false;
  }
  return true;
}

/// Lexicographically first vertex sequence satisfying pred, enumerated
/// serially with std::next_permutation.
template <typename Pred>
std::optional<std::vector<Vertex>> first_ordering_serial(int n, Pred&& pred) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (pred(order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

/// Same result as first_ordering_serial. Subtrees rooted at each choice of
/// first vertex are searched concurrently; the smallest first vertex with a
/// hit wins, and subtrees above the current best are abandoned.
template <typename Pred>
std::optional<std::vector<Vertex>> first_ordering_parallel(int n, Pred&& pred) {
  if (n <= 1) return first_ordering_serial(n, pred);
  std::vector<std::optional<std::vector<Vertex>>> hits(static_cast<std::size_t>(n));
  std::atomic<int> best{n};

#pragma omp parallel for schedule(dynamic, 1)
  for (int head = 0; head < n; ++head) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    order[0] = head;
    for (int v = 0, k = 1; v < n; ++v)
      if (v != head) order[static_cast<std::size_t>(k++)] = v;
    do {
      if (best.load(std::memory_order_relaxed) < head) break;
      if (pred(order)) {
        hits[static_cast<std::size_t>(head)] = order;
        int cur = best.load();
        while (head < cur && !best.compare_exchange_weak(cur, head)) {
        }
        break;
      }
    } while (std::next_permutation(order.begin() + 1, order.end()));
  }

  for (auto& h : hits)
    if (h) return std::move(h);
  return std::nullopt;
}

}  // namespace boxcube::detail
