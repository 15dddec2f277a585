#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bturan/errors.hpp"

namespace bturan {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

// Calls fn(v) for every member of s in increasing order.
template <class Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : bit(n) - 1;
}

/// Small simple undirected graph, one 64-bit neighbourhood mask per vertex.
///
/// Values are immutable: every modifier returns a new graph. Symmetry and
/// the absence of loops hold by construction.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices, 0 <= n <= 64.
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw InvalidParameter("graph order must be in [0, 64], got " + std::to_string(n));
    }
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  /// Builds a graph from neighbourhood rows; rejects asymmetric rows and loops.
  static Graph from_rows(std::span<const VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    const VertexSet mask = all_vertices(g.n_);
    for (int v = 0; v < g.n_; ++v) {
      if ((rows[v] & ~mask) != 0 || (rows[v] & bit(v)) != 0) {
        throw InvalidParameter("adjacency row " + std::to_string(v) + " has a loop or an out-of-range vertex");
      }
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < g.n_; ++v) {
      for_each_vertex(g.adj_[v], [&](int u) {
        if ((g.adj_[u] & bit(v)) == 0) throw InvalidParameter("adjacency rows are not symmetric");
      });
    }
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] & bit(v)) != 0; }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v) {
      for_each_vertex(adj_[v] & ~all_vertices(v + 1), [&](int u) { out.emplace_back(v, u); });
    }
    return out;
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.set_edge(u, v);
    return g;
  }

  Graph without_edge(int u, int v) const {
    check_pair(u, v);
    Graph g = *this;
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    return g;
  }

  /// Appends vertex n adjacent to exactly `nbrs`.
  Graph with_vertex(VertexSet nbrs) const {
    if (n_ == kMaxVertices) throw InvalidParameter("graph already has 64 vertices");
    if ((nbrs & ~vertices()) != 0) throw InvalidParameter("new vertex neighbourhood out of range");
    Graph g = *this;
    const int w = g.n_++;
    g.adj_[w] = nbrs;
    for_each_vertex(nbrs, [&](int u) { g.adj_[u] |= bit(w); });
    return g;
  }

  /// Removes vertex v; vertices above v shift down by one.
  Graph without_vertex(int v) const {
    check_vertex(v);
    Graph g(n_ - 1);
    const VertexSet low = all_vertices(v);
    for (int u = 0, t = 0; u < n_; ++u) {
      if (u == v) continue;
      const VertexSet row = adj_[u];
      g.adj_[t++] = (row & low) | ((row >> 1) & ~low);
    }
    return g;
  }

  /// Relabels so that new vertex i is old vertex order[i].
  Graph permuted(std::span<const int> order) const {
    Graph g(n_);
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for_each_vertex(adj_[order[i]], [&](int u) { row |= bit(pos[u]); });
      g.adj_[i] = row;
    }
    return g;
  }

  VertexSet component_of(int v) const {
    VertexSet seen = bit(v), frontier = bit(v);
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int u) { next |= adj_[u]; });
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  bool is_connected() const { return n_ == 0 || component_of(0) == vertices(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidParameter("loops are not allowed");
  }
  void set_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Common small graphs used throughout tests and constructions.
inline Graph make_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs at least 3 vertices");
  return make_path(n).with_edge(n - 1, 0);
}

inline Graph make_complete(int n) {
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = all_vertices(n) & ~bit(v);
  return Graph::from_rows(rows);
}

/// Star S_n: centre 0 joined to n-1 leaves.
inline Graph make_star(int n) {
  if (n < 1) throw InvalidParameter("star needs at least 1 vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g = g.with_edge(0, v);
  return g;
}

}  // namespace bturan
