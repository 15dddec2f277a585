#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bturan/errors.hpp"
#include "bturan/graph.hpp"

namespace bturan {

inline constexpr int kDefaultCanonicalCap = 12;

/// Isomorphism-class key: the upper triangle (column-major, big-endian bits)
/// of the lexicographically greatest adjacency matrix over the relabelings
/// the search admits. Keys compare equal iff the graphs are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> key;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Packs the labeled matrix as-is. For a graph already in canonical labeling
/// this is its canonical form.
inline CanonicalForm pack_labeled(const Graph& g) {
  const int n = g.order();
  CanonicalForm f{n, std::vector<std::uint8_t>((n * (n - 1) / 2 + 7) / 8, 0)};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) f.key[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
    }
  }
  return f;
}

namespace detail {

inline bool twins(const Graph& g, int u, int v) {
  const VertexSet ignore = bit(u) | bit(v);
  return ((g.neighbors(u) ^ g.neighbors(v)) & ~ignore) == 0;
}

}  // namespace detail

/// Stable colour classes from iterated degree refinement. Colours are ranks
/// of structural signatures, so the result is invariant under relabeling.
/// Colour 0 holds the highest degrees; the last colour is a subset of the
/// minimum-degree vertices.
inline std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  {
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::vector<int> distinct = degs;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), degs[v], std::greater<>()) -
                                  distinct.begin());
    }
  }
  int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> sig(n);
  while (classes < n) {
    for (int v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(color[v]);
      for_each_vertex(g.neighbors(v), [&](int u) { sig[v].push_back(color[u]); });
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    if (static_cast<int>(keys.size()) == classes) break;
    classes = static_cast<int>(keys.size());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    }
  }
  return color;
}

struct CanonicalLabeling {
  std::vector<int> order;  // order[position] = original vertex
  CanonicalForm form;
};

namespace detail {

// Branch and bound over orderings that list colour classes in colour order.
// Columns of the upper triangle are fixed one position at a time, so a
// prefix that is already smaller than the champion's can be cut. Swapping two
// unplaced twins is an automorphism fixing the prefix, so only one twin per
// class is branched on.
class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, const std::vector<int>& color) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      members_[color[v]] |= bit(v);
    }
    int p = 0;
    for (int c = 0; p < n_; ++c) {
      for (int i = 0; i < popcount(members_[c]); ++i) cell_at_[p++] = c;
    }
    best_col_.fill(-1);
  }

  std::vector<int> run() {
    dfs(0, 0);
    return {best_.begin(), best_.begin() + n_};
  }

 private:
  std::int64_t column(int p, int v) const {
    std::int64_t col = 0;
    for (int j = 0; j < p; ++j) {
      col = (col << 1) | (g_.adjacent(cur_[j], v) ? 1 : 0);
    }
    return col;
  }

  void dfs(int p, VertexSet placed) {
    if (p == n_) {
      // Reaching a leaf means every column was >= the champion's.
      best_ = cur_;
      return;
    }
    const VertexSet cands = members_[cell_at_[p]] & ~placed;
    VertexSet tried = 0;
    for_each_vertex(cands, [&](int v) {
      bool redundant = false;
      for_each_vertex(tried, [&](int t) { redundant = redundant || twins(g_, v, t); });
      if (redundant) return;
      tried |= bit(v);
      const std::int64_t col = column(p, v);
      if (col < best_col_[p]) return;
      if (col > best_col_[p]) {
        best_col_[p] = col;
        std::fill(best_col_.begin() + p + 1, best_col_.end(), -1);
      }
      cur_[p] = v;
      dfs(p + 1, placed | bit(v));
    });
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kMaxVertices> members_{};
  std::array<int, kMaxVertices> cell_at_{};
  std::array<int, kMaxVertices> cur_{};
  std::array<int, kMaxVertices> best_{};
  std::array<std::int64_t, kMaxVertices> best_col_{};
};

}  // namespace detail

inline void check_canonical_cap(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw SizeLimit("canonical labeling capped at " + std::to_string(cap) + " vertices, got " +
                    std::to_string(g.order()));
  }
}

/// Labeling for a caller that already holds refine_colors(g).
inline CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors) {
  std::vector<int> order = detail::CanonicalSearch(g, colors).run();
  CanonicalForm form = pack_labeled(g.permuted(order));
  return {std::move(order), std::move(form)};
}

inline CanonicalLabeling canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap) {
  check_canonical_cap(g, cap);
  return canonical_labeling(g, refine_colors(g));
}

inline CanonicalForm canonical(const Graph& g, int cap = kDefaultCanonicalCap) {
  return canonical_labeling(g, cap).form;
}

inline Graph canonical_graph(const Graph& g, int cap = kDefaultCanonicalCap) {
  return g.permuted(canonical_labeling(g, cap).order);
}

inline bool isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical(a, cap) == canonical(b, cap);
}

}  // namespace bturan
