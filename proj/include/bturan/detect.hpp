#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "bturan/families.hpp"
#include "bturan/graph.hpp"

namespace bturan {

/// A concrete copy of B(ell, s): `path` lists the ell path vertices in order,
/// the centre is path[ell-2], and `leaves` are its s extra neighbours.
struct BroomWitness {
  std::vector<int> path;
  std::vector<int> leaves;
};

/// True iff the witness is a subgraph copy of B(spec) in g.
inline bool is_valid_broom_witness(const Graph& g, const BroomSpec& spec, const BroomWitness& w) {
  if (static_cast<int>(w.path.size()) != spec.ell() || static_cast<int>(w.leaves.size()) != spec.s()) return false;
  VertexSet used = 0;
  for (int v : w.path) {
    if (v < 0 || v >= g.order() || (used & bit(v))) return false;
    used |= bit(v);
  }
  for (int v : w.leaves) {
    if (v < 0 || v >= g.order() || (used & bit(v))) return false;
    used |= bit(v);
  }
  for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
    if (!g.adjacent(w.path[i], w.path[i + 1])) return false;
  }
  const int centre = w.path[spec.ell() - 2];
  return std::all_of(w.leaves.begin(), w.leaves.end(), [&](int v) { return g.adjacent(centre, v); });
}

namespace detail {

// Depth-first search over simple paths. A path x1..x(ell-1) completes to a
// broom with penultimate x(ell-1) iff x(ell-1) has at least s+1 neighbours
// off the path (one closes the path, s become leaves). Path reversal covers
// the other penultimate vertex, so only this end is checked.
template <bool kWantWitness>
class BroomFinder {
 public:
  BroomFinder(const Graph& g, const BroomSpec& spec) : g_(g), spec_(spec) {}

  bool run() {
    const int n = g_.order();
    if (n < spec_.order()) return false;
    std::array<int, kMaxVertices> starts{};
    for (int v = 0; v < n; ++v) starts[v] = v;
    std::stable_sort(starts.begin(), starts.begin() + n, [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
    for (int i = 0; i < n; ++i) {
      path_[0] = starts[i];
      if (extend(1, bit(starts[i]))) return true;
    }
    return false;
  }

  BroomWitness witness() const { return witness_; }

 private:
  bool extend(int len, VertexSet on_path) {
    const int last = path_[len - 1];
    const VertexSet off = g_.neighbors(last) & ~on_path;
    if (len == spec_.ell() - 1) {
      if (popcount(off) < spec_.s() + 1) return false;
      if constexpr (kWantWitness) {
        witness_.path.assign(path_.begin(), path_.begin() + len);
        VertexSet rest = off;
        const int end = std::countr_zero(rest);
        rest &= rest - 1;
        witness_.path.push_back(end);
        witness_.leaves.clear();
        for (int i = 0; i < spec_.s(); ++i) {
          witness_.leaves.push_back(std::countr_zero(rest));
          rest &= rest - 1;
        }
      }
      return true;
    }
    VertexSet next = off;
    while (next != 0) {
      const int v = std::countr_zero(next);
      next &= next - 1;
      path_[len] = v;
      if (extend(len + 1, on_path | bit(v))) return true;
    }
    return false;
  }

  const Graph& g_;
  const BroomSpec& spec_;
  std::array<int, kMaxVertices> path_{};
  BroomWitness witness_;
};

}  // namespace detail

inline bool contains_broom(const Graph& g, const BroomSpec& spec) {
  return detail::BroomFinder<false>(g, spec).run();
}

inline std::optional<BroomWitness> find_broom(const Graph& g, const BroomSpec& spec) {
  detail::BroomFinder<true> finder(g, spec);
  if (!finder.run()) return std::nullopt;
  return finder.witness();
}

inline bool is_broom_free(const Graph& g, const BroomSpec& spec) { return !contains_broom(g, spec); }

namespace detail {

inline bool has_path_from(const Graph& g, int v, int vertices_left, VertexSet on_path) {
  if (vertices_left == 0) return true;
  bool found = false;
  for_each_vertex(g.neighbors(v) & ~on_path, [&](int u) {
    found = found || has_path_from(g, u, vertices_left - 1, on_path | bit(u));
  });
  return found;
}

}  // namespace detail

/// True iff some vertex of degree >= ell+s is an endpoint of a path on
/// ell-1 vertices.
inline bool has_heavy_path_endpoint(const Graph& g, const BroomSpec& spec) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= spec.ell() + spec.s() && detail::has_path_from(g, v, spec.ell() - 2, bit(v))) return true;
  }
  return false;
}

}  // namespace bturan
