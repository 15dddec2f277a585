#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bturan/canonical.hpp"
#include "bturan/detect.hpp"
#include "bturan/errors.hpp"
#include "bturan/families.hpp"
#include "bturan/graph.hpp"

namespace bturan {

inline constexpr int kDefaultEnumerationCap = 10;
inline constexpr int kHardEnumerationCap = 12;

struct EnumerationOptions {
  std::optional<BroomSpec> filter;  // emit only B(ell,s)-free graphs
  bool connected_only = false;
  int cap = kDefaultEnumerationCap;
  int threads = 1;
};

// Isomorph-free generation by vertex augmentation with canonical deletion.
//
// Every node of the tree is a graph in canonical labeling. A child G of
// parent P (on m vertices) is P plus vertex m with neighbourhood S. The
// canonical deletion vertex of G is the vertex its canonical labeling puts
// last; it lies in the last refinement colour, hence has minimum degree.
// G is accepted iff deleting that vertex gives a graph isomorphic to P, so
// each isomorphism class has exactly one parent class; duplicates among the
// children of one parent are merged by canonical key, which also fixes the
// emission order. Deleting a vertex never creates a broom, so broom-free
// graphs have broom-free parents and a child containing a broom can be
// dropped with its whole subtree.
namespace augmentation {

inline std::vector<Graph> children(const Graph& parent, const std::optional<BroomSpec>& filter) {
  const int m = parent.order();
  const CanonicalForm parent_key = pack_labeled(parent);
  std::map<CanonicalForm, Graph> kids;
  int parent_min = m == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < m; ++v) parent_min = std::min(parent_min, parent.degree(v));
  const VertexSet subsets_end = bit(m);
  for (VertexSet nbrs = 0; nbrs < subsets_end; ++nbrs) {
    const int d = popcount(nbrs);
    if (d > parent_min + 1) continue;  // the new vertex must end up of minimum degree
    bool min_degree = true;
    for (int v = 0; v < m && min_degree; ++v) {
      min_degree = parent.degree(v) + static_cast<int>((nbrs >> v) & 1) >= d;
    }
    if (!min_degree) continue;
    const Graph child = parent.with_vertex(nbrs);
    const std::vector<int> colors = refine_colors(child);
    if (colors[m] != *std::max_element(colors.begin(), colors.end())) continue;
    if (filter && contains_broom(child, *filter)) continue;
    CanonicalLabeling lab = canonical_labeling(child, colors);
    const int deleted = lab.order.back();
    if (deleted != m && canonical(child.without_vertex(deleted), kHardEnumerationCap) != parent_key) continue;
    kids.try_emplace(std::move(lab.form), child.permuted(lab.order));
  }
  std::vector<Graph> out;
  out.reserve(kids.size());
  for (auto& [key, g] : kids) out.push_back(std::move(g));
  return out;
}

// Visitor protocol:
//   bool enter(const Graph& node)  -- internal node on fewer than n vertices;
//                                     return false to skip its subtree
//   void leaf(const Graph& g)      -- accepted graph on n vertices
template <class Visitor>
void walk_from(const Graph& node, int n, const EnumerationOptions& opt, Visitor& vis) {
  if (node.order() == n) {
    if (!opt.connected_only || node.is_connected()) vis.leaf(node);
    return;
  }
  if (!vis.enter(node)) return;
  for (const Graph& child : children(node, opt.filter)) walk_from(child, n, opt, vis);
}

inline void collect_depth(const Graph& node, int depth, const EnumerationOptions& opt, std::vector<Graph>& out) {
  if (node.order() == depth) {
    out.push_back(node);
    return;
  }
  for (const Graph& child : children(node, opt.filter)) collect_depth(child, depth, opt, out);
}

inline Graph root() { return Graph(1); }

}  // namespace augmentation

inline void check_enumeration_order(int n, const EnumerationOptions& opt) {
  if (n < 1) throw InvalidParameter("enumeration order must be >= 1, got " + std::to_string(n));
  const int cap = std::min(opt.cap, kHardEnumerationCap);
  if (n > cap) {
    throw SizeLimit("enumeration capped at " + std::to_string(cap) + " vertices, got " + std::to_string(n));
  }
  if (opt.threads < 1) throw InvalidParameter("thread count must be >= 1");
}

/// Sequential walk over the augmentation tree for order n.
template <class Visitor>
void walk_augmentation_tree(int n, const EnumerationOptions& opt, Visitor& vis) {
  check_enumeration_order(n, opt);
  augmentation::walk_from(augmentation::root(), n, opt, vis);
}

/// Parallel walk: the tree is cut at a fixed depth and every subtree gets a
/// fresh visitor from `make_visitor`. Visitors come back in sequential DFS
/// order of their subtree roots, so concatenating their results reproduces
/// the sequential stream. Subtree roots below the cut are not passed to
/// enter() on the way down, only at the cut itself.
template <class Visitor, class Factory>
std::vector<Visitor> walk_augmentation_tree_parallel(int n, const EnumerationOptions& opt, Factory&& make_visitor) {
  check_enumeration_order(n, opt);
  std::vector<Graph> roots;
  if (n <= 2 || opt.threads == 1) {
    roots.push_back(augmentation::root());
  } else {
    const std::size_t want = 8 * static_cast<std::size_t>(opt.threads);
    for (int depth = 2; depth < n; ++depth) {
      roots.clear();
      augmentation::collect_depth(augmentation::root(), depth, opt, roots);
      if (roots.size() >= want) break;
    }
  }
  std::vector<Visitor> visitors;
  visitors.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) visitors.push_back(make_visitor());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      augmentation::walk_from(roots[i], n, opt, visitors[i]);
    }
  };
  const int workers = std::min<int>(opt.threads, static_cast<int>(roots.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return visitors;
}

namespace detail {

struct CollectingVisitor {
  std::vector<Graph> graphs;
  bool enter(const Graph&) { return true; }
  void leaf(const Graph& g) { graphs.push_back(g); }
};

template <class Fn>
struct CallbackVisitor {
  Fn& fn;
  bool enter(const Graph&) { return true; }
  void leaf(const Graph& g) { fn(g); }
};

}  // namespace detail

/// Calls fn(g) once per isomorphism class of n-vertex graphs (restricted per
/// `opt`), in deterministic order, each g in canonical labeling.
template <class Fn>
void enumerate_graphs(int n, const EnumerationOptions& opt, Fn&& fn) {
  if (n < 2) throw InvalidParameter("enumeration order must be >= 2, got " + std::to_string(n));
  if (opt.threads == 1) {
    detail::CallbackVisitor<Fn> vis{fn};
    walk_augmentation_tree(n, opt, vis);
    return;
  }
  auto parts = walk_augmentation_tree_parallel<detail::CollectingVisitor>(n, opt, [] { return detail::CollectingVisitor{}; });
  for (auto& part : parts) {
    for (const Graph& g : part.graphs) fn(g);
  }
}

inline std::vector<Graph> enumerate_all(int n, const EnumerationOptions& opt = {}) {
  std::vector<Graph> out;
  enumerate_graphs(n, opt, [&](const Graph& g) { out.push_back(g); });
  return out;
}

inline std::uint64_t enumerate_count(int n, const EnumerationOptions& opt = {}) {
  std::uint64_t count = 0;
  enumerate_graphs(n, opt, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace bturan
