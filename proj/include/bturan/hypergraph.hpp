#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bturan/detect.hpp"
#include "bturan/errors.hpp"
#include "bturan/families.hpp"
#include "bturan/graph.hpp"
#include "bturan/invariants.hpp"

namespace bturan {

inline constexpr std::uint64_t kDefaultRsetCap = 5'000'000;

/// r-uniform hypergraph on the vertex set of a host graph. `common[i]` is the
/// host common neighbourhood of `edges[i]`.
struct UniformHypergraph {
  int r = 0;
  int n = 0;
  std::vector<VertexSet> edges;
  std::vector<VertexSet> common;

  std::size_t size() const { return edges.size(); }

  void add(VertexSet e, VertexSet nbrs) {
    edges.push_back(e);
    common.push_back(nbrs);
  }
};

/// r-sets of a host graph split by common-neighbourhood size c:
///   h1: c > k,  h2: c > ell+s,  h3: c == k,  h4: c < k.
/// h1, h3, h4 partition all r-sets; h2 is a subfamily of h1.
struct NbrhoodClassification {
  int r = 0;
  int ell = 0;
  int s = 0;
  int k = 0;
  UniformHypergraph h1, h2, h3, h4;
};

/// Visits every r-subset of {0..n-1} as a bitmask, in increasing order.
template <class Fn>
void for_each_rset(int n, int r, Fn&& fn) {
  if (r < 1 || r > n) return;
  const VertexSet limit = all_vertices(n);
  VertexSet set = all_vertices(r);
  while (true) {
    fn(set);
    if (set == (limit & ~all_vertices(n - r))) break;  // top r bits
    // Gosper's hack.
    const VertexSet low = set & (~set + 1);
    const VertexSet ripple = set + low;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
}

inline VertexSet common_neighbors(const Graph& g, VertexSet set) {
  VertexSet c = g.vertices();
  for_each_vertex(set, [&](int v) { c &= g.neighbors(v); });
  return c;
}

inline NbrhoodClassification classify_rsets(const Graph& g, int r, const BroomSpec& spec,
                                            std::uint64_t cap = kDefaultRsetCap) {
  if (r < 2) throw InvalidParameter("r-set classification needs r >= 2, got " + std::to_string(r));
  const int n = g.order();
  if (checked::binomial(n, r) > cap) {
    throw SizeLimit("C(" + std::to_string(n) + "," + std::to_string(r) + ") r-sets exceed the work cap");
  }
  NbrhoodClassification out;
  out.r = r;
  out.ell = spec.ell();
  out.s = spec.s();
  out.k = spec.k();
  for (auto* h : {&out.h1, &out.h2, &out.h3, &out.h4}) {
    h->r = r;
    h->n = n;
  }
  for_each_rset(n, r, [&](VertexSet set) {
    const VertexSet c = common_neighbors(g, set);
    const int size = popcount(c);
    if (size > spec.k()) {
      out.h1.add(set, c);
      if (size > spec.ell() + spec.s()) out.h2.add(set, c);
    } else if (size == spec.k()) {
      out.h3.add(set, c);
    } else {
      out.h4.add(set, c);
    }
  });
  return out;
}

/// Berge path of length L: distinct hyperedges h_1..h_L (indices into the
/// hypergraph) and distinct vertices v_1..v_{L+1} with v_i, v_{i+1} in h_i.
struct BergePath {
  std::vector<int> edges;
  std::vector<int> vertices;
};

namespace detail {

class BergeSearch {
 public:
  BergeSearch(const UniformHypergraph& h, int length) : h_(h), length_(length), used_edge_(h.size(), 0) {}

  std::optional<BergePath> run() {
    VertexSet touched = 0;
    for (VertexSet e : h_.edges) touched |= e;
    std::optional<BergePath> found;
    for_each_vertex(touched, [&](int v) {
      if (found) return;
      path_.vertices = {v};
      path_.edges.clear();
      if (extend(v, bit(v))) found = path_;
    });
    return found;
  }

 private:
  bool extend(int at, VertexSet used_vertices) {
    if (static_cast<int>(path_.edges.size()) == length_) return true;
    for (std::size_t i = 0; i < h_.size(); ++i) {
      if (used_edge_[i] || (h_.edges[i] & bit(at)) == 0) continue;
      const VertexSet next = h_.edges[i] & ~used_vertices;
      if (next == 0) continue;
      used_edge_[i] = 1;
      path_.edges.push_back(static_cast<int>(i));
      bool done = false;
      for_each_vertex(next, [&](int w) {
        if (done) return;
        path_.vertices.push_back(w);
        done = extend(w, used_vertices | bit(w));
        if (!done) path_.vertices.pop_back();
      });
      if (done) return true;
      path_.edges.pop_back();
      used_edge_[i] = 0;
    }
    return false;
  }

  const UniformHypergraph& h_;
  int length_;
  std::vector<char> used_edge_;
  BergePath path_;
};

}  // namespace detail

/// Length counts hyperedges.
inline std::optional<BergePath> find_berge_path(const UniformHypergraph& h, int length) {
  if (length < 1) throw InvalidParameter("Berge path length must be >= 1");
  return detail::BergeSearch(h, length).run();
}

inline bool has_berge_path(const UniformHypergraph& h, int length) { return find_berge_path(h, length).has_value(); }

/// Turns a path on ell-1 vertices whose first vertex has degree >= ell+s into
/// a broom centred at that vertex. Returns nullopt if the premise fails.
inline std::optional<BroomWitness> broom_from_heavy_endpoint(const Graph& g, const BroomSpec& spec,
                                                             const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != spec.ell() - 1) return std::nullopt;
  VertexSet on_path = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return std::nullopt;
    on_path |= bit(path[i]);
  }
  const int heavy = path.front();
  if (g.degree(heavy) < spec.ell() + spec.s()) return std::nullopt;
  VertexSet spare = g.neighbors(heavy) & ~on_path;
  if (popcount(spare) < spec.s() + 1) return std::nullopt;
  BroomWitness w{{path.rbegin(), path.rend()}, {}};
  w.path.push_back(std::countr_zero(spare));
  spare &= spare - 1;
  for (int i = 0; i < spec.s(); ++i) {
    w.leaves.push_back(std::countr_zero(spare));
    spare &= spare - 1;
  }
  return w;
}

/// From a Berge path of length k+1 in h2, threads a distinct common
/// neighbour u_i of each hyperedge between consecutive path vertices,
/// giving the graph path v_1 u_1 v_2 ... u_{k+1} v_{k+2}. Its end v_1 has more
/// than ell+s neighbours, so its first ell-1 vertices yield a broom.
inline std::optional<BroomWitness> broom_from_berge_path(const Graph& g, const BroomSpec& spec,
                                                         const UniformHypergraph& h2, const BergePath& bp) {
  if (static_cast<int>(bp.edges.size()) != spec.k() + 1 || bp.vertices.size() != bp.edges.size() + 1) {
    return std::nullopt;
  }
  VertexSet taken = 0;
  for (int v : bp.vertices) taken |= bit(v);
  std::vector<int> walk{bp.vertices.front()};
  for (std::size_t i = 0; i < bp.edges.size(); ++i) {
    const VertexSet options = h2.common[bp.edges[i]] & ~taken;
    if (options == 0) return std::nullopt;
    const int u = std::countr_zero(options);
    taken |= bit(u);
    walk.push_back(u);
    walk.push_back(bp.vertices[i + 1]);
  }
  if (static_cast<int>(walk.size()) < spec.ell() - 1) return std::nullopt;
  walk.resize(spec.ell() - 1);
  auto w = broom_from_heavy_endpoint(g, spec, walk);
  if (w && !is_valid_broom_witness(g, spec, *w)) return std::nullopt;
  return w;
}

enum class Claim2Status { Holds, Violated, Inapplicable };

inline const char* claim2_status_name(Claim2Status s) {
  switch (s) {
    case Claim2Status::Holds: return "holds";
    case Claim2Status::Violated: return "violated";
    case Claim2Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct Claim2Result {
  Claim2Status status = Claim2Status::Inapplicable;
  std::optional<BergePath> berge_path;
  std::optional<BroomWitness> contradiction;  // broom built from the Berge path
};

/// On a broom-free host, h2 must have no Berge path of length k+1.
inline Claim2Result check_claim2(const Graph& g, int r, const BroomSpec& spec, std::uint64_t cap = kDefaultRsetCap) {
  Claim2Result out;
  if (contains_broom(g, spec)) return out;
  const NbrhoodClassification cls = classify_rsets(g, r, spec, cap);
  out.berge_path = find_berge_path(cls.h2, spec.k() + 1);
  if (!out.berge_path) {
    out.status = Claim2Status::Holds;
    return out;
  }
  out.status = Claim2Status::Violated;
  out.contradiction = broom_from_berge_path(g, spec, cls.h2, *out.berge_path);
  return out;
}

}  // namespace bturan
