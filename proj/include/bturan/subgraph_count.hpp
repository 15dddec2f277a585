#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bturan/errors.hpp"
#include "bturan/graph.hpp"

namespace bturan {

inline constexpr int kNaiveCountCap = 10;

namespace detail {

// Counts injective maps pattern -> host sending edges to edges.
class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& pattern, const Graph& host) : pattern_(pattern), host_(host) {}

  std::uint64_t run() {
    count_ = 0;
    extend(0, 0);
    return count_;
  }

 private:
  void extend(int p, VertexSet used) {
    if (p == pattern_.order()) {
      ++count_;
      return;
    }
    VertexSet cands = host_.vertices() & ~used;
    // Earlier pattern neighbours of p constrain its image.
    for_each_vertex(pattern_.neighbors(p) & all_vertices(p), [&](int q) { cands &= host_.neighbors(image_[q]); });
    for_each_vertex(cands, [&](int h) {
      image_[p] = h;
      extend(p + 1, used | bit(h));
    });
  }

  const Graph& pattern_;
  const Graph& host_;
  std::array<int, kMaxVertices> image_{};
  std::uint64_t count_ = 0;
};

}  // namespace detail

inline std::uint64_t count_embeddings(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order()) return 0;
  return detail::EmbeddingCounter(pattern, host).run();
}

/// Unlabeled copies of `pattern` in `host`: embeddings / |Aut(pattern)|.
/// Exhaustive; meant as a test oracle on small hosts.
inline std::uint64_t count_subgraph_naive(const Graph& host, const Graph& pattern, int cap = kNaiveCountCap) {
  if (host.order() > cap) {
    throw SizeLimit("naive subgraph count capped at " + std::to_string(cap) + " host vertices");
  }
  if (pattern.order() > host.order()) return 0;
  return count_embeddings(pattern, host) / count_embeddings(pattern, pattern);
}

}  // namespace bturan
