#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "bturan/bturan.hpp"
#include "test_support.hpp"

namespace bturan {
namespace {

UniformHypergraph hypergraph(int r, int n, std::vector<VertexSet> edges) {
  UniformHypergraph h{.r = r, .n = n, .edges = {}, .common = {}};
  for (VertexSet e : edges) h.add(e, 0);
  return h;
}

bool valid_berge_path(const UniformHypergraph& h, const BergePath& p, int length) {
  if (static_cast<int>(p.edges.size()) != length || static_cast<int>(p.vertices.size()) != length + 1) return false;
  VertexSet seen_v = 0;
  for (int v : p.vertices) {
    if (seen_v & bit(v)) return false;
    seen_v |= bit(v);
  }
  std::set<int> seen_e(p.edges.begin(), p.edges.end());
  if (static_cast<int>(seen_e.size()) != length) return false;
  for (int i = 0; i < length; ++i) {
    const VertexSet e = h.edges[p.edges[i]];
    if (!(e & bit(p.vertices[i])) || !(e & bit(p.vertices[i + 1]))) return false;
  }
  return true;
}

// Edge-sequence-first brute force: every ordered tuple of distinct
// hyperedges, then every choice of distinct linking vertices.
bool brute_berge(const UniformHypergraph& h, int length) {
  std::vector<int> seq;
  std::function<bool(VertexSet)> pick_edges;
  std::function<bool(int, VertexSet)> pick_vertices = [&](int i, VertexSet used) -> bool {
    // choose v_{i+1} in h_i (and in h_{i+1} when that exists), v_1 in h_1
    if (i == length + 1) return true;
    VertexSet allowed = i == 0 ? h.edges[seq[0]] : h.edges[seq[i - 1]];
    if (i > 0 && i < length) allowed &= h.edges[seq[i]];
    bool ok = false;
    for_each_vertex(allowed & ~used, [&](int v) { ok = ok || pick_vertices(i + 1, used | bit(v)); });
    return ok;
  };
  pick_edges = [&](VertexSet) -> bool {
    if (static_cast<int>(seq.size()) == length) return pick_vertices(0, 0);
    for (int e = 0; e < static_cast<int>(h.size()); ++e) {
      if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
      seq.push_back(e);
      if (pick_edges(0)) return true;
      seq.pop_back();
    }
    return false;
  };
  return pick_edges(0);
}

TEST(ClassifyTest, HTwoTen) {
  const auto cls = classify_rsets(make_H(2, 10), 2, {6, 0});
  EXPECT_EQ(cls.k, 2);
  ASSERT_EQ(cls.h1.size(), 1u);
  EXPECT_EQ(cls.h1.edges[0], bit(0) | bit(1));
  EXPECT_EQ(popcount(cls.h1.common[0]), 8);
  EXPECT_EQ(cls.h2.size(), 1u);
  EXPECT_EQ(cls.h3.size(), 28u);
  EXPECT_EQ(cls.h4.size(), 16u);
  for (VertexSet e : cls.h4.edges) EXPECT_EQ(popcount(e & (bit(0) | bit(1))), 1);
}

TEST(ClassifyTest, EmptyAndComplete) {
  for (int r = 2; r <= 4; ++r) {
    const auto cls = classify_rsets(Graph(7), r, {6, 0});
    EXPECT_EQ(cls.h4.size(), checked::binomial(7, r));
    EXPECT_EQ(cls.h1.size() + cls.h3.size(), 0u);
  }
  const auto k5 = classify_rsets(make_complete(5), 2, {4, 0});
  EXPECT_EQ(k5.h1.size(), 10u);
  EXPECT_EQ(k5.h2.size(), 0u);  // 3 common neighbours, not more than 4
}

TEST(ClassifyTest, Errors) {
  EXPECT_THROW(classify_rsets(make_path(4), 1, {4, 0}), InvalidParameter);
  EXPECT_THROW(classify_rsets(Graph(64), 6, {4, 0}), SizeLimit);
  EXPECT_EQ(classify_rsets(make_path(3), 4, {4, 0}).h4.size(), 0u);
}

TEST(ClassifyProperty, PartitionAndNesting) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = testing::random_graph(n, 0.2 + 0.7 * (trial % 4) / 4.0, rng);
    const BroomSpec spec(4 + trial % 4, trial % 3);
    for (int r = 2; r <= std::min(4, n); ++r) {
      const auto cls = classify_rsets(g, r, spec);
      EXPECT_EQ(cls.h1.size() + cls.h3.size() + cls.h4.size(), checked::binomial(n, r));
      const std::set<VertexSet> h1(cls.h1.edges.begin(), cls.h1.edges.end());
      for (VertexSet e : cls.h2.edges) EXPECT_TRUE(h1.count(e));
      for (const auto* h : {&cls.h1, &cls.h2, &cls.h3, &cls.h4}) {
        for (VertexSet e : h->edges) EXPECT_EQ(popcount(e), r);
      }
    }
  }
}

TEST(BergePathTest, Examples) {
  const auto path = hypergraph(2, 5, {bit(1) | bit(2), bit(2) | bit(3), bit(3) | bit(4)});
  const auto found = find_berge_path(path, 3);
  ASSERT_TRUE(found);
  EXPECT_TRUE(valid_berge_path(path, *found, 3));
  EXPECT_FALSE(has_berge_path(path, 4));

  const auto single = hypergraph(3, 4, {bit(1) | bit(2) | bit(3)});
  EXPECT_TRUE(has_berge_path(single, 1));
  EXPECT_FALSE(has_berge_path(single, 2));
  EXPECT_THROW(has_berge_path(single, 0), InvalidParameter);

  const auto h2 = classify_rsets(make_H(2, 12), 2, {6, 0}).h2;
  EXPECT_EQ(h2.size(), 1u);
  EXPECT_FALSE(has_berge_path(h2, 3));
}

TEST(BergePathTest, MatchesEdgeFirstBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 4;
    const int r = 2 + trial % 2;
    std::vector<VertexSet> edges;
    for_each_rset(n, r, [&](VertexSet e) {
      if (rng() % 4 == 0) edges.push_back(e);
    });
    const auto h = hypergraph(r, n, edges);
    for (int len = 1; len <= 4; ++len) {
      const auto found = find_berge_path(h, len);
      EXPECT_EQ(found.has_value(), brute_berge(h, len));
      if (found) {
        EXPECT_TRUE(valid_berge_path(h, *found, len));
      }
    }
  }
}

TEST(RsetTest, CountsMatchBinomial) {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::uint64_t count = 0;
      VertexSet prev = 0;
      for_each_rset(n, r, [&](VertexSet s) {
        EXPECT_GT(s, prev);
        prev = s;
        ++count;
      });
      EXPECT_EQ(count, checked::binomial(n, r));
    }
  }
}

TEST(BergeObstructionTest, Examples) {
  for (int k = 1; k <= 4; ++k) {
    const BroomSpec spec(2 * k + 2, 0);
    for (int n = k + 1; n <= 12; ++n) {
      EXPECT_EQ(check_claim2(make_H(k, n), 2, spec).status, Claim2Status::Holds);
    }
  }
  EXPECT_EQ(check_claim2(make_complete(6), 2, {4, 0}).status, Claim2Status::Inapplicable);
}

TEST(BergeObstructionTest, HoldsOnBroomFreeGraphsThroughSeven) {
  for (const auto& spec : testing::battery()) {
    for (int n = 2; n <= 7; ++n) {
      EnumerationOptions opt;
      opt.filter = spec;
      enumerate_graphs(n, opt, [&](const Graph& g) {
        const auto res = check_claim2(g, 2, spec);
        ASSERT_EQ(res.status, Claim2Status::Holds) << graph6_encode(g);
      });
    }
  }
}

// Whenever h2 has a Berge path of length k+1, the threading construction
// produces a genuine broom, so such a path can never occur in a broom-free
// host.
TEST(BergeObstructionProperty, BergePathAlwaysYieldsBroom) {
  std::mt19937_64 rng(8);
  int extracted = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 9 + trial % 4;
    const Graph g = testing::random_graph(n, 0.75 + 0.2 * (trial % 3) / 3.0, rng);
    const BroomSpec spec(4 + trial % 3, trial % 2);
    for (int r = 2; r <= 3; ++r) {
      const auto cls = classify_rsets(g, r, spec);
      const auto bp = find_berge_path(cls.h2, spec.k() + 1);
      if (!bp) continue;
      ++extracted;
      const auto w = broom_from_berge_path(g, spec, cls.h2, *bp);
      ASSERT_TRUE(w.has_value()) << graph6_encode(g);
      EXPECT_TRUE(is_valid_broom_witness(g, spec, *w));
    }
  }
  EXPECT_GT(extracted, 100);
}

TEST(HeavyEndpointBroomTest, RejectsBadPremise) {
  const Graph g = make_complete(8);
  const BroomSpec spec(6, 0);
  EXPECT_TRUE(broom_from_heavy_endpoint(g, spec, {0, 1, 2, 3, 4}).has_value());
  EXPECT_FALSE(broom_from_heavy_endpoint(g, spec, {0, 1, 2, 3}).has_value());
  EXPECT_FALSE(broom_from_heavy_endpoint(make_path(8), spec, {0, 1, 2, 3, 4}).has_value());
}

}  // namespace
}  // namespace bturan
