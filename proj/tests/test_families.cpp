#include <gtest/gtest.h>

#include "bturan/bturan.hpp"
#include "test_support.hpp"

namespace bturan {
namespace {

TEST(BroomSpecTest, DerivedClique) {
  EXPECT_EQ(BroomSpec(4, 0).k(), 1);
  EXPECT_EQ(BroomSpec(5, 3).k(), 1);
  EXPECT_EQ(BroomSpec(6, 0).k(), 2);
  EXPECT_EQ(BroomSpec(7, 1).k(), 2);
  EXPECT_EQ(BroomSpec(8, 0).k(), 3);
  EXPECT_THROW(BroomSpec(3, 0), InvalidParameter);
  EXPECT_THROW(BroomSpec(4, -1), InvalidParameter);
  EXPECT_THROW(BroomSpec(60, 5), InvalidParameter);
}

TEST(MakeBroomTest, Examples) {
  EXPECT_EQ(make_broom({4, 0}), make_path(4));
  const Graph b52 = make_broom({5, 2});
  EXPECT_EQ(b52.order(), 7);
  EXPECT_EQ(degree_sequence(b52), (std::vector<int>{4, 2, 2, 1, 1, 1, 1}));
  const Graph chair = make_broom({4, 1});
  EXPECT_EQ(chair.order(), 5);
  EXPECT_EQ(chair.degree(2), 3);
}

TEST(MakeBroomTest, IsTreeWithCentreDegree) {
  for (int ell = 4; ell <= 12; ++ell) {
    for (int s = 0; s <= 6; ++s) {
      const Graph b = make_broom({ell, s});
      EXPECT_EQ(b.edge_count(), ell + s - 1);
      EXPECT_TRUE(b.is_connected());
      EXPECT_EQ(b.degree(ell - 2), s + 2);
      EXPECT_EQ(b.degree(0), 1);
      EXPECT_EQ(b.degree(ell - 1), 1);
    }
  }
}

TEST(MakeHTest, Examples) {
  EXPECT_EQ(make_H(1, 7), make_star(7));
  EXPECT_EQ(degree_sequence(make_H(2, 6)), (std::vector<int>{5, 5, 2, 2, 2, 2}));
  EXPECT_EQ(make_H(5, 6), make_complete(6));
  EXPECT_THROW(make_H(0, 5), InvalidParameter);
  EXPECT_THROW(make_H(5, 5), InvalidParameter);
}

TEST(MakeHstarTest, Examples) {
  const Graph g = make_Hstar(1, 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(degree_sequence(g), (std::vector<int>{3, 2, 2, 1}));
  EXPECT_TRUE(isomorphic(g, Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}})));
  EXPECT_EQ(degree_sequence(make_Hstar(2, 7)), (std::vector<int>{6, 6, 3, 3, 2, 2, 2}));
  EXPECT_THROW(make_Hstar(3, 5), InvalidParameter);
}

TEST(MakeFTest, Examples) {
  EXPECT_EQ(degree_sequence(make_F(6)), (std::vector<int>{5, 2, 2, 2, 2, 1}));
  EXPECT_TRUE(isomorphic(make_F(3), make_complete(3)));
  EXPECT_EQ(degree_sequence(make_F(5)), (std::vector<int>{4, 2, 2, 2, 2}));
  EXPECT_EQ(make_F(6).degree(5), 1);
  EXPECT_THROW(make_F(1), InvalidParameter);
}

TEST(PredictedExtremalTest, CaseSplit) {
  EXPECT_EQ(predicted_extremal({6, 3}, 20).first, (FamilyId{FamilyTag::H, 20, 2}));
  EXPECT_EQ(predicted_extremal({5, 1}, 20).first, (FamilyId{FamilyTag::F, 20, 0}));
  EXPECT_EQ(predicted_extremal({7, 0}, 20).first, (FamilyId{FamilyTag::Hstar, 20, 2}));
  EXPECT_EQ(predicted_extremal({5, 0}, 20).first, (FamilyId{FamilyTag::Hstar, 20, 1}));
  EXPECT_EQ(predicted_extremal({9, 4}, 20).first, (FamilyId{FamilyTag::Hstar, 20, 3}));
  EXPECT_EQ(predicted_extremal({7, 0}, 20).second, make_Hstar(2, 20));
  EXPECT_THROW(predicted_extremal({7, 0}, 4), InvalidParameter);  // needs n >= k+3 = 5
  EXPECT_THROW(predicted_extremal({8, 0}, 3), InvalidParameter);  // needs n >= k+1 = 4
  EXPECT_NO_THROW(predicted_extremal({8, 0}, 4));
  EXPECT_EQ(predicted_family({6, 0}, 9).name(), "H(2,9)");
  EXPECT_EQ(predicted_family({5, 0}, 9).name(), "H*(1,9)");
  EXPECT_EQ(predicted_family({5, 2}, 9).name(), "F(9)");
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(closed_form_value({6, 0}, 7, 2, Objective::DegreePowers), 92u);
  EXPECT_EQ(closed_form_value({5, 0}, 7, 2, Objective::DegreePowers), 48u);
  EXPECT_EQ(closed_form_value({5, 1}, 6, 2, Objective::DegreePowers), 42u);
  EXPECT_THROW(closed_form_value({5, 1}, 6, 1, Objective::Stars), InvalidParameter);
}

TEST(ClosedFormTest, MatchesConstructionEverywhere) {
  const std::vector<BroomSpec> specs{{4, 0}, {4, 3}, {5, 0}, {5, 1}, {5, 4}, {6, 0}, {7, 2}, {8, 1}, {9, 0}, {10, 3}};
  for (const auto& spec : specs) {
    for (int n = predicted_min_order(spec); n <= 40; ++n) {
      const Graph g = predicted_extremal(spec, n).second;
      for (int r = 1; r <= 5; ++r) {
        EXPECT_EQ(closed_form_value(spec, n, r, Objective::DegreePowers), degree_power_sum(g, r));
        if (r >= 2) {
          EXPECT_EQ(closed_form_value(spec, n, r, Objective::Stars), count_stars(g, r));
        }
      }
    }
  }
}

TEST(FamilyProperty, HstarBeatsH) {
  for (int n = 4; n <= 30; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      for (int r = 1; r <= 4; ++r) {
        EXPECT_GT(degree_power_sum(make_Hstar(k, n), r), degree_power_sum(make_H(k, n), r));
      }
    }
  }
}

// Each family avoids the broom it is predicted for; the subset-DP longest
// path oracle explains why H and H* do.
TEST(FamilyProperty, PredictedFamiliesAreBroomFree) {
  for (int n = 2; n <= 12; ++n) {
    for (int ell = 4; ell <= 10; ++ell) {
      for (int s = 0; s <= 3; ++s) {
        const BroomSpec spec(ell, s);
        if (n < predicted_min_order(spec)) continue;
        const Graph g = predicted_extremal(spec, n).second;
        EXPECT_FALSE(contains_broom(g, spec)) << "B(" << ell << "," << s << ") n=" << n;
      }
    }
    for (int k = 1; k <= std::min(n - 1, 4); ++k) EXPECT_LE(testing::longest_path(make_H(k, n)), 2 * k + 1);
    for (int k = 1; k <= std::min(n - 3, 4); ++k) EXPECT_LE(testing::longest_path(make_Hstar(k, n)), 2 * k + 2);
  }
}

}  // namespace
}  // namespace bturan
