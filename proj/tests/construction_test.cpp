#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/checked.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/expr.hpp"

using namespace turanlab;

TEST(Construction, EdgeCounts) {
  EXPECT_EQ(build(complete_spec(6)).edge_count(), 15);
  EXPECT_EQ(build(path_spec(5)).edge_count(), 4);
  EXPECT_EQ(build(star_spec(4)).edge_count(), 4);
  EXPECT_EQ(build(matching_spec(3)).edge_count(), 3);
  EXPECT_EQ(build(cycle_spec(9)).edge_count(), 9);
  EXPECT_EQ(build(friendship_spec(7)).edge_count(), 9);
  EXPECT_EQ(build(friendship_spec(6)).edge_count(), 7);
  EXPECT_EQ(build(split_h_spec(7, 5, 2)).edge_count(), 11);
}

TEST(Construction, TuranGraph) {
  Graph t = build(turan_spec(5, 2));
  EXPECT_TRUE(oracle::isomorphic(t, build(join_spec(empty_spec(2), empty_spec(3)))));
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= 5; ++k) {
      // Balanced parts: floor and ceil of n/k.
      int q = n / k, r = n % k;
      int missing = r * static_cast<int>(binomial(q + 1, 2)) + (k - r) * static_cast<int>(binomial(q, 2));
      EXPECT_EQ(build(turan_spec(n, k)).edge_count(), n * (n - 1) / 2 - missing);
    }
}

TEST(Construction, SplitH) {
  // |A| = a, |C| = k - 2a, |B| = n - k + a; A u C is a clique, A complete to B.
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      for (int a = 0; 2 * a <= k; ++a) {
        Graph g = build(split_h_spec(n, k, a));
        const int clique = k - a;
        EXPECT_EQ(g.edge_count(), static_cast<int>(binomial(clique, 2)) + a * (n - k + a));
      }
  EXPECT_THROW(build(split_h_spec(5, 3, 2)), InvalidSpec);
  EXPECT_THROW(build(split_h_spec(4, 5, 1)), InvalidSpec);
}

TEST(Construction, CliqueUnion) {
  for (int k = 2; k <= 6; ++k)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b < k; ++b) {
        Graph g = build(clique_union_spec(a, k, b));
        EXPECT_EQ(g.order(), a * (k - 1) + b);
        EXPECT_EQ(static_cast<Count>(g.edge_count()), a * binomial(k - 1, 2) + binomial(b, 2));
      }
  EXPECT_THROW(build(clique_union_spec(1, 4, 4)), InvalidSpec);
}

TEST(Construction, FaudreeSchelpG) {
  Graph g = build(faudree_schelp_spec(8, 4, 1));
  // K3 + (K1 * E4)
  EXPECT_EQ(g.edge_count(), 3 + 4);
  EXPECT_THROW(build(faudree_schelp_spec(8, 5, 1)), InvalidSpec);
  EXPECT_THROW(build(faudree_schelp_spec(3, 4, 1)), InvalidSpec);
}

TEST(Construction, Combinators) {
  Graph star = build(join_spec(complete_spec(1), complement_spec(complete_spec(4))));
  EXPECT_TRUE(oracle::isomorphic(star, build(star_spec(4))));
  EXPECT_TRUE(oracle::isomorphic(build(join_spec(complete_spec(2), complete_spec(1))), build(complete_spec(3))));
  for (int s = 2; s <= 4; ++s)
    for (int n = 2 * s - 2; n <= 9; ++n) {
      Graph j = build(join_spec(complete_spec(s - 1), empty_spec(n - s + 1)));
      EXPECT_EQ(j, build(split_h_spec(n, 2 * s - 2, s - 1)));
    }
}

TEST(Construction, PartialBlowup) {
  Graph p3 = build(path_spec(3));
  Graph b = partial_blowup(p3, bit(1), 3);
  EXPECT_EQ(b.order(), 5);
  EXPECT_TRUE(oracle::isomorphic(b, build(join_spec(empty_spec(2), empty_spec(3)))));
  EXPECT_EQ(build(blowup_spec(path_spec(3), {0, 2}, 2)).edge_count(), 4);
  EXPECT_THROW(build(blowup_spec(path_spec(3), {3}, 2)), InvalidSpec);
}

TEST(Expression, Atoms) {
  EXPECT_EQ(graph_from_source("K4"), build(complete_spec(4)));
  EXPECT_EQ(graph_from_source("P_3"), build(path_spec(3)));
  EXPECT_EQ(graph_from_source("S{3}"), build(star_spec(3)));
  EXPECT_EQ(graph_from_source("M2"), build(matching_spec(2)));
  EXPECT_EQ(graph_from_source("C9"), build(cycle_spec(9)));
  EXPECT_EQ(graph_from_source("E3").edge_count(), 0);
  EXPECT_EQ(graph_from_source("T(5,2)"), build(turan_spec(5, 2)));
  EXPECT_EQ(graph_from_source("H(7,5,2)"), build(split_h_spec(7, 5, 2)));
  EXPECT_EQ(graph_from_source("G(8,4,1)"), build(faudree_schelp_spec(8, 4, 1)));
  EXPECT_EQ(graph_from_source("CU(2,4,1)"), build(clique_union_spec(2, 4, 1)));
  EXPECT_EQ(graph_from_source("F(7)"), build(friendship_spec(7)));
  EXPECT_EQ(graph_from_source("F7"), build(friendship_spec(7)));
  EXPECT_TRUE(oracle::isomorphic(graph_from_source("K(1,3)"), build(star_spec(3))));
}

TEST(Expression, Operators) {
  Graph k2p3 = graph_from_source("K2+P3");
  EXPECT_EQ(k2p3.order(), 5);
  EXPECT_EQ(k2p3.edge_count(), 3);
  EXPECT_EQ(graph_from_source("K2 ∪ P3"), k2p3);
  EXPECT_EQ(graph_from_source("K2|P3"), k2p3);
  EXPECT_EQ(graph_from_source("2P3"), graph_from_source("P3+P3"));
  EXPECT_EQ(graph_from_source("3K3").edge_count(), 9);
  EXPECT_EQ(graph_from_source("K1*~K4"), graph_from_source("K1*E4"));
  EXPECT_EQ(graph_from_source("K2*K1"), build(complete_spec(3)));
  EXPECT_EQ(graph_from_source("2(K2+K1)").order(), 6);
  EXPECT_EQ(graph_from_source("K1+K2*K1").edge_count(), 3);  // join binds tighter
}

TEST(Expression, Graph6Forms) {
  EXPECT_EQ(graph_from_source("g6:Bw"), build(complete_spec(3)));
  EXPECT_EQ(graph_from_source("Bw"), build(complete_spec(3)));
  EXPECT_EQ(graph_from_source("g6:Bw+K1").order(), 4);
}

TEST(Expression, Errors) {
  EXPECT_THROW(graph_from_source("K("), InvalidSpec);
  EXPECT_THROW(graph_from_source("Q4"), InvalidSpec);
  EXPECT_THROW(graph_from_source("K4+"), InvalidSpec);
  EXPECT_THROW(graph_from_source("H(7,5)"), InvalidSpec);
  EXPECT_THROW(graph_from_source("C2"), InvalidSpec);
  EXPECT_THROW(graph_from_source("K65"), SizeCap);
}

TEST(Expression, DescribeRoundTrips) {
  const std::vector<SpecPtr> specs = {
      complete_spec(4), split_h_spec(7, 5, 2), union_spec({complete_spec(2), path_spec(3)}),
      join_spec(complete_spec(1), complement_spec(complete_spec(4))), faudree_schelp_spec(9, 4, 2),
      clique_union_spec(2, 5, 3), friendship_spec(6), literal_spec(graph_from_source("Dhc"))};
  for (const auto& s : specs) EXPECT_EQ(graph_from_source(describe(s)), build(s)) << describe(s);
}
