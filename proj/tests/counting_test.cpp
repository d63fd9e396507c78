#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/expr.hpp"

using namespace turanlab;

TEST(Checked, Arithmetic) {
  EXPECT_EQ(factorial(5), 120U);
  EXPECT_EQ(factorial(20), 2432902008176640000ULL);
  EXPECT_THROW(factorial(21), Overflow);
  EXPECT_EQ(binomial(10, 3), 120U);
  EXPECT_EQ(binomial(3, 5), 0U);
  EXPECT_EQ(binomial(66, 33), 7219428434016265740ULL);
  EXPECT_THROW(binomial(68, 34), Overflow);
  EXPECT_THROW(checked_add(~Count{0}, 1), Overflow);
  EXPECT_THROW(checked_pow(1ULL << 32, 2), Overflow);
  EXPECT_EQ(checked_pow(3, 4), 81U);
}

TEST(MatchingProfile, KnownValues) {
  EXPECT_EQ(matching_profile(build(cycle_spec(9))).counts, (std::vector<Count>{1, 9, 27, 30, 9}));
  EXPECT_EQ(matching_profile(build(complete_spec(4))).counts, (std::vector<Count>{1, 6, 3}));
  EXPECT_EQ(matching_profile(Graph(0)).counts, (std::vector<Count>{1}));
  EXPECT_EQ(matching_profile(Graph(5)).matching_number(), 0);
  // 3K3: 9 edges; pairs 9*6/2 = 27; triples 27.
  EXPECT_EQ(matching_profile(graph_from_source("3K3")).counts, (std::vector<Count>{1, 9, 27, 27}));
  // K_{2n} has (2n-1)!! perfect matchings.
  EXPECT_EQ(matching_profile(build(complete_spec(10)))[5], 945U);
  EXPECT_EQ(matching_profile(build(complete_spec(10)))[6], 0U);
}

TEST(MatchingProfile, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(n, 0.15 + 0.1 * (rep % 7), rng);
    MatchingProfile p = matching_profile(g);
    for (int t = 0; t <= 5; ++t) ASSERT_EQ(p[t], oracle::matchings(g, t)) << serialize_graph6(g) << " t=" << t;
  }
}

TEST(MatchingProfile, EdgeRecurrence) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const MatchingProfile p = matching_profile(g);
      for (auto [u, v] : g.edges()) {
        Graph minus = g;
        minus.remove_edge(u, v);
        const MatchingProfile a = matching_profile(minus);
        const MatchingProfile b = matching_profile(g.induced(g.vertices() & ~bit(u) & ~bit(v)));
        for (int t = 1; t <= 3; ++t) ASSERT_EQ(p[t], a[t] + b[t - 1]);
      }
    }
}

TEST(MatchingProfile, LargeStructuredGraphs) {
  // Split graphs with a large independent side.
  for (int n = 5; n <= 9; ++n) {
    Graph g = build(split_h_spec(n, 5, 2));
    for (int t = 0; t <= 3; ++t) EXPECT_EQ(matching_profile(g)[t], oracle::matchings(g, t));
  }
  Graph big = build(split_h_spec(60, 7, 3));
  EXPECT_EQ(matching_profile(big).matching_number(), 3);
}

TEST(Automorphisms, AgreeWithPermutationOracle) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.5, rng);
    ASSERT_EQ(automorphism_count(g), oracle::automorphisms(g)) << serialize_graph6(g);
  }
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) ASSERT_EQ(automorphism_count(g), oracle::automorphisms(g));
}

TEST(Automorphisms, KnownGroups) {
  EXPECT_EQ(automorphism_count(build(complete_spec(12))), factorial(12));
  EXPECT_EQ(automorphism_count(Graph(12)), factorial(12));
  EXPECT_EQ(automorphism_count(build(cycle_spec(12))), 24U);
  EXPECT_EQ(automorphism_count(build(matching_spec(6))), 46080U);  // 2^6 6!
  EXPECT_EQ(automorphism_count(graph_from_source("K(3,3)")), 72U);
  EXPECT_EQ(automorphism_count(build(path_spec(7))), 2U);
  EXPECT_THROW(automorphism_count(Graph(13)), SizeCap);
}

TEST(CopyCounting, KnownValues) {
  const Graph k4 = build(complete_spec(4));
  EXPECT_EQ(count_copies(build(matching_spec(2)), k4), 3U);
  EXPECT_EQ(count_copies(build(path_spec(3)), k4), 12U);
  EXPECT_EQ(count_copies(build(complete_spec(3)), k4), 4U);
  EXPECT_EQ(count_copies(build(cycle_spec(4)), k4), 3U);
  EXPECT_EQ(count_copies(build(star_spec(3)), build(star_spec(4))), 4U);
  EXPECT_EQ(count_copies(build(complete_spec(2)), build(cycle_spec(9))), 9U);
  EXPECT_EQ(count_copies(Graph(0), k4), 1U);
  EXPECT_EQ(count_copies(build(complete_spec(5)), k4), 0U);
  // Isolated vertices in the pattern pick unused host vertices.
  EXPECT_EQ(count_copies(graph_from_source("K2+K1"), build(path_spec(3))), 2U);
  EXPECT_EQ(count_copies(graph_from_source("K2+K1"), k4), 12U);
}

TEST(CopyCounting, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> patterns = {"K2", "P3", "K3", "S3", "P4", "C4", "M2", "K2+P3", "K4", "2P3", "K1+K2"};
  for (const auto& src : patterns) {
    const Graph h = graph_from_source(src);
    const CopyCounter counter(h);
    for (int rep = 0; rep < 25; ++rep) {
      const int n = static_cast<int>(h.order() + rng() % 3);
      Graph g = oracle::random_graph(n, 0.6, rng);
      ASSERT_EQ(counter.by_embeddings(g), oracle::copies(h, g)) << src << " in " << serialize_graph6(g);
      ASSERT_EQ(contains(h, g), oracle::copies(h, g) > 0);
    }
  }
}

TEST(CopyCounting, MatchingRouteAgreesWithEmbeddings) {
  std::mt19937_64 rng(9);
  for (int t = 1; t <= 4; ++t) {
    const CopyCounter counter(build(matching_spec(t)));
    ASSERT_EQ(counter.matching_size(), t);
    for (int rep = 0; rep < 40; ++rep) {
      Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
      ASSERT_EQ(counter(g), counter.by_embeddings(g));
    }
  }
}
