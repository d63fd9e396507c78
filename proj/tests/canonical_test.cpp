#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/expr.hpp"

using namespace turanlab;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return g.relabeled(p);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = static_cast<int>(rng() % 17);
    Graph g = oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rep % 5) / 4, rng);
    const Graph c = canonical_form(g);
    ASSERT_EQ(canonical_form(shuffled(g, rng)), c) << serialize_graph6(g);
    ASSERT_TRUE(isomorphic(g, c));
  }
}

TEST(Canonical, RegularGraphs) {
  // Regular graphs defeat refinement alone and exercise individualisation.
  std::mt19937_64 rng(17);
  for (const char* src : {"C12", "2C6", "C5+C7", "3C4", "T(12,3)", "4K3", "K(4,4)"}) {
    Graph g = graph_from_source(src);
    for (int rep = 0; rep < 10; ++rep) ASSERT_EQ(canonical_form(shuffled(g, rng)), canonical_form(g)) << src;
  }
  EXPECT_FALSE(isomorphic(graph_from_source("C12"), graph_from_source("2C6")));
  EXPECT_FALSE(isomorphic(graph_from_source("C6"), graph_from_source("2K3")));
  EXPECT_FALSE(isomorphic(graph_from_source("C9"), graph_from_source("3K3")));
}

TEST(Canonical, SeparatesAllSmallClasses) {
  for (int n = 1; n <= 5; ++n) {
    const auto reps = oracle::all_classes(n);
    std::set<std::string> forms;
    for (const Graph& g : reps) forms.insert(canonical_graph6(g));
    EXPECT_EQ(forms.size(), reps.size());
  }
  EXPECT_THROW(canonical_form(Graph(17)), SizeCap);
}

TEST(Enumeration, ClassCounts) {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(enumerate_graphs(n).size(), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Enumeration, PairwiseNonIsomorphicAndComplete) {
  for (int n = 1; n <= 6; ++n) {
    const auto got = enumerate_graphs(n);
    const auto reps = oracle::all_classes(n);
    ASSERT_EQ(got.size(), reps.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      for (std::size_t j = i + 1; j < got.size(); ++j) ASSERT_FALSE(oracle::isomorphic(got[i], got[j]));
    for (const Graph& r : reps)
      ASSERT_TRUE(std::any_of(got.begin(), got.end(), [&](const Graph& g) { return oracle::isomorphic(g, r); }));
  }
}

TEST(Enumeration, PruningMatchesFiltering) {
  for (const char* f : {"K3", "P3", "K2+P3", "2P3", "S3", "M2", "C4", "K1", "E2"}) {
    const Graph fg = graph_from_source(f);
    for (int n = 0; n <= 7; ++n) {
      std::set<std::string> filtered, pruned;
      for (const Graph& g : enumerate_graphs(n))
        if (!contains(fg, g)) filtered.insert(canonical_graph6(g));
      for (const Graph& g : enumerate_graphs(n, fg)) pruned.insert(canonical_graph6(g));
      ASSERT_EQ(pruned, filtered) << f << " n=" << n;
    }
  }
}

TEST(Enumeration, WorkerCountDoesNotChangeOutput) {
  EnumerationOptions one, four;
  four.workers = 4;
  EXPECT_EQ(enumerate_graphs(7, one), enumerate_graphs(7, four));
  one.prune = four.prune = graph_from_source("K3");
  EXPECT_EQ(enumerate_graphs(8, one), enumerate_graphs(8, four));
  std::vector<Graph> streamed;
  for_each_graph(7, four, [&](const Graph& g) { streamed.push_back(g); });
  EXPECT_EQ(streamed, enumerate_graphs(7, one));
}

TEST(Enumeration, OrderCaps) {
  EXPECT_THROW(enumerate_graphs(10), SizeCap);
  EXPECT_THROW(enumerate_graphs(11), SizeCap);
  EXPECT_THROW(enumerate_graphs(-1), InvalidParams);
  EnumerationOptions opt;
  opt.allow_n10 = true;
  opt.prune = graph_from_source("S3");
  EXPECT_GT(enumerate_graphs(10, opt).size(), 0U);
}
