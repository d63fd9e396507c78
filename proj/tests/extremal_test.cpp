#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/expr.hpp"

using namespace turanlab;

namespace {

// Maximum over every labelled F-free graph on n vertices, no enumeration
// machinery involved.
Count labelled_ex(int n, const Graph& h, const Graph& f) {
  const int m = n * (n - 1) / 2;
  Count best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++k)
        if ((mask >> k) & 1U) g.add_edge(u, v);
    if (oracle::copies(f, g) == 0) best = std::max(best, oracle::copies(h, g));
  }
  return best;
}

}  // namespace

TEST(ExBrute, MatchesLabelledSearch) {
  for (const char* h : {"K2", "M2", "P3"})
    for (const char* f : {"K3", "P4", "K2+P3", "S3"})
      for (int n = 1; n <= 5; ++n) {
        const Graph hg = graph_from_source(h), fg = graph_from_source(f);
        EXPECT_EQ(ex_brute(n, hg, fg).value, labelled_ex(n, hg, fg)) << h << " " << f << " n=" << n;
      }
}

TEST(ExBrute, Mantel) {
  const Graph k2 = build(complete_spec(2)), k3 = build(complete_spec(3));
  for (int n = 1; n <= 9; ++n) {
    const ExtremalResult r = ex_brute(n, k2, k3);
    EXPECT_EQ(r.value, static_cast<Count>(n * n / 4));
    ASSERT_EQ(r.extremal.size(), 1U);
    EXPECT_EQ(r.extremal[0], canonical_graph6(build(turan_spec(n, 2))));
  }
}

TEST(ExBrute, MatchingsInKTwoPlusPThreeFree) {
  const ExtremalResult r = ex_brute(5, build(matching_spec(2)), graph_from_source("K2+P3"));
  EXPECT_EQ(r.value, 3U);
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.searched, enumerate_graphs(5, graph_from_source("K2+P3")).size());
  const std::string k4k1 = canonical_graph6(graph_from_source("K4+K1"));
  EXPECT_NE(std::find(r.extremal.begin(), r.extremal.end(), k4k1), r.extremal.end());
  EXPECT_TRUE(std::is_sorted(r.extremal.begin(), r.extremal.end()));
}

TEST(ExBrute, SinglePassAgreesWithSeparateRuns) {
  const Graph f = graph_from_source("2P3");
  for (int n = 2; n <= 8; ++n) {
    const auto all = ex_brute_matchings(n, f, 3);
    for (int t = 1; t <= 3; ++t) {
      const ExtremalResult one = ex_brute(n, build(matching_spec(t)), f);
      EXPECT_EQ(all[static_cast<std::size_t>(t - 1)].value, one.value);
      EXPECT_EQ(all[static_cast<std::size_t>(t - 1)].extremal, one.extremal);
    }
  }
}

TEST(ExBrute, DeterministicAcrossWorkers) {
  EnumerationOptions one, four;
  four.workers = 4;
  const Graph f = graph_from_source("P4"), h = build(matching_spec(2));
  for (int n = 4; n <= 9; ++n) {
    const ExtremalResult a = ex_brute(n, h, f, one), b = ex_brute(n, h, f, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.extremal, b.extremal);
    EXPECT_EQ(a.searched, b.searched);
  }
}

TEST(ExBrute, Caps) {
  const Graph k2 = build(complete_spec(2)), s3 = build(star_spec(3));
  EXPECT_THROW(ex_brute(10, k2, s3), SizeCap);
  EnumerationOptions opt;
  opt.allow_n10 = true;
  EXPECT_EQ(ex_brute(10, k2, s3, opt).value, 10U);  // 2-regular on 10 vertices
  EXPECT_THROW(ex_brute(11, k2, s3, opt), SizeCap);
  EXPECT_THROW(ex_brute_matchings(5, s3, 0), InvalidParams);
}

TEST(FamilyMax, PadsAndBreaksTies) {
  const Graph m2 = build(matching_spec(2));
  const FamilyMax fm = ex_over_family(6, m2, {complete_spec(4), matching_spec(3)});
  EXPECT_EQ(fm.value, 3U);
  EXPECT_EQ(fm.argmax, 0U);
  EXPECT_THROW(ex_over_family(3, m2, {complete_spec(4)}), InvalidSpec);
  EXPECT_THROW(ex_over_family(3, m2, {}), InvalidSpec);
}
