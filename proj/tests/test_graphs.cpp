#include <gtest/gtest.h>

#include <random>

#include "bpc/errors.hpp"
#include "bpc/graphs.hpp"
#include "support.hpp"

using namespace bpc;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

}  // namespace

TEST(Recognize, FourCycle) {
  auto info = recognize(cycle(4));
  EXPECT_TRUE(info.bipartite);
  EXPECT_EQ(info.side_x.size(), 2u);
  EXPECT_EQ(info.side_y.size(), 2u);
  EXPECT_FALSE(info.split);
  EXPECT_FALSE(info.chordal);
  EXPECT_TRUE(info.complete_multipartite);  // C4 = K_{2,2}
}

TEST(Recognize, Triangle) {
  auto info = recognize(complete(3));
  EXPECT_TRUE(info.split);
  EXPECT_EQ(info.clique.size() + info.independent.size(), 3u);
  EXPECT_TRUE(info.complete_multipartite);
  EXPECT_EQ(info.parts.size(), 3u);
  EXPECT_TRUE(info.chordal);
  EXPECT_FALSE(info.bipartite);
}

TEST(Recognize, Edgeless) {
  auto info = recognize(Graph(3));
  EXPECT_TRUE(info.edgeless && info.bipartite && info.cluster && info.chordal);
  EXPECT_TRUE(info.complete_multipartite);
  EXPECT_EQ(info.parts.size(), 1u);
}

TEST(Recognize, FiveCycleIsUnsupported) {
  auto info = recognize(cycle(5));
  EXPECT_FALSE(info.supported());
  EXPECT_THROW((void)minimum_coloring(cycle(5), info), CapabilityError);
  std::vector<double> w(5, 1.0);
  EXPECT_THROW((void)max_weight_independent_set<double>(cycle(5), info, w), CapabilityError);
}

TEST(Recognize, CertificatesVerifyOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 2000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const double p = (rng() % 10) / 10.0;
    Graph g(n, bpc::test::random_edges(rng, n, p));
    auto info = recognize(g);
    ASSERT_TRUE(verify_certificates(g, info));
    // Brute split check: some vertex subset is a clique with an independent complement.
    bool split = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !split; ++mask) {
      std::vector<int> k, s;
      for (int v = 0; v < n; ++v) ((mask >> v & 1u) ? k : s).push_back(v);
      split = g.is_clique(k) && g.is_independent(s);
    }
    EXPECT_EQ(info.split, split);
  }
}

TEST(Recognize, HasClass) {
  auto info = recognize(complete(3));
  EXPECT_TRUE(has_class(info, "split"));
  EXPECT_FALSE(has_class(info, "bipartite"));
  EXPECT_THROW((void)has_class(info, "planar"), ParameterError);
}

TEST(Coloring, SmallCases) {
  EXPECT_EQ(minimum_coloring(cycle(4), recognize(cycle(4))).size(), 2u);
  EXPECT_EQ(minimum_coloring(complete(3), recognize(complete(3))).size(), 3u);
  // K = {a, b}, S = {c}; edges (a,b), (a,c). Brute-force chi is 2.
  Graph split(3, std::vector<Edge>{{0, 1}, {0, 2}});
  ASSERT_EQ(bpc::test::brute_chromatic(split), 2);
  auto classes = minimum_coloring(split, recognize(split));
  EXPECT_EQ(classes.size(), 2u);
  EXPECT_TRUE(minimum_coloring(Graph(0), recognize(Graph(0))).empty());
}

TEST(Coloring, MatchesBruteChromaticOnSupportedGraphs) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int round = 0; round < 3000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Graph g(n, bpc::test::random_edges(rng, n, (rng() % 10) / 10.0));
    auto info = recognize(g);
    if (!info.supported()) continue;
    ++checked;
    auto classes = minimum_coloring(g, info);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto& c : classes) {
      EXPECT_TRUE(g.is_independent(c));
      for (int v : c) ++count[static_cast<std::size_t>(v)];
    }
    for (int c : count) EXPECT_EQ(c, 1);
    EXPECT_EQ(static_cast<int>(classes.size()), bpc::test::brute_chromatic(g));
  }
  EXPECT_GT(checked, 500);
}

TEST(Mwis, SmallCases) {
  Graph path(3, std::vector<Edge>{{0, 1}, {1, 2}});
  std::vector<Rational> w{Rational(1), Rational(3), Rational(1)};
  EXPECT_EQ(max_weight_independent_set<Rational>(path, recognize(path), w), (std::vector<int>{1}));

  std::vector<Rational> ones(3, Rational(1));
  EXPECT_EQ(max_weight_independent_set<Rational>(Graph(3), recognize(Graph(3)), ones), (std::vector<int>{0, 1, 2}));

  std::vector<Rational> tri{Rational(2), Rational(5), Rational(1)};
  EXPECT_EQ(max_weight_independent_set<Rational>(complete(3), recognize(complete(3)), tri), (std::vector<int>{1}));

  std::vector<Rational> zero{Rational(0), Rational(0), Rational(1)};
  EXPECT_EQ(max_weight_independent_set<Rational>(Graph(3), recognize(Graph(3)), zero), (std::vector<int>{2}));
}

TEST(Mwis, MatchesBruteForcePerClass) {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int round = 0; round < 4000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Graph g(n, bpc::test::random_edges(rng, n, (rng() % 10) / 10.0));
    auto info = recognize(g);
    if (!info.supported()) continue;
    ++checked;
    std::vector<Rational> w;
    for (int v = 0; v < n; ++v) w.emplace_back(static_cast<std::int64_t>(rng() % 20), 20);
    auto set = max_weight_independent_set<Rational>(g, info, w);
    EXPECT_TRUE(g.is_independent(set));
    Rational value;
    for (int v : set) value += w[static_cast<std::size_t>(v)];
    EXPECT_EQ(value, bpc::test::brute_mwis(g, w));
  }
  EXPECT_GT(checked, 500);
}

TEST(Mwis, BipartiteDenseMatchesBrute) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 500; ++round) {
    const int a = 1 + static_cast<int>(rng() % 8), b = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u) {
      for (int v = 0; v < b; ++v) {
        if (rng() % 2) e.emplace_back(u, a + v);
      }
    }
    Graph g(a + b, e);
    std::vector<double> w;
    for (int v = 0; v < a + b; ++v) w.push_back(static_cast<double>(rng() % 10));
    auto info = recognize(g);
    ASSERT_TRUE(info.bipartite);
    auto set = max_weight_independent_set<double>(g, info, w);
    EXPECT_TRUE(g.is_independent(set));
    double value = 0;
    for (int v : set) value += w[static_cast<std::size_t>(v)];
    EXPECT_DOUBLE_EQ(value, bpc::test::brute_mwis(g, w));
  }
}

TEST(Matching, SmallCases) {
  std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(maximum_matching_general(3, tri).size(), 1u);
  std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(maximum_matching_general(4, path), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(maximum_matching_general(4, {}).empty());
}

TEST(Matching, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    auto edges = bpc::test::random_edges(rng, n, (rng() % 10) / 10.0);
    auto m = maximum_matching_general(n, edges);
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    Graph g(n, edges);
    for (auto [u, v] : m) {
      EXPECT_TRUE(g.adjacent(u, v));
      EXPECT_EQ(used[static_cast<std::size_t>(u)]++, 0);
      EXPECT_EQ(used[static_cast<std::size_t>(v)]++, 0);
    }
    EXPECT_EQ(static_cast<int>(m.size()), bpc::test::brute_matching(n, edges));
  }
}
