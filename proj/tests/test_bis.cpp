#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bpc/bis.hpp"
#include "bpc/errors.hpp"
#include "bpc/oracle.hpp"
#include "support.hpp"

using namespace bpc;
using bpc::test::q;

namespace {

Rational weight_of(const std::vector<int>& set, const std::vector<Rational>& w) {
  Rational sum;
  for (int v : set) sum += w[static_cast<std::size_t>(v)];
  return sum;
}

// Random graph in a supported class: picks a generator by round.
Graph random_supported(std::mt19937_64& rng, int n, int kind) {
  std::vector<Edge> e;
  std::bernoulli_distribution coin(0.4);
  switch (kind % 4) {
    case 0: {  // bipartite
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if ((u % 2) != (v % 2) && coin(rng)) e.emplace_back(u, v);
        }
      }
      break;
    }
    case 1: {  // split: first third is the clique
      const int k = n / 3;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (v < k || (u < k && coin(rng))) e.emplace_back(u, v);
        }
      }
      break;
    }
    case 2: {  // cluster
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (u % 3 == v % 3) e.emplace_back(u, v);
        }
      }
      break;
    }
    default: {  // chordal: each vertex joins a clique of earlier vertices
      Graph g(n);
      for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        std::vector<int> clique{u};
        for (int x : g.neighbors(u)) {
          if (x < v && coin(rng) &&
              std::all_of(clique.begin(), clique.end(), [&](int y) { return g.adjacent(x, y); })) {
            clique.push_back(x);
          }
        }
        for (int x : clique) g.add_edge(x, v);
      }
      return g;
    }
  }
  return Graph(n, e);
}

}  // namespace

TEST(Knapsack, SmallCases) {
  std::vector<Rational> v{q(3, 5), q(1, 2), q(2, 5)};
  auto set = knapsack_fptas<Rational>(v, v, Rational(1), q(1, 10));
  EXPECT_EQ(set, (std::vector<int>{0, 2}));
  EXPECT_TRUE(knapsack_fptas<Rational>(v, v, Rational(0), q(1, 10)).empty());
  std::vector<Rational> one{q(3, 10)};
  EXPECT_EQ(knapsack_fptas<Rational>(one, one, Rational(1), q(1, 10)), (std::vector<int>{0}));
  EXPECT_THROW((void)knapsack_fptas<Rational>(v, v, Rational(1), Rational(1)), ParameterError);
  EXPECT_THROW((void)knapsack_fptas<Rational>(v, v, Rational(1), Rational(0)), ParameterError);
}

TEST(Knapsack, ScaledPathMeetsGuarantee) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<double> p, c;
    for (int i = 0; i < n; ++i) {
      p.push_back(static_cast<double>(rng() % 1000) / 997.0);
      c.push_back(static_cast<double>(rng() % 1000) / 991.0);
    }
    const double budget = 2.0;
    auto set = knapsack_fptas<double>(p, c, budget, 0.2);
    double got = 0, cost = 0;
    for (int i : set) {
      got += p[static_cast<std::size_t>(i)];
      cost += c[static_cast<std::size_t>(i)];
    }
    EXPECT_LE(cost, budget + 1e-12);
    double best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      double pv = 0, cv = 0;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
          pv += p[static_cast<std::size_t>(i)];
          cv += c[static_cast<std::size_t>(i)];
        }
      }
      if (cv <= budget) best = std::max(best, pv);
    }
    EXPECT_GE(got, 0.8 * best - 1e-12);
  }
}

TEST(BisPtas, SmallCases) {
  auto edgeless = make_bis_problem<Rational>(Graph(3), {q(3, 5), q(1, 2), q(2, 5)}, Rational(1));
  auto set = bis_ptas(edgeless, q(1, 2));
  EXPECT_GE(weight_of(set, edgeless.weights), q(1, 2));
  EXPECT_EQ(set, (std::vector<int>{0, 2}));

  Graph star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  auto sp = make_bis_problem<Rational>(star, {q(9, 10), q(3, 10), q(3, 10), q(3, 10)}, Rational(1));
  EXPECT_EQ(bis_ptas(sp, q(1, 2)), (std::vector<int>{1, 2, 3}));

  auto slack = make_bis_problem<Rational>(Graph(4), {q(1, 5), q(1, 5), q(1, 5), q(1, 5)}, Rational(1));
  EXPECT_EQ(weight_of(bis_ptas(slack, q(1, 4)), slack.weights), q(4, 5));
}

TEST(BisPtas, RejectsTinyEpsAndUnsupportedGraphs) {
  auto p = make_bis_problem<Rational>(Graph(2), {q(1, 2), q(1, 2)}, Rational(1));
  EXPECT_THROW((void)bis_ptas(p, q(1, 10)), ParameterError);
  EXPECT_NO_THROW((void)bis_ptas(p, q(1, 6)));
  Graph c5(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto bad = make_bis_problem<Rational>(c5, std::vector<Rational>(5, q(1, 5)), Rational(1));
  EXPECT_THROW((void)bis_ptas(bad, q(1, 2)), CapabilityError);
}

TEST(BisPtas, GuaranteeAgainstBrute) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 14);
    auto g = random_supported(rng, n, round);
    std::vector<Rational> w;
    for (int v = 0; v < n; ++v) w.emplace_back(static_cast<std::int64_t>(rng() % 20), 20);
    auto problem = make_bis_problem<Rational>(g, w, Rational(static_cast<std::int64_t>(1 + rng() % 3), 2));
    BisTrace trace;
    auto set = bis_ptas(problem, q(1, 4), kDefaultEnumerationCap, &trace);
    EXPECT_TRUE(g.is_independent(set));
    const Rational value = weight_of(set, w);
    EXPECT_LE(value, problem.budget);
    EXPECT_GE(value, q(3, 4) * bis_brute(problem).value);
    EXPECT_TRUE(trace.eviction_bound_ok);
    EXPECT_GT(trace.guesses, 0);
  }
}

TEST(BisSplit, SmallCases) {
  // k = 0 in the clique, s1 = 1, s2 = 2; edge (k, s1).
  Graph g(3, std::vector<Edge>{{0, 1}});
  auto p = make_bis_problem<Rational>(g, {q(2, 5), q(3, 10), q(3, 10)}, Rational(1));
  ASSERT_TRUE(p.info.split);
  auto set = bis_fptas_split(p, q(1, 100));
  EXPECT_EQ(weight_of(set, p.weights), q(7, 10));
  EXPECT_TRUE(g.is_independent(set));

  auto zero = make_bis_problem<Rational>(g, {q(2, 5), q(3, 10), q(3, 10)}, Rational(0));
  EXPECT_TRUE(bis_fptas_split(zero, q(1, 10)).empty());

  auto flat = make_bis_problem<Rational>(Graph(3), {q(3, 5), q(1, 2), q(2, 5)}, Rational(1));
  EXPECT_EQ(weight_of(bis_fptas_split(flat, q(1, 10)), flat.weights), Rational(1));

  Graph c4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto bad = make_bis_problem<Rational>(c4, std::vector<Rational>(4, q(1, 5)), Rational(1));
  EXPECT_THROW((void)bis_fptas_split(bad, q(1, 10)), CapabilityError);
}

TEST(BisSplit, GuaranteeAgainstBrute) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 14);
    auto g = random_supported(rng, n, 1);
    std::vector<double> w;
    for (int v = 0; v < n; ++v) w.push_back(static_cast<double>(rng() % 1000) / 1009.0);
    auto problem = make_bis_problem<double>(g, w, 1.0 + static_cast<double>(rng() % 3) / 2.0);
    ASSERT_TRUE(problem.info.split);
    auto set = bis_fptas_split(problem, 0.1);
    EXPECT_TRUE(g.is_independent(set));
    double value = 0;
    for (int v : set) value += w[static_cast<std::size_t>(v)];
    EXPECT_LE(value, problem.budget + 1e-12);
    EXPECT_GE(value, 0.9 * bis_brute(problem).value - 1e-12);
  }
}

TEST(InducedInfo, KeepsCertificatesValid) {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 12);
    auto g = random_supported(rng, n, round);
    auto info = recognize(g);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) keep.push_back(v);
    }
    auto sub = g.induced(keep);
    EXPECT_TRUE(verify_certificates(sub, induced_info(info, sub, keep, n)));
  }
}
