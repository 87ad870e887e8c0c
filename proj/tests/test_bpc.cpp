#include <gtest/gtest.h>

#include <random>

#include "bpc/bpc.hpp"
#include "bpc/errors.hpp"
#include "bpc/oracle.hpp"
#include "support.hpp"

using namespace bpc;
using bpc::test::make;
using bpc::test::q;

namespace {

ConflictInstance bipartite_instance(std::mt19937_64& rng, int n, double p, int lo = 1) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((u % 2) != (v % 2) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return make(bpc::test::random_sizes(rng, n, lo, 20), edges);
}

ConflictInstance split_instance(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  const int k = n / 3;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (v < k || (u < k && coin(rng))) edges.emplace_back(u, v);
    }
  }
  return make(bpc::test::random_sizes(rng, n), edges);
}

std::int64_t ceil_ratio(std::int64_t num, std::int64_t den, int opt) { return (num * opt + den - 1) / den; }

}  // namespace

TEST(ColorSets, SmallCases) {
  EXPECT_EQ(color_sets(make({}), recognize(make({}))).bin_count(), 0);
  auto flat = make({q(1, 2), q(1, 2), q(1, 2)});
  EXPECT_EQ(color_sets(flat, recognize(flat)).bin_count(), 2);
  // Bipartite, each side fits one bin.
  auto bip = make({q(1, 2), q(2, 5), q(1, 2), q(1, 2)}, {{0, 2}, {1, 3}, {0, 3}});
  EXPECT_EQ(color_sets(bip, recognize(bip)).bin_count(), 2);
  EXPECT_EQ(opt_bpc_exact(bip).opt, 2);
}

TEST(ColorSets, BoundAndFeasibilityOnRandomInstances) {
  std::mt19937_64 rng(81);
  for (int round = 0; round < 300; ++round) {
    auto inst = bipartite_instance(rng, 1 + static_cast<int>(rng() % 16), 0.3);
    auto info = recognize(inst);
    auto p = color_sets(inst, info);
    ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
    EXPECT_LE(Rational(p.bin_count()), color_sets_bound(inst, info));
  }
}

TEST(MaxSolve, SmallCases) {
  auto no_large = make({q(2, 5), q(1, 5)}, {{0, 1}});
  EXPECT_EQ(max_solve(no_large, recognize(no_large)).bins, color_sets(no_large, recognize(no_large)).bins);
  auto pair = make({q(7, 10), q(3, 10)});
  EXPECT_EQ(max_solve(pair, recognize(pair)).bin_count(), 1);
  auto conflict = make({q(7, 10), q(3, 10)}, {{0, 1}});
  EXPECT_EQ(max_solve(conflict, recognize(conflict)).bin_count(), 2);
}

TEST(MatchingPack, SmallCases) {
  auto two = make({q(2, 5), q(9, 20), q(1, 10)});
  auto p = matching_pack(two, recognize(two));
  EXPECT_EQ(p.bins.front(), (ItemSet{0, 1}));
  EXPECT_EQ(p.bin_count(), 2);
  auto apart = make({q(2, 5), q(9, 20)}, {{0, 1}});
  EXPECT_EQ(matching_pack(apart, recognize(apart)).bin_count(), 2);
  auto smalls = make({q(1, 5), q(1, 5)}, {{0, 1}});
  EXPECT_EQ(matching_pack(smalls, recognize(smalls)).bins, color_sets(smalls, recognize(smalls)).bins);
}

TEST(MatchingPack, BoundAgainstOracle) {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 200; ++round) {
    auto inst = bipartite_instance(rng, 1 + static_cast<int>(rng() % 14), 0.3);
    auto info = recognize(inst);
    auto p = matching_pack(inst, info);
    ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
    const auto chi = static_cast<std::int64_t>(minimum_coloring(inst, info).size());
    const auto smalls = classify_items(inst).small;
    const Rational bound = Rational(opt_bpc_exact(inst).opt + chi) + Rational(4, 3) * inst.total_size(smalls);
    EXPECT_LE(Rational(p.bin_count()), bound);
  }
}

TEST(ApproxBpc, ArgminOfSubroutines) {
  EXPECT_EQ(approx_bpc(make({}), recognize(make({}))).bin_count(), 0);
  std::mt19937_64 rng(89);
  for (int round = 0; round < 100; ++round) {
    auto inst = bipartite_instance(rng, 12, 0.3);
    auto info = recognize(inst);
    SolveDiagnostics diag;
    auto p = approx_bpc(inst, info, {}, &diag);
    ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
    EXPECT_EQ(diag.subroutine_bins.size(), 3u);
    for (const auto& [name, bins] : diag.subroutine_bins) EXPECT_LE(p.bin_count(), bins) << name;
    const int opt = opt_bpc_exact(inst).opt;
    EXPECT_LE(p.bin_count(), ceil_ratio(5, 3, opt));
  }
}

TEST(SplitApprox, SmallCases) {
  auto one = make({q(1, 5), q(1, 5), q(1, 2)});
  EXPECT_EQ(split_approx(one, recognize(one)).bin_count(), 1);
  auto clique = make({q(1, 2), q(1, 2)}, {{0, 1}});
  EXPECT_EQ(split_approx(clique, recognize(clique)).bin_count(), 2);
  auto c4 = make(std::vector<Rational>(4, q(1, 5)), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_THROW((void)split_approx(c4, recognize(c4)), CapabilityError);
}

TEST(SplitApprox, CeilingAgainstOracle) {
  std::mt19937_64 rng(97);
  for (int round = 0; round < 100; ++round) {
    auto inst = split_instance(rng, 12, 0.4);
    auto info = recognize(inst);
    ASSERT_TRUE(info.split);
    auto p = split_approx(inst, info);
    ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
    const int opt = opt_bpc_exact(inst).opt;
    EXPECT_LE(static_cast<long double>(p.bin_count()), std::ceil((1.0L + 2.0L / std::exp(1.0L)) * opt));
  }
}

TEST(AssignmentLp, HandExample) {
  auto inst = make({q(1, 2), q(1, 5), q(1, 5), q(1, 5)});
  Packing big{{{0}}, ""};
  ItemSet w{1, 2, 3};
  auto lp = build_assignment_lp(inst, big, w);
  auto sol = solve_assignment_lp(lp);
  EXPECT_NEAR(sol.objective, 2.5, 1e-9);
  EXPECT_LE(sol.fractional_items.size(), 1u);
  auto rounded = round_assignment(inst, big, w);
  EXPECT_EQ(rounded.bin_count(), 1);
  EXPECT_EQ(rounded.bins[0].size(), 3u);  // the big item and two tiny ones
  EXPECT_TRUE(validate_packing(inst, rounded, false).feasible);
}

TEST(AssignmentLp, EdgeCases) {
  auto inst = make({q(1, 2), q(1, 5)}, {{0, 1}});
  Packing big{{{0}}, ""};
  EXPECT_EQ(solve_assignment_lp(build_assignment_lp(inst, big, {})).objective, 0.0);
  ItemSet w{1};
  auto lp = build_assignment_lp(inst, big, w);
  EXPECT_TRUE(lp.eligible[0].empty());
  EXPECT_EQ(solve_assignment_lp(lp).objective, 0.0);
  ItemSet overlap{0};
  EXPECT_THROW((void)build_assignment_lp(inst, big, overlap), ParameterError);
  EXPECT_EQ(round_assignment(inst, Packing{}, w).bin_count(), 0);
  auto fits_all = make({q(1, 2), q(1, 10), q(1, 10)});
  ItemSet both{1, 2};
  EXPECT_EQ(round_assignment(fits_all, big, both).bins[0], (ItemSet{0, 1, 2}));
}

TEST(AssignmentLp, RoundingStructureOnRandomLps) {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 200; ++round) {
    const int t = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 10);
    std::vector<Rational> sizes;
    for (int i = 0; i < t; ++i) sizes.emplace_back(static_cast<std::int64_t>(5 + rng() % 12), 20);
    for (int i = 0; i < m; ++i) sizes.emplace_back(static_cast<std::int64_t>(1 + rng() % 9), 40);
    std::vector<Edge> edges;
    for (int b = 0; b < t; ++b) {
      for (int v = t; v < t + m; ++v) {
        if (rng() % 4 == 0) edges.emplace_back(b, v);
      }
    }
    auto inst = make(sizes, edges);
    Packing big;
    for (int b = 0; b < t; ++b) big.bins.push_back({b});
    ItemSet w;
    for (int v = t; v < t + m; ++v) w.push_back(v);
    LpSolution sol;
    auto rounded = round_assignment(inst, big, w, &sol);
    ASSERT_TRUE(validate_packing(inst, rounded, false).feasible);
    EXPECT_EQ(rounded.bin_count(), t);
    EXPECT_LE(static_cast<int>(sol.fractional_items.size()), t);
    const auto kept = static_cast<double>(rounded.items().size()) - t;
    EXPECT_GE(kept, sol.objective - t - 1e-7);
  }
}

TEST(Assign, NoBigItemsAndSkippedEnumeration) {
  auto tiny = make({q(1, 20000), q(1, 20000), q(1, 20000)}, {{0, 1}});
  auto info = recognize(tiny);
  ItemSet w{0};
  EXPECT_LE(assign(tiny, info, w).bin_count(), color_sets(tiny, info).bin_count());

  auto many = make(std::vector<Rational>(12, q(1, 4)));
  SolveDiagnostics diag;
  auto p = assign(many, recognize(many), {}, {}, &diag);
  EXPECT_EQ(p.bins, color_sets(many, recognize(many)).bins);
  EXPECT_EQ(diag.flags, (std::vector<std::string>{"enumeration-skipped"}));
}

TEST(Assign, EnumeratesBigPartitions) {
  // color_sets needs 3 bins ({a,b} apart); the partition {a,d},{b,c} uses 2.
  SolverConfig config;
  config.tiny_eps = q(1, 20);
  auto inst = make({q(3, 5), q(3, 5), q(7, 20), q(2, 5), q(1, 40)}, {{0, 2}, {1, 3}, {0, 4}, {1, 4}});
  auto info = recognize(inst);
  ASSERT_TRUE(info.bipartite);
  EXPECT_EQ(color_sets(inst, info, config).bin_count(), 3);
  SolveDiagnostics diag;
  ItemSet w{4};
  auto p = assign(inst, info, w, config, &diag);
  ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
  EXPECT_EQ(p.bin_count(), opt_bpc_exact(inst).opt);
  EXPECT_TRUE(diag.lemma12_ok);
  EXPECT_GT(diag.lemma12_runs, 0);
}

TEST(AbsBpb, SmallCasesAndCeiling) {
  EXPECT_EQ(abs_bpb(make({}), recognize(make({}))).bin_count(), 0);
  auto one = make({q(1, 5), q(1, 5)});
  EXPECT_EQ(abs_bpb(one, recognize(one)).bin_count(), 1);
  std::mt19937_64 rng(103);
  for (int round = 0; round < 100; ++round) {
    auto inst = bipartite_instance(rng, 1 + static_cast<int>(rng() % 14), 0.3);
    auto info = recognize(inst);
    auto p = abs_bpb(inst, info);
    ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
    EXPECT_LE(p.bin_count(), ceil_ratio(5, 3, opt_bpc_exact(inst).opt));
  }
  auto odd = make(std::vector<Rational>(3, q(1, 5)), {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW((void)abs_bpb(odd, recognize(odd)), CapabilityError);
}

TEST(AbsBpb, LargerInstancesUseBoundedSearch) {
  std::mt19937_64 rng(107);
  auto inst = bipartite_instance(rng, 20, 0.2, 1);
  SolveDiagnostics diag;
  auto p = abs_bpb(inst, recognize(inst), {}, &diag);
  EXPECT_TRUE(bpc::test::brute_feasible(inst, p));
}

TEST(Multipartite, SmallCases) {
  auto two = make({q(3, 5), q(3, 5), q(3, 5), q(3, 5)}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto info = recognize(two);
  ASSERT_TRUE(info.complete_multipartite);
  EXPECT_EQ(multipartite_pack(two, info).bin_count(), 4);
  EXPECT_EQ(opt_bpc_exact(two).opt, 4);
  auto flat = make({q(1, 2), q(1, 2), q(1, 3)});
  EXPECT_EQ(multipartite_pack(flat, recognize(flat)).bin_count(), 2);
  EXPECT_EQ(multipartite_pack(make({}), recognize(make({}))).bin_count(), 0);
}

TEST(Multipartite, PerPartOptimumEqualsOracle) {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const int parts = 1 + static_cast<int>(rng() % 4);
    std::vector<int> part(static_cast<std::size_t>(n));
    for (auto& p : part) p = static_cast<int>(rng() % static_cast<std::uint64_t>(parts));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
      }
    }
    auto inst = make(bpc::test::random_sizes(rng, n), edges);
    auto info = recognize(inst);
    ASSERT_TRUE(info.complete_multipartite);
    auto p = multipartite_pack(inst, info);
    ASSERT_TRUE(bpc::test::brute_feasible(inst, p));
    EXPECT_EQ(p.bin_count(), opt_bpc_exact(inst).opt);
  }
}

TEST(Solve, Dispatch) {
  auto inst = make({q(1, 2), q(1, 2)}, {{0, 1}});
  auto info = recognize(inst);
  for (const auto& name : algorithm_names()) {
    if (!applicable(name, info)) continue;
    auto p = solve(name, inst, info);
    EXPECT_EQ(p.bin_count(), 2) << name;
    EXPECT_TRUE(bpc::test::brute_feasible(inst, p)) << name;
  }
  EXPECT_THROW((void)solve("nope", inst, info), ParameterError);
  EXPECT_THROW((void)applicable("nope", info), ParameterError);
}
