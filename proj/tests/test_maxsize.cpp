#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bpc/errors.hpp"
#include "bpc/maxsize.hpp"
#include "bpc/oracle.hpp"
#include "support.hpp"

using namespace bpc;
using bpc::test::make;
using bpc::test::q;

namespace {

MaxSizeOptions with(MaxSizeStrategy strategy, std::uint64_t seed = 0) {
  MaxSizeOptions o;
  o.strategy = strategy;
  o.seed = seed;
  return o;
}

void expect_contract(const ConflictInstance& inst, const Packing& initial, const MaxSizeResult& r) {
  ASSERT_EQ(r.augmented.bin_count(), initial.bin_count());
  for (std::size_t b = 0; b < initial.bins.size(); ++b) {
    for (ItemId v : initial.bins[b]) {
      EXPECT_NE(std::find(r.augmented.bins[b].begin(), r.augmented.bins[b].end(), v), r.augmented.bins[b].end());
    }
  }
  EXPECT_TRUE(validate_packing(inst, r.augmented, false).feasible);
  EXPECT_EQ(inst.total_size(r.added_items), r.added_size);
  EXPECT_EQ(r.augmented.items().size(), initial.items().size() + r.added_items.size());
}

}  // namespace

TEST(MaxSize, OneEmptyBin) {
  auto inst = make({q(7, 10), q(3, 5), q(3, 10)});
  Packing one{{{}}, ""};
  for (auto strategy : {MaxSizeStrategy::kGreedySequential, MaxSizeStrategy::kConfigLp}) {
    auto r = max_size(inst, one, recognize(inst), with(strategy));
    expect_contract(inst, one, r);
    EXPECT_EQ(r.added_items, (ItemSet{0, 2}));
    EXPECT_EQ(r.added_size, Rational(1));
  }
}

TEST(MaxSize, NothingToAdd) {
  auto inst = make({q(3, 5), q(3, 10)});
  Packing full{{{0, 1}}, ""};
  auto r = max_size(inst, full, recognize(inst));
  EXPECT_EQ(r.augmented.bins, full.bins);
  EXPECT_EQ(r.added_size, Rational(0));
  EXPECT_TRUE(r.added_items.empty());
}

TEST(MaxSize, ConflictSteersToSecondBin) {
  // l1 = 0, l2 = 1, x = 2 with conflict (x, l1).
  auto inst = make({q(3, 5), q(3, 5), q(3, 10)}, {{0, 2}});
  Packing bins{{{0}, {1}}, ""};
  ASSERT_EQ(maxsize_brute(inst, bins), q(3, 10));
  for (auto strategy : {MaxSizeStrategy::kGreedySequential, MaxSizeStrategy::kConfigLp}) {
    auto r = max_size(inst, bins, recognize(inst), with(strategy));
    expect_contract(inst, bins, r);
    EXPECT_EQ(r.augmented.bins, (std::vector<ItemSet>{{0}, {1, 2}}));
  }
}

TEST(MaxSize, RejectsInfeasibleInitial) {
  auto inst = make({q(3, 5), q(3, 5)});
  Packing bad{{{0, 1}}, ""};
  EXPECT_THROW((void)max_size(inst, bad, recognize(inst)), ParameterError);
}

TEST(MaxSize, UnsupportedClass) {
  auto inst = make(std::vector<Rational>(5, q(1, 10)), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Packing one{{{}}, ""};
  EXPECT_THROW((void)max_size(inst, one, recognize(inst)), CapabilityError);
}

TEST(MaxSize, SingleBinSubproblem) {
  auto inst = make({q(1, 5), q(1, 5), q(1, 5), q(1, 5)}, {{0, 2}});
  ItemSet bin{0, 1};
  ItemSet avail{2, 3};
  auto sub = single_bin_subproblem(inst, bin, avail);
  EXPECT_EQ(sub.items, (ItemSet{3}));
  EXPECT_EQ(sub.budget, q(3, 5));
}

TEST(MaxSize, HalfOfBruteOnRandomCases) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 150; ++round) {
    const int n = 4 + static_cast<int>(rng() % 12);
    auto sizes = bpc::test::random_sizes(rng, n);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if ((u % 2) != (v % 2) && rng() % 4 == 0) edges.emplace_back(u, v);
      }
    }
    auto inst = make(sizes, edges);
    // Pack a random prefix first-fit into up to 3 bins.
    Packing initial;
    std::vector<Rational> loads;
    for (int v = 0; v < n && v < 4; ++v) {
      std::size_t b = 0;
      while (b < initial.bins.size() && !fits(inst, initial.bins[b], loads[b], v)) ++b;
      if (b == initial.bins.size()) {
        if (b == 3) continue;
        initial.bins.emplace_back();
        loads.emplace_back();
      }
      initial.bins[b].push_back(v);
      loads[b] += inst.size_at(v);
    }
    initial.bins.emplace_back();
    const Rational best = maxsize_brute(inst, initial);
    for (auto strategy : {MaxSizeStrategy::kGreedySequential, MaxSizeStrategy::kConfigLp}) {
      auto r = max_size(inst, initial, recognize(inst), with(strategy, static_cast<std::uint64_t>(round)));
      expect_contract(inst, initial, r);
      if (strategy == MaxSizeStrategy::kGreedySequential) EXPECT_GE(r.added_size, q(1, 2) * best);
    }
  }
}

TEST(MaxSize, ConfigLpIsDeterministicPerSeed) {
  auto inst = make(bpc::test::twentieths({9, 8, 7, 6, 5, 4, 3, 3}), {{0, 1}, {0, 2}});
  Packing initial{{{}, {}, {}}, ""};
  auto a = max_size(inst, initial, recognize(inst), with(MaxSizeStrategy::kConfigLp, 5));
  auto b = max_size(inst, initial, recognize(inst), with(MaxSizeStrategy::kConfigLp, 5));
  EXPECT_EQ(a.augmented.bins, b.augmented.bins);
  EXPECT_EQ(a.strategy, "config-lp");
  EXPECT_NEAR(a.guarantee, (1 - 1 / std::numbers::e) * 0.9, 1e-12);  // split oracle, eps 1/10
}

TEST(MaxSize, StrategyNames) {
  EXPECT_EQ(parse_strategy("config-lp"), MaxSizeStrategy::kConfigLp);
  EXPECT_EQ(to_string(parse_strategy("greedy-sequential")), "greedy-sequential");
  EXPECT_THROW((void)parse_strategy("lp"), ParameterError);
}
