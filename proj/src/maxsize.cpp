#include "bpc/maxsize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bpc/errors.hpp"
#include "bpc/rng.hpp"
#include "bpc/simplex.hpp"

namespace bpc {
namespace {

constexpr int kExactPricingLimit = 16;
constexpr double kReducedCostTolerance = 1e-9;

struct Oracle {
  BisOracle kind = BisOracle::kPtas;
  double ratio = 0.0;
};

Oracle pick_oracle(const GraphClassInfo& info, const MaxSizeOptions& options) {
  Oracle out;
  out.kind = options.oracle;
  if (out.kind == BisOracle::kAuto) out.kind = info.split ? BisOracle::kSplitFptas : BisOracle::kPtas;
  out.ratio = 1.0 - (out.kind == BisOracle::kSplitFptas ? options.fptas_eps : options.eps).to_double();
  return out;
}

// Runs the oracle on the items `pool` (locals) with weights = sizes.
std::vector<int> solve_bin(const ConflictInstance& instance, const GraphClassInfo& info,
                           const std::vector<int>& pool, const Rational& budget, const Oracle& oracle,
                           const MaxSizeOptions& options) {
  if (pool.empty()) return {};
  BisProblem<Rational> problem;
  problem.graph = instance.graph().induced(pool);
  problem.info = induced_info(info, problem.graph, pool, instance.size());
  for (int l : pool) problem.weights.push_back(instance.size_at(l));
  problem.budget = budget;
  const auto chosen = oracle.kind == BisOracle::kSplitFptas
                          ? bis_fptas_split(problem, options.fptas_eps)
                          : bis_ptas(problem, options.eps, options.enumeration_cap);
  std::vector<int> out;
  for (int i : chosen) out.push_back(pool[static_cast<std::size_t>(i)]);
  return out;
}

struct State {
  std::vector<std::vector<int>> bins;  // locals
  std::vector<Rational> loads;
  std::vector<char> packed;
};

State load_state(const ConflictInstance& instance, const Packing& initial) {
  const auto report = validate_packing(instance, initial, false);
  if (!report.feasible) {
    throw ParameterError("max_size: initial packing is infeasible (" + to_string(report.violations[0].kind) + ": " +
                         report.violations[0].detail + ")");
  }
  State s;
  s.packed.assign(static_cast<std::size_t>(instance.size()), 0);
  for (const auto& bin : initial.bins) {
    s.bins.push_back(instance.to_locals(bin));
    s.loads.push_back(instance.total_size(bin));
    for (int l : s.bins.back()) s.packed[static_cast<std::size_t>(l)] = 1;
  }
  return s;
}

std::vector<int> pool_for(const ConflictInstance& instance, const State& s, std::size_t bin) {
  std::vector<int> pool;
  for (int l = 0; l < instance.size(); ++l) {
    if (!s.packed[static_cast<std::size_t>(l)] && instance.graph().independent_of(l, s.bins[bin])) pool.push_back(l);
  }
  return pool;
}

MaxSizeResult finish(const ConflictInstance& instance, const Packing& initial, const State& s) {
  MaxSizeResult out;
  out.augmented.source = initial.source;
  for (std::size_t b = 0; b < s.bins.size(); ++b) {
    ItemSet ids = instance.to_ids(s.bins[b]);
    for (ItemId id : ids) {
      if (std::find(initial.bins[b].begin(), initial.bins[b].end(), id) == initial.bins[b].end()) {
        out.added_items.push_back(id);
        out.added_size += instance.size_of(id);
      }
    }
    std::sort(ids.begin(), ids.end());
    out.augmented.bins.push_back(std::move(ids));
  }
  std::sort(out.added_items.begin(), out.added_items.end());
  return out;
}

void greedy_fill(const ConflictInstance& instance, const GraphClassInfo& info, const Oracle& oracle,
                 const MaxSizeOptions& options, State& s) {
  for (std::size_t b = 0; b < s.bins.size(); ++b) {
    const auto pool = pool_for(instance, s, b);
    for (int l : solve_bin(instance, info, pool, Rational(1) - s.loads[b], oracle, options)) {
      s.bins[b].push_back(l);
      s.loads[b] += instance.size_at(l);
      s.packed[static_cast<std::size_t>(l)] = 1;
    }
  }
}

struct Column {
  std::size_t bin = 0;
  std::vector<int> items;  // locals
  double value = 0.0;
};

// Best configuration for one bin under item prices `price`: maximize
// sum(s_v - price_v) over independent sets within `budget`.
std::vector<int> price_exact(const ConflictInstance& instance, const std::vector<int>& pool,
                             const std::vector<double>& profit, const Rational& budget) {
  std::vector<int> best, current;
  double best_value = 0.0;
  const auto m = pool.size();
  std::vector<double> suffix(m + 1, 0.0);
  for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] + profit[k];
  auto dfs = [&](auto&& self, std::size_t k, double value, const Rational& load) -> void {
    if (value > best_value + kReducedCostTolerance) {
      best_value = value;
      best = current;
    }
    if (k == m || value + suffix[k] <= best_value + kReducedCostTolerance) return;
    const int v = pool[k];
    const Rational next = load + instance.size_at(v);
    if (!(next > budget) && instance.graph().independent_of(v, current)) {
      current.push_back(v);
      self(self, k + 1, value + profit[k], next);
      current.pop_back();
    }
    self(self, k + 1, value, load);
  };
  dfs(dfs, 0, 0.0, Rational(0));
  return best;
}

bool config_lp_fill(const ConflictInstance& instance, const GraphClassInfo& info, const Oracle& oracle,
                    const MaxSizeOptions& options, State& s) {
  const std::size_t t = s.bins.size();
  std::vector<int> open;
  for (int l = 0; l < instance.size(); ++l) {
    if (!s.packed[static_cast<std::size_t>(l)]) open.push_back(l);
  }
  if (t == 0 || open.empty()) return true;
  std::vector<int> row_of(static_cast<std::size_t>(instance.size()), -1);
  for (std::size_t i = 0; i < open.size(); ++i) row_of[static_cast<std::size_t>(open[i])] = static_cast<int>(t + i);

  std::vector<std::vector<int>> pools(t);
  std::vector<Rational> budgets(t);
  for (std::size_t b = 0; b < t; ++b) {
    pools[b] = pool_for(instance, s, b);
    budgets[b] = Rational(1) - s.loads[b];
  }

  std::vector<Column> columns;
  auto add_column = [&](std::size_t b, std::vector<int> items) {
    Column c;
    c.bin = b;
    for (int l : items) c.value += instance.size_at(l).to_double();
    c.items = std::move(items);
    columns.push_back(std::move(c));
  };
  // Warm start with the greedy configurations.
  {
    State warm = s;
    greedy_fill(instance, info, oracle, options, warm);
    for (std::size_t b = 0; b < t; ++b) {
      std::vector<int> added(warm.bins[b].begin() + static_cast<std::ptrdiff_t>(s.bins[b].size()), warm.bins[b].end());
      if (!added.empty()) add_column(b, std::move(added));
    }
  }

  const int cap = 10 * static_cast<int>(t + open.size());
  const auto rows = static_cast<Eigen::Index>(t + open.size());
  SimplexResult lp_result;
  bool converged = false;
  for (int iteration = 0; iteration < cap; ++iteration) {
    LinearProgram lp;
    lp.a = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(columns.size()));
    lp.b = Eigen::VectorXd::Ones(rows);
    lp.c.resize(static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto col = static_cast<Eigen::Index>(j);
      lp.a(static_cast<Eigen::Index>(columns[j].bin), col) = 1.0;
      for (int l : columns[j].items) lp.a(row_of[static_cast<std::size_t>(l)], col) = 1.0;
      lp.c(col) = columns[j].value;
    }
    lp_result = solve_simplex(lp);

    bool added = false;
    for (std::size_t b = 0; b < t; ++b) {
      std::vector<int> pool;
      std::vector<double> profit;
      for (int l : pools[b]) {
        const double p = instance.size_at(l).to_double() - lp_result.duals(row_of[static_cast<std::size_t>(l)]);
        if (p > kReducedCostTolerance) {
          pool.push_back(l);
          profit.push_back(p);
        }
      }
      std::vector<int> config;
      if (static_cast<int>(pool.size()) <= kExactPricingLimit) {
        config = price_exact(instance, pool, profit, budgets[b]);
      } else {
        config = solve_bin(instance, info, pool, budgets[b], oracle, options);
      }
      double reduced = -lp_result.duals(static_cast<Eigen::Index>(b));
      for (int l : config) {
        reduced += instance.size_at(l).to_double() - lp_result.duals(row_of[static_cast<std::size_t>(l)]);
      }
      if (!config.empty() && reduced > kReducedCostTolerance) {
        std::sort(config.begin(), config.end());
        add_column(b, std::move(config));
        added = true;
      }
    }
    if (!added) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;

  // Sample one configuration per bin; an item goes to the first bin whose
  // sample contains it.
  SplitMix64 rng(options.seed);
  for (std::size_t b = 0; b < t; ++b) {
    const double u = rng.uniform01();
    double acc = 0.0;
    const Column* pick = nullptr;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].bin != b) continue;
      acc += std::max(0.0, lp_result.x(static_cast<Eigen::Index>(j)));
      if (u < acc) {
        pick = &columns[j];
        break;
      }
    }
    if (pick == nullptr) continue;
    for (int l : pick->items) {
      if (s.packed[static_cast<std::size_t>(l)]) continue;
      s.bins[b].push_back(l);
      s.loads[b] += instance.size_at(l);
      s.packed[static_cast<std::size_t>(l)] = 1;
    }
  }
  return true;
}

}  // namespace

SingleBinProblem single_bin_subproblem(const ConflictInstance& instance, const ItemSet& bin,
                                       std::span<const ItemId> available) {
  SingleBinProblem out;
  out.budget = Rational(1) - instance.total_size(bin);
  for (ItemId v : available) {
    if (std::none_of(bin.begin(), bin.end(), [&](ItemId u) { return instance.conflict(u, v); })) {
      out.items.push_back(v);
    }
  }
  return out;
}

MaxSizeResult max_size(const ConflictInstance& instance, const Packing& initial, const GraphClassInfo& info,
                       const MaxSizeOptions& options) {
  State s = load_state(instance, initial);
  const Oracle oracle = pick_oracle(info, options);
  if (oracle.kind == BisOracle::kSplitFptas && !info.split) {
    throw CapabilityError("max_size: the split FPTAS oracle needs a split partition; recognized: " + info.describe());
  }
  std::vector<std::string> flags;
  std::string used = to_string(options.strategy);
  double guarantee = oracle.ratio / (1.0 + oracle.ratio);
  if (options.strategy == MaxSizeStrategy::kConfigLp) {
    State attempt = s;
    if (config_lp_fill(instance, info, oracle, options, attempt)) {
      s = std::move(attempt);
      guarantee = (1.0 - 1.0 / std::numbers::e) * oracle.ratio;
    } else {
      flags.emplace_back("config-lp-iteration-cap");
      used = to_string(MaxSizeStrategy::kGreedySequential);
      greedy_fill(instance, info, oracle, options, s);
    }
  } else {
    greedy_fill(instance, info, oracle, options, s);
  }
  MaxSizeResult out = finish(instance, initial, s);
  out.strategy = used;
  out.guarantee = guarantee;
  out.flags = std::move(flags);
  return out;
}

std::string to_string(MaxSizeStrategy strategy) {
  return strategy == MaxSizeStrategy::kConfigLp ? "config-lp" : "greedy-sequential";
}

MaxSizeStrategy parse_strategy(const std::string& name) {
  if (name == "greedy-sequential") return MaxSizeStrategy::kGreedySequential;
  if (name == "config-lp") return MaxSizeStrategy::kConfigLp;
  throw ParameterError("unknown max_size strategy '" + name + "' (expected greedy-sequential or config-lp)");
}

}  // namespace bpc
