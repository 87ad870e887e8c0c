#include <algorithm>
#include <numeric>

#include "bpc/bpc.hpp"
#include "bpc/errors.hpp"

namespace bpc {
namespace {

constexpr double kIntegralTolerance = 1e-7;

bool near_one(double x) { return x >= 1.0 - kIntegralTolerance; }
bool near_zero(double x) { return x <= kIntegralTolerance; }

}  // namespace

AssignmentLp build_assignment_lp(const ConflictInstance& instance, const Packing& big_packing,
                                 std::span<const ItemId> w) {
  const auto report = validate_packing(instance, big_packing, false);
  if (!report.feasible) throw ParameterError("build_assignment_lp: the packing of big items is infeasible");
  const ItemSet packed = big_packing.items();
  AssignmentLp lp;
  lp.bins = big_packing;
  lp.items.assign(w.begin(), w.end());
  std::sort(lp.items.begin(), lp.items.end());
  for (ItemId v : lp.items) {
    if (!instance.contains(v)) throw ParameterError("build_assignment_lp: unknown item " + std::to_string(v));
    if (std::find(packed.begin(), packed.end(), v) != packed.end()) {
      throw ParameterError("build_assignment_lp: item " + std::to_string(v) + " is already packed");
    }
  }
  if (std::adjacent_find(lp.items.begin(), lp.items.end()) != lp.items.end()) {
    throw ParameterError("build_assignment_lp: W lists an item twice");
  }

  const auto t = big_packing.bins.size();
  for (std::size_t i = 0; i < t; ++i) {
    const auto& bin = big_packing.bins[i];
    lp.capacity.push_back(Rational(1) - instance.total_size(bin));
    ItemSet q;
    for (ItemId v : lp.items) {
      if (std::none_of(bin.begin(), bin.end(), [&](ItemId u) { return instance.conflict(u, v); })) q.push_back(v);
    }
    for (ItemId v : q) lp.variables.emplace_back(static_cast<int>(i), v);
    lp.eligible.push_back(std::move(q));
  }

  // Rows: capacity per bin, then one per item of W.
  const auto rows = static_cast<Eigen::Index>(t + lp.items.size());
  const auto cols = static_cast<Eigen::Index>(lp.variables.size());
  lp.program.a = Eigen::MatrixXd::Zero(rows, cols);
  lp.program.b = Eigen::VectorXd::Ones(rows);
  lp.program.c = Eigen::VectorXd::Ones(cols);
  for (std::size_t i = 0; i < t; ++i) lp.program.b(static_cast<Eigen::Index>(i)) = lp.capacity[i].to_double();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto& [bin, item] = lp.variables[static_cast<std::size_t>(j)];
    const auto pos = std::lower_bound(lp.items.begin(), lp.items.end(), item) - lp.items.begin();
    lp.program.a(bin, j) = instance.size_of(item).to_double();
    lp.program.a(static_cast<Eigen::Index>(t) + pos, j) = 1.0;
  }
  return lp;
}

LpSolution solve_assignment_lp(const AssignmentLp& lp) {
  LpSolution out;
  if (lp.variables.empty()) {
    out.integral_items = lp.items;
    return out;
  }
  const auto r = solve_simplex(lp.program, 50 * static_cast<int>(lp.program.a.rows() + lp.program.a.cols()) + 100);
  out.values.assign(r.x.data(), r.x.data() + r.x.size());
  out.objective = r.objective;
  out.basis = r.basis;
  out.iterations = r.iterations;
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    const double x = out.values[j];
    if (!near_zero(x) && !near_one(x)) out.fractional_items.push_back(lp.variables[j].second);
  }
  std::sort(out.fractional_items.begin(), out.fractional_items.end());
  out.fractional_items.erase(std::unique(out.fractional_items.begin(), out.fractional_items.end()),
                             out.fractional_items.end());
  std::set_difference(lp.items.begin(), lp.items.end(), out.fractional_items.begin(), out.fractional_items.end(),
                      std::back_inserter(out.integral_items));
  return out;
}

Packing round_assignment(const ConflictInstance& instance, const Packing& big_packing, std::span<const ItemId> w,
                         LpSolution* solution) {
  const auto lp = build_assignment_lp(instance, big_packing, w);
  auto sol = solve_assignment_lp(lp);
  Packing out = big_packing;
  std::vector<Rational> loads;
  for (const auto& bin : out.bins) loads.push_back(instance.total_size(bin));
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    if (!near_one(sol.values[j])) continue;
    const auto& [bin, item] = lp.variables[j];
    const auto b = static_cast<std::size_t>(bin);
    // Guards against rounding noise in the floating-point solve.
    if (loads[b] + instance.size_of(item) > Rational(1)) continue;
    out.bins[b].push_back(item);
    loads[b] += instance.size_of(item);
  }
  for (auto& bin : out.bins) std::sort(bin.begin(), bin.end());
  out.source = "round";
  if (solution) *solution = std::move(sol);
  return out;
}

Packing assign(const ConflictInstance& instance, const GraphClassInfo& info, std::span<const ItemId> w,
               const SolverConfig& config, SolveDiagnostics* diagnostics) {
  Packing best = color_sets(instance, info, config);
  best.source = "assign";
  const auto classes = classify_items(instance, config.tiny_eps);
  const ItemSet& big = classes.big;
  if (static_cast<int>(big.size()) > config.assign_max_big_items) {
    if (diagnostics) diagnostics->flag("enumeration-skipped");
    return best;
  }
  const ItemSet w_items(w.begin(), w.end());

  std::vector<ItemId> order = big;
  std::stable_sort(order.begin(), order.end(),
                   [&](ItemId a, ItemId b) { return instance.size_of(a) > instance.size_of(b); });

  auto evaluate = [&](const Packing& a) {
    Packing c;
    if (w_items.empty()) {
      c = a;
    } else {
      LpSolution sol;
      c = round_assignment(instance, a, w_items, &sol);
      const auto kept = static_cast<double>(c.items().size() - a.items().size());
      const bool ok = c.bin_count() == a.bin_count() &&
                      kept >= sol.objective - static_cast<double>(a.bin_count()) - 1e-7 &&
                      sol.fractional_items.size() <= a.bins.size();
      if (diagnostics) {
        ++diagnostics->lemma12_runs;
        diagnostics->lemma12_ok = diagnostics->lemma12_ok && ok;
      }
    }
    ItemSet covered = c.items();
    covered.insert(covered.end(), big.begin(), big.end());
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    const auto rest = restrict_instance(instance, covered, RestrictMode::kSubtract);
    Packing candidate = concat_packings(c, color_sets(rest, recognize(rest), config));
    if (candidate.bin_count() < best.bin_count()) {
      best = std::move(candidate);
      best.source = "assign";
    }
  };

  // Set partitions of the big items into feasible bins; an item may only
  // open the next new bin.
  Packing current;
  std::vector<Rational> loads;
  auto enumerate = [&](auto&& self, std::size_t k) -> void {
    if (current.bin_count() >= best.bin_count()) return;
    if (k == order.size()) {
      evaluate(current);
      return;
    }
    const ItemId v = order[k];
    for (std::size_t b = 0; b < current.bins.size(); ++b) {
      if (!fits(instance, current.bins[b], loads[b], v)) continue;
      current.bins[b].push_back(v);
      loads[b] += instance.size_of(v);
      self(self, k + 1);
      current.bins[b].pop_back();
      loads[b] -= instance.size_of(v);
    }
    if (current.bin_count() < config.assign_max_bins) {
      current.bins.push_back({v});
      loads.push_back(instance.size_of(v));
      self(self, k + 1);
      current.bins.pop_back();
      loads.pop_back();
    }
  };
  enumerate(enumerate, 0);
  return best;
}

}  // namespace bpc
