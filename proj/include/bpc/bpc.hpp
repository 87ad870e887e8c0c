#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpc/graphs.hpp"
#include "bpc/maxsize.hpp"
#include "bpc/model.hpp"
#include "bpc/simplex.hpp"

namespace bpc {

struct SolverConfig {
  /// Accuracy of the BIS PTAS inside max_solve (ceil(1/eps) must not exceed
  /// enumeration_cap).
  Rational eps{1, 6};
  Rational fptas_eps{1, 10};
  /// Tiny/big threshold used by assign.
  Rational tiny_eps{1, 10000};
  int enumeration_cap = 6;
  int exact_threshold = 18;  ///< asymptotic_bp exact branch
  int assign_max_bins = 6;
  int assign_max_big_items = 10;
  /// abs_bpb runs the exact solver up to this many items, and a bounded
  /// search for packings into at most 3 bins above it.
  int exact_fallback_n = 16;
  long long small_opt_node_limit = 2'000'000;
  MaxSizeStrategy strategy = MaxSizeStrategy::kGreedySequential;
  std::uint64_t seed = 0;
};

/// Side information collected while solving.
struct SolveDiagnostics {
  std::vector<std::string> flags;  ///< e.g. "enumeration-skipped"
  std::map<std::string, int> subroutine_bins;
  /// Rounded assignments checked: bin count kept and >= LP_opt - t items.
  int lemma12_runs = 0;
  bool lemma12_ok = true;

  void flag(const std::string& name);
};

// Coloring-based packing: a minimum coloring, each class packed on its own
// with the better of FFD and asymptotic_bp.
[[nodiscard]] Packing color_sets(const ConflictInstance& instance, const GraphClassInfo& info,
                                 const SolverConfig& config = {});

/// chi + |L| + 3/2 s(M) + 4/3 s(S), the bound color_sets meets.
[[nodiscard]] Rational color_sets_bound(const ConflictInstance& instance, const GraphClassInfo& info);

/// Large items in singleton bins, augmented by max_size; the rest by
/// color_sets.
[[nodiscard]] Packing max_solve(const ConflictInstance& instance, const GraphClassInfo& info,
                                const SolverConfig& config = {}, SolveDiagnostics* diagnostics = nullptr);

/// Maximum matching over conflict-free pairs of large/medium items that fit
/// together, unmatched large/medium items alone, small items by color_sets.
[[nodiscard]] Packing matching_pack(const ConflictInstance& instance, const GraphClassInfo& info,
                                    const SolverConfig& config = {});

/// Best of color_sets, max_solve and matching_pack (ties in that order).
[[nodiscard]] Packing approx_bpc(const ConflictInstance& instance, const GraphClassInfo& info,
                                 const SolverConfig& config = {}, SolveDiagnostics* diagnostics = nullptr);

/// Split graphs: for each guess alpha of extra bins, clique singletons plus
/// alpha empty bins are filled by max_size with the split FPTAS and the rest
/// goes to FFD. Returns the smallest result. CapabilityError without a split
/// certificate.
[[nodiscard]] Packing split_approx(const ConflictInstance& instance, const GraphClassInfo& info,
                                   const SolverConfig& config = {}, SolveDiagnostics* diagnostics = nullptr);

/// The assignment LP of tiny items W into the bins of a packing of big items:
/// variables x[i][v] for v in Q_i (v has no conflict with bin i), one
/// capacity row per bin and one row per item, objective sum x.
struct AssignmentLp {
  Packing bins;
  ItemSet items;                        ///< W, ascending
  std::vector<Rational> capacity;       ///< 1 - s(A_i)
  std::vector<ItemSet> eligible;        ///< Q_i
  std::vector<std::pair<int, ItemId>> variables;  ///< (bin, item) per column
  LinearProgram program;
};

struct LpSolution {
  std::vector<double> values;  ///< per variable
  double objective = 0.0;
  std::vector<int> basis;
  int iterations = 0;
  ItemSet fractional_items;  ///< some x[i][v] strictly between 0 and 1
  ItemSet integral_items;    ///< W minus fractional_items
};

/// Throws ParameterError when W names unknown items or items already in
/// `big_packing`, or when `big_packing` is infeasible.
[[nodiscard]] AssignmentLp build_assignment_lp(const ConflictInstance& instance, const Packing& big_packing,
                                               std::span<const ItemId> w);

/// Basic optimal solution of the LP.
[[nodiscard]] LpSolution solve_assignment_lp(const AssignmentLp& lp);

/// Solves the LP and keeps the items with x = 1; fractionally assigned items
/// are dropped. Same bin count as `big_packing`. Optionally returns the LP
/// solution.
[[nodiscard]] Packing round_assignment(const ConflictInstance& instance, const Packing& big_packing,
                                       std::span<const ItemId> w, LpSolution* solution = nullptr);

/// Enumerates packings of the big items (s > tiny_eps) into at most
/// assign_max_bins bins; for each, rounds the assignment of W and packs the
/// remaining tiny items with color_sets. Starts from color_sets and keeps the
/// best. With more than assign_max_big_items big items the enumeration is
/// skipped (flag "enumeration-skipped").
[[nodiscard]] Packing assign(const ConflictInstance& instance, const GraphClassInfo& info, std::span<const ItemId> w,
                             const SolverConfig& config = {}, SolveDiagnostics* diagnostics = nullptr);

/// Bipartite graphs: best of color_sets, an exact solver for small instances
/// (or a search for packings into at most 3 bins), and assign with the tiny
/// items of either side. CapabilityError without a bipartition.
[[nodiscard]] Packing abs_bpb(const ConflictInstance& instance, const GraphClassInfo& info,
                              const SolverConfig& config = {}, SolveDiagnostics* diagnostics = nullptr);

/// Complete multipartite graphs: each part packed on its own with the better
/// of FFD and asymptotic_bp. CapabilityError without the parts.
[[nodiscard]] Packing multipartite_pack(const ConflictInstance& instance, const GraphClassInfo& info,
                                        const SolverConfig& config = {});

/// Algorithm names accepted by solve().
[[nodiscard]] const std::vector<std::string>& algorithm_names();

/// Whether `algorithm` can run on a graph with these certificates.
[[nodiscard]] bool applicable(const std::string& algorithm, const GraphClassInfo& info);

/// Runs the named algorithm. ParameterError for an unknown name.
[[nodiscard]] Packing solve(const std::string& algorithm, const ConflictInstance& instance,
                            const GraphClassInfo& info, const SolverConfig& config = {},
                            SolveDiagnostics* diagnostics = nullptr);

}  // namespace bpc
