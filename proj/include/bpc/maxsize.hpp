#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpc/bis.hpp"
#include "bpc/graphs.hpp"
#include "bpc/model.hpp"

namespace bpc {

enum class MaxSizeStrategy { kGreedySequential, kConfigLp };

/// Single-bin BIS oracle. kAuto picks the split FPTAS when a split
/// certificate is present and the PTAS otherwise.
enum class BisOracle { kAuto, kPtas, kSplitFptas };

struct MaxSizeOptions {
  MaxSizeStrategy strategy = MaxSizeStrategy::kGreedySequential;
  BisOracle oracle = BisOracle::kAuto;
  Rational eps{1, 6};  ///< PTAS accuracy
  Rational fptas_eps{1, 10};
  int enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;  ///< config-lp rounding
};

struct MaxSizeResult {
  Packing augmented;
  ItemSet added_items;  ///< ascending
  Rational added_size;
  std::string strategy;
  /// Declared approximation ratio of the strategy with the oracle used.
  double guarantee = 0.0;
  std::vector<std::string> flags;
};

/// The BIS instance for one bin: unpacked items with no conflict inside the
/// bin, and the bin's free capacity as budget.
struct SingleBinProblem {
  ItemSet items;
  Rational budget;
};

[[nodiscard]] SingleBinProblem single_bin_subproblem(const ConflictInstance& instance, const ItemSet& bin,
                                                     std::span<const ItemId> available);

/// Adds unpacked items to the bins of `initial` to maximize the added size.
/// Throws ParameterError for an infeasible `initial` and CapabilityError when
/// the oracle does not support the graph class.
[[nodiscard]] MaxSizeResult max_size(const ConflictInstance& instance, const Packing& initial,
                                     const GraphClassInfo& info, const MaxSizeOptions& options = {});

[[nodiscard]] std::string to_string(MaxSizeStrategy strategy);
/// "greedy-sequential" or "config-lp"; ParameterError otherwise.
[[nodiscard]] MaxSizeStrategy parse_strategy(const std::string& name);

}  // namespace bpc
