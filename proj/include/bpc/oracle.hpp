#pragma once

#include <span>
#include <vector>

#include "bpc/bis.hpp"
#include "bpc/graph.hpp"
#include "bpc/model.hpp"

namespace bpc {

struct ExactOptions {
  /// When >= 0, only look for packings with at most this many bins.
  int max_bins = -1;
  /// Search nodes before giving up; the result is then marked incomplete.
  long long node_limit = 200'000'000;
};

struct ExactSearchResult {
  std::vector<std::vector<int>> bins;  ///< local indices; empty if nothing found
  bool found = false;
  /// The search finished: a found packing is optimal (within max_bins), and
  /// found == false proves no packing within max_bins exists.
  bool complete = true;
  long long nodes = 0;
};

/// Branch-and-bound over item-to-bin assignments. Items are placed in
/// decreasing size order; an item may only open the next new bin. Bounds:
/// ceil of remaining size over free capacity, a greedy clique, and |L|.
/// At most 64 items.
[[nodiscard]] ExactSearchResult exact_search(const Graph& graph, std::span<const Rational> sizes,
                                             const ExactOptions& options);

struct ExactSolution {
  Packing packing;
  int opt = 0;
};

/// Provably optimal packing. Throws CapabilityError if the instance has more
/// than `limit_n` items and InternalError if the node budget runs out.
[[nodiscard]] ExactSolution opt_bpc_exact(const ConflictInstance& instance, int limit_n = 18);

/// Lower bound used by the exact search (max of ceil(s(I)), a greedy clique
/// and the number of large items).
[[nodiscard]] int opt_lower_bound(const Graph& graph, std::span<const Rational> sizes);

template <class Scalar>
struct BisBruteResult {
  std::vector<int> set;
  Scalar value{0};
};

/// Exhaustive BIS: best independent set within budget; ties go to the
/// lexicographically smallest set. Throws CapabilityError above `limit_n`.
template <class Scalar>
[[nodiscard]] BisBruteResult<Scalar> bis_brute(const BisProblem<Scalar>& problem, int limit_n = 20);

struct MaxSizeLimits {
  int max_unpacked = 12;
  int max_bins = 4;
};

/// Optimal total size that can be added to `initial` from the unpacked items
/// of `instance`, by exhaustive search with pruning. Throws CapabilityError
/// when the limits are exceeded.
[[nodiscard]] Rational maxsize_brute(const ConflictInstance& instance, const Packing& initial,
                                     const MaxSizeLimits& limits = {});

}  // namespace bpc
