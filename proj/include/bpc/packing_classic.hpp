#pragma once

#include <span>

#include "bpc/model.hpp"

namespace bpc {

/// Default item-count threshold under which asymptotic_bp also runs the
/// exact solver.
inline constexpr int kDefaultExactThreshold = 18;

/// First-Fit Decreasing, conflicts ignored. Items are taken in non-increasing
/// size order with ties broken by ascending id; each goes to the first bin
/// with enough room. Throws ParameterError for a size outside [0, 1].
[[nodiscard]] Packing ffd(std::span<const ItemId> items, std::span<const Rational> sizes);

/// FFD over all items of `instance` (conflicts ignored).
[[nodiscard]] Packing ffd(const ConflictInstance& instance);

/// Conflict-free packing that is never worse than FFD: best of FFD and, for
/// at most `exact_threshold` items, the exact solver. When the exact branch
/// completes the result is optimal.
[[nodiscard]] Packing asymptotic_bp(std::span<const ItemId> items, std::span<const Rational> sizes,
                                    int exact_threshold = kDefaultExactThreshold);

/// Right-hand sides of the FFD guarantees for a conflict-free item list.
/// (1 + 2 max s) s(I) + 1
[[nodiscard]] Rational ffd_size_bound(std::span<const Rational> sizes);
/// |L| + 3/2 s(M) + 4/3 s(S) + 1
[[nodiscard]] Rational ffd_class_bound(std::span<const Rational> sizes);
/// w(I) + 1 with w = 1 for large, s + 1/6 for medium, s + 1/12 for small.
[[nodiscard]] Rational ffd_weight_bound(std::span<const Rational> sizes);

/// Sizes of `items` looked up in `instance`.
[[nodiscard]] std::vector<Rational> sizes_of(const ConflictInstance& instance, std::span<const ItemId> items);

}  // namespace bpc
