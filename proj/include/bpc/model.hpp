#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bpc/graph.hpp"
#include "bpc/rational.hpp"

namespace bpc {

/// Dense item identifier assigned at parse time. Restricted instances keep
/// the identifiers of the instance they were cut from.
using ItemId = int;
using ItemSet = std::vector<ItemId>;

/// A bin packing with conflicts instance: items, sizes in [0, 1], and a
/// conflict graph. Immutable after construction.
///
/// Internally items are addressed by a local index 0..n-1 (the position in
/// `ids()`); the conflict graph uses local indices. Packings use ItemIds.
enum class RestrictMode { kIntersect, kSubtract };

class ConflictInstance {
 public:
  ConflictInstance() = default;

  /// Items get ids 0..n-1. Edges reference ids. Throws ParameterError on a
  /// size outside [0, 1], self-loops, duplicate edges or unknown endpoints.
  static ConflictInstance create(std::vector<Rational> sizes, std::span<const Edge> edges,
                                 std::optional<std::string> class_hint = std::nullopt,
                                 std::vector<std::string> labels = {});

  [[nodiscard]] int size() const { return static_cast<int>(ids_.size()); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] const std::vector<ItemId>& ids() const { return ids_; }
  [[nodiscard]] ItemId id(int local) const { return ids_[static_cast<std::size_t>(local)]; }
  /// Local index of `item`, or -1 if the item is not part of this instance.
  [[nodiscard]] int local(ItemId item) const;
  [[nodiscard]] bool contains(ItemId item) const { return local(item) >= 0; }

  [[nodiscard]] const Rational& size_at(int local) const { return sizes_[static_cast<std::size_t>(local)]; }
  [[nodiscard]] const Rational& size_of(ItemId item) const;
  [[nodiscard]] const std::vector<Rational>& sizes() const { return sizes_; }
  [[nodiscard]] Rational total_size() const;
  [[nodiscard]] Rational total_size(std::span<const ItemId> items) const;

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] bool conflict(ItemId a, ItemId b) const;
  /// Conflict edges as id pairs (a < b), sorted.
  [[nodiscard]] std::vector<Edge> edge_ids() const;

  [[nodiscard]] const std::optional<std::string>& class_hint() const { return class_hint_; }
  /// Label of an item for reporting (the file id); defaults to the id.
  [[nodiscard]] std::string label(ItemId item) const;
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  /// Converts between local indices and ids.
  [[nodiscard]] ItemSet to_ids(std::span<const int> locals) const;
  [[nodiscard]] std::vector<int> to_locals(std::span<const ItemId> items) const;

 private:
  friend ConflictInstance restrict_instance(const ConflictInstance&, std::span<const ItemId>, RestrictMode);

  std::vector<ItemId> ids_;
  std::vector<Rational> sizes_;
  Graph graph_;
  std::optional<std::string> class_hint_;
  std::vector<std::string> labels_;  // indexed by local
  std::vector<int> local_of_;        // indexed by id
};

/// Size classes: large (s > 1/2), medium (1/3 < s <= 1/2), small (s <= 1/3);
/// with a threshold eps also tiny (s <= eps) and big (s > eps).
struct ItemClasses {
  ItemSet large;
  ItemSet medium;
  ItemSet small;
  std::optional<Rational> eps;
  ItemSet tiny;
  ItemSet big;
};

/// Ordered list of bins, each a set of item ids.
struct Packing {
  std::vector<ItemSet> bins;
  std::string source;

  [[nodiscard]] int bin_count() const { return static_cast<int>(bins.size()); }
  [[nodiscard]] ItemSet items() const;
};

enum class ViolationKind { kOverflow, kConflict, kDuplicateItem, kUnknownItem, kMissingItem };

std::string to_string(ViolationKind kind);

struct Violation {
  int bin = -1;  // -1 for missing items
  ViolationKind kind = ViolationKind::kOverflow;
  std::string detail;
};

struct ValidationReport {
  bool feasible = true;
  std::vector<Violation> violations;
  ItemSet covered_items;
};

[[nodiscard]] ItemClasses classify_items(const ConflictInstance& instance,
                                         std::optional<Rational> eps = std::nullopt);

[[nodiscard]] ValidationReport validate_packing(const ConflictInstance& instance, const Packing& packing,
                                                bool require_cover);

/// Bins of `b` followed by bins of `c`.
[[nodiscard]] Packing concat_packings(const Packing& b, const Packing& c);

/// Slot-wise union; the result is not necessarily a packing. Throws
/// ParameterError when the bin counts differ.
[[nodiscard]] Packing union_packings(const Packing& b, const Packing& c);

/// I ∩ T (intersect) or I \ T (subtract). Throws ParameterError if `subset`
/// names an item that is not in `instance`.
[[nodiscard]] ConflictInstance restrict_instance(const ConflictInstance& instance, std::span<const ItemId> subset,
                                                 RestrictMode mode);

/// Whether `bin` can receive `item`: no conflicts and the size still fits.
[[nodiscard]] bool fits(const ConflictInstance& instance, std::span<const ItemId> bin, const Rational& load,
                        ItemId item);

}  // namespace bpc
