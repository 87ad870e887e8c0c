#include "bpc/model.hpp"

#include <algorithm>
#include <string>

#include "bpc/errors.hpp"

namespace bpc {

ConflictInstance ConflictInstance::create(std::vector<Rational> sizes, std::span<const Edge> edges,
                                          std::optional<std::string> class_hint, std::vector<std::string> labels) {
  const int n = static_cast<int>(sizes.size());
  for (int i = 0; i < n; ++i) {
    const auto& s = sizes[static_cast<std::size_t>(i)];
    if (s < Rational(0) || s > Rational(1)) {
      throw ParameterError("item " + std::to_string(i) + " has size " + s.str() + " outside [0,1]");
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw ParameterError("label count does not match item count");
  }
  ConflictInstance out;
  out.ids_.resize(static_cast<std::size_t>(n));
  out.local_of_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.ids_[static_cast<std::size_t>(i)] = i;
    out.local_of_[static_cast<std::size_t>(i)] = i;
  }
  out.sizes_ = std::move(sizes);
  out.graph_ = Graph(n, edges);
  out.class_hint_ = std::move(class_hint);
  out.labels_ = std::move(labels);
  return out;
}

int ConflictInstance::local(ItemId item) const {
  if (item < 0 || static_cast<std::size_t>(item) >= local_of_.size()) return -1;
  return local_of_[static_cast<std::size_t>(item)];
}

const Rational& ConflictInstance::size_of(ItemId item) const {
  const int l = local(item);
  if (l < 0) throw ParameterError("unknown item " + std::to_string(item));
  return sizes_[static_cast<std::size_t>(l)];
}

Rational ConflictInstance::total_size() const {
  Rational sum;
  for (const auto& s : sizes_) sum += s;
  return sum;
}

Rational ConflictInstance::total_size(std::span<const ItemId> items) const {
  Rational sum;
  for (ItemId item : items) sum += size_of(item);
  return sum;
}

bool ConflictInstance::conflict(ItemId a, ItemId b) const {
  const int la = local(a);
  const int lb = local(b);
  if (la < 0 || lb < 0) return false;
  return graph_.adjacent(la, lb);
}

std::vector<Edge> ConflictInstance::edge_ids() const {
  std::vector<Edge> out;
  for (const auto& [u, v] : graph_.edges()) out.emplace_back(id(u), id(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ConflictInstance::label(ItemId item) const {
  const int l = local(item);
  if (l >= 0 && !labels_.empty()) return labels_[static_cast<std::size_t>(l)];
  return std::to_string(item);
}

ItemSet ConflictInstance::to_ids(std::span<const int> locals) const {
  ItemSet out;
  out.reserve(locals.size());
  for (int l : locals) out.push_back(id(l));
  return out;
}

std::vector<int> ConflictInstance::to_locals(std::span<const ItemId> items) const {
  std::vector<int> out;
  out.reserve(items.size());
  for (ItemId item : items) {
    const int l = local(item);
    if (l < 0) throw ParameterError("unknown item " + std::to_string(item));
    out.push_back(l);
  }
  return out;
}

ItemSet Packing::items() const {
  ItemSet out;
  for (const auto& bin : bins) out.insert(out.end(), bin.begin(), bin.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOverflow:
      return "overflow";
    case ViolationKind::kConflict:
      return "conflict";
    case ViolationKind::kDuplicateItem:
      return "duplicate-item";
    case ViolationKind::kUnknownItem:
      return "unknown-item";
    case ViolationKind::kMissingItem:
      return "missing-item";
  }
  return "unknown";
}

ItemClasses classify_items(const ConflictInstance& instance, std::optional<Rational> eps) {
  if (eps && (*eps <= Rational(0) || *eps >= Rational(1, 10))) {
    throw ParameterError("tiny-item threshold must lie in (0, 0.1), got " + eps->str());
  }
  const Rational half(1, 2);
  const Rational third(1, 3);
  ItemClasses out;
  out.eps = eps;
  for (int l = 0; l < instance.size(); ++l) {
    const auto& s = instance.size_at(l);
    const ItemId item = instance.id(l);
    if (s > half) {
      out.large.push_back(item);
    } else if (s > third) {
      out.medium.push_back(item);
    } else {
      out.small.push_back(item);
    }
    if (eps) (s <= *eps ? out.tiny : out.big).push_back(item);
  }
  return out;
}

ValidationReport validate_packing(const ConflictInstance& instance, const Packing& packing, bool require_cover) {
  ValidationReport report;
  std::vector<int> seen_in(static_cast<std::size_t>(instance.size()), -1);
  for (int b = 0; b < packing.bin_count(); ++b) {
    const auto& bin = packing.bins[static_cast<std::size_t>(b)];
    Rational load;
    std::vector<ItemId> known;
    for (ItemId item : bin) {
      const int l = instance.local(item);
      if (l < 0) {
        report.violations.push_back({b, ViolationKind::kUnknownItem, "item " + std::to_string(item)});
        continue;
      }
      auto& seen = seen_in[static_cast<std::size_t>(l)];
      if (seen >= 0) {
        report.violations.push_back({b, ViolationKind::kDuplicateItem,
                                     "item " + instance.label(item) + " already in bin " + std::to_string(seen)});
        continue;
      }
      seen = b;
      load += instance.size_at(l);
      known.push_back(item);
    }
    if (load > Rational(1)) {
      report.violations.push_back({b, ViolationKind::kOverflow, "load " + load.str() + " > 1"});
    }
    for (std::size_t i = 0; i < known.size(); ++i) {
      for (std::size_t j = i + 1; j < known.size(); ++j) {
        if (instance.conflict(known[i], known[j])) {
          report.violations.push_back({b, ViolationKind::kConflict,
                                       "items " + instance.label(known[i]) + " and " + instance.label(known[j])});
        }
      }
    }
  }
  for (int l = 0; l < instance.size(); ++l) {
    if (seen_in[static_cast<std::size_t>(l)] >= 0) {
      report.covered_items.push_back(instance.id(l));
    } else if (require_cover) {
      report.violations.push_back({-1, ViolationKind::kMissingItem, "item " + instance.label(instance.id(l))});
    }
  }
  report.feasible = report.violations.empty();
  return report;
}

Packing concat_packings(const Packing& b, const Packing& c) {
  Packing out;
  out.source = b.source.empty() ? c.source : b.source;
  out.bins.reserve(b.bins.size() + c.bins.size());
  out.bins.insert(out.bins.end(), b.bins.begin(), b.bins.end());
  out.bins.insert(out.bins.end(), c.bins.begin(), c.bins.end());
  return out;
}

Packing union_packings(const Packing& b, const Packing& c) {
  if (b.bin_count() != c.bin_count()) {
    throw ParameterError("union of packings with " + std::to_string(b.bin_count()) + " and " +
                         std::to_string(c.bin_count()) + " bins");
  }
  Packing out;
  out.source = b.source.empty() ? c.source : b.source;
  out.bins = b.bins;
  for (std::size_t i = 0; i < out.bins.size(); ++i) {
    auto& bin = out.bins[i];
    for (ItemId item : c.bins[i]) {
      if (std::find(bin.begin(), bin.end(), item) == bin.end()) bin.push_back(item);
    }
  }
  return out;
}

ConflictInstance restrict_instance(const ConflictInstance& instance, std::span<const ItemId> subset,
                                   RestrictMode mode) {
  std::vector<char> marked(static_cast<std::size_t>(instance.size()), 0);
  for (ItemId item : subset) {
    const int l = instance.local(item);
    if (l < 0) throw ParameterError("restriction names unknown item " + std::to_string(item));
    marked[static_cast<std::size_t>(l)] = 1;
  }
  const char keep_flag = mode == RestrictMode::kIntersect ? 1 : 0;
  std::vector<int> kept;
  for (int l = 0; l < instance.size(); ++l) {
    if (marked[static_cast<std::size_t>(l)] == keep_flag) kept.push_back(l);
  }

  ConflictInstance out;
  out.class_hint_ = instance.class_hint_;
  out.graph_ = instance.graph_.induced(kept);
  const ItemId max_id = instance.ids_.empty() ? -1 : *std::max_element(instance.ids_.begin(), instance.ids_.end());
  out.local_of_.assign(static_cast<std::size_t>(max_id + 1), -1);
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
    const int l = kept[static_cast<std::size_t>(i)];
    out.ids_.push_back(instance.id(l));
    out.sizes_.push_back(instance.size_at(l));
    if (!instance.labels_.empty()) out.labels_.push_back(instance.labels_[static_cast<std::size_t>(l)]);
    out.local_of_[static_cast<std::size_t>(instance.id(l))] = i;
  }
  return out;
}

bool fits(const ConflictInstance& instance, std::span<const ItemId> bin, const Rational& load, ItemId item) {
  if (load + instance.size_of(item) > Rational(1)) return false;
  return std::none_of(bin.begin(), bin.end(), [&](ItemId other) { return instance.conflict(other, item); });
}

}  // namespace bpc
