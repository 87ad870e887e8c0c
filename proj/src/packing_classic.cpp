#include "bpc/packing_classic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bpc/errors.hpp"
#include "bpc/oracle.hpp"

namespace bpc {

Packing ffd(std::span<const ItemId> items, std::span<const Rational> sizes) {
  if (items.size() != sizes.size()) throw ParameterError("ffd: items and sizes differ in length");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < Rational(0) || sizes[i] > Rational(1)) {
      throw ParameterError("ffd: item " + std::to_string(items[i]) + " has size " + sizes[i].str());
    }
  }
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
    return items[a] < items[b];
  });

  Packing out;
  out.source = "ffd";
  std::vector<Rational> loads;
  for (std::size_t k : order) {
    std::size_t b = 0;
    while (b < loads.size() && loads[b] + sizes[k] > Rational(1)) ++b;
    if (b == loads.size()) {
      loads.emplace_back();
      out.bins.emplace_back();
    }
    loads[b] += sizes[k];
    out.bins[b].push_back(items[k]);
  }
  return out;
}

Packing ffd(const ConflictInstance& instance) { return ffd(instance.ids(), instance.sizes()); }

Packing asymptotic_bp(std::span<const ItemId> items, std::span<const Rational> sizes, int exact_threshold) {
  Packing best = ffd(items, sizes);
  best.source = "asymptotic_bp";
  if (static_cast<int>(items.size()) <= exact_threshold && best.bin_count() > 1) {
    const Graph empty(static_cast<int>(items.size()));
    const auto exact = exact_search(empty, sizes, ExactOptions{});
    if (exact.found && exact.bins.size() < best.bins.size()) {
      best.bins.clear();
      for (const auto& bin : exact.bins) {
        ItemSet ids;
        for (int l : bin) ids.push_back(items[static_cast<std::size_t>(l)]);
        std::sort(ids.begin(), ids.end());
        best.bins.push_back(std::move(ids));
      }
    }
  }
  return best;
}

Rational ffd_size_bound(std::span<const Rational> sizes) {
  Rational max_size;
  Rational total;
  for (const auto& s : sizes) {
    max_size = std::max(max_size, s);
    total += s;
  }
  return (Rational(1) + Rational(2) * max_size) * total + Rational(1);
}

Rational ffd_class_bound(std::span<const Rational> sizes) {
  Rational bound(1);
  for (const auto& s : sizes) {
    if (s > Rational(1, 2)) {
      bound += Rational(1);
    } else if (s > Rational(1, 3)) {
      bound += Rational(3, 2) * s;
    } else {
      bound += Rational(4, 3) * s;
    }
  }
  return bound;
}

Rational ffd_weight_bound(std::span<const Rational> sizes) {
  Rational bound(1);
  for (const auto& s : sizes) {
    if (s > Rational(1, 2)) {
      bound += Rational(1);
    } else if (s > Rational(1, 3)) {
      bound += s + Rational(1, 6);
    } else {
      bound += s + Rational(1, 12);
    }
  }
  return bound;
}

std::vector<Rational> sizes_of(const ConflictInstance& instance, std::span<const ItemId> items) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (ItemId item : items) out.push_back(instance.size_of(item));
  return out;
}

}  // namespace bpc
