#include "bpc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>

#include "bpc/errors.hpp"

namespace bpc {
namespace {

constexpr std::int64_t kMaxScale = std::int64_t{1} << 40;

// Common denominator of all sizes, if small enough that integer loads cannot
// overflow for up to 64 items.
std::optional<std::int64_t> common_scale(std::span<const Rational> sizes) {
  std::int64_t scale = 1;
  for (const auto& s : sizes) {
    const std::int64_t g = std::gcd(scale, s.den());
    const __int128 next = static_cast<__int128>(scale / g) * s.den();
    if (next > kMaxScale) return std::nullopt;
    scale = static_cast<std::int64_t>(next);
  }
  return scale;
}

template <class Load>
struct Search {
  int n = 0;
  std::vector<Load> size;          // by position in the search order
  std::vector<std::uint64_t> conf;  // conflict masks by position
  Load cap{};
  bool edgeless = true;
  int lower = 0;
  long long node_limit = 0;

  int best = 0;
  std::vector<int> best_assign;
  std::vector<int> assign;
  std::vector<Load> loads;
  std::vector<std::uint64_t> members;
  std::vector<Load> suffix;  // remaining size from position k on
  long long nodes = 0;
  bool aborted = false;
  bool improved = false;

  static std::int64_t ceil_ratio(const Load& a, const Load& b) {
    if constexpr (std::is_same_v<Load, Rational>) {
      return (a / b).ceil();
    } else {
      return (a + b - 1) / b;
    }
  }

  bool done() const { return aborted || best <= lower; }

  void dfs(int k, int open, const Load& free) {
    if (done()) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    if (k == n) {
      best = open;
      best_assign = assign;
      improved = true;
      return;
    }
    const Load& rem = suffix[static_cast<std::size_t>(k)];
    if (rem > free) {
      if (open + ceil_ratio(rem - free, cap) >= best) return;
    } else if (open >= best) {
      return;
    }
    const Load& s = size[static_cast<std::size_t>(k)];
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (int b = 0; b < open; ++b) {
      const auto bi = static_cast<std::size_t>(b);
      if (loads[bi] + s > cap || (members[bi] & conf[static_cast<std::size_t>(k)]) != 0) continue;
      if (edgeless) {
        // Bins with equal load are interchangeable without conflicts.
        bool seen = false;
        for (int c = 0; c < b && !seen; ++c) seen = loads[static_cast<std::size_t>(c)] == loads[bi];
        if (seen) continue;
      }
      loads[bi] += s;
      members[bi] |= bit;
      assign[static_cast<std::size_t>(k)] = b;
      dfs(k + 1, open, free - s);
      loads[bi] -= s;
      members[bi] &= ~bit;
      if (done()) return;
    }
    if (open + 1 < best) {
      const auto bi = static_cast<std::size_t>(open);
      loads[bi] = s;
      members[bi] = bit;
      assign[static_cast<std::size_t>(k)] = open;
      dfs(k + 1, open + 1, free + cap - s);
      loads[bi] = Load{};
      members[bi] = 0;
    }
  }
};

template <class Load>
ExactSearchResult run_search(const Graph& graph, std::span<const Rational> sizes, const std::vector<int>& order,
                             std::vector<Load> scaled, Load cap, const ExactOptions& options) {
  const int n = static_cast<int>(order.size());
  Search<Load> search;
  search.n = n;
  search.cap = cap;
  search.size = std::move(scaled);
  search.conf.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  for (const auto& [u, v] : graph.edges()) {
    const int pu = position[static_cast<std::size_t>(u)];
    const int pv = position[static_cast<std::size_t>(v)];
    search.conf[static_cast<std::size_t>(pu)] |= std::uint64_t{1} << pv;
    search.conf[static_cast<std::size_t>(pv)] |= std::uint64_t{1} << pu;
  }
  search.edgeless = graph.edge_count() == 0;
  search.lower = opt_lower_bound(graph, sizes);
  search.node_limit = options.node_limit;
  search.suffix.assign(static_cast<std::size_t>(n) + 1, Load{});
  for (int k = n - 1; k >= 0; --k) {
    search.suffix[static_cast<std::size_t>(k)] =
        search.suffix[static_cast<std::size_t>(k) + 1] + search.size[static_cast<std::size_t>(k)];
  }

  // Incumbent: conflict-aware first fit in search order.
  std::vector<int> ff(static_cast<std::size_t>(n));
  {
    std::vector<Load> loads;
    std::vector<std::uint64_t> members;
    for (int k = 0; k < n; ++k) {
      const auto& s = search.size[static_cast<std::size_t>(k)];
      std::size_t b = 0;
      while (b < loads.size() &&
             (loads[b] + s > cap || (members[b] & search.conf[static_cast<std::size_t>(k)]) != 0)) {
        ++b;
      }
      if (b == loads.size()) {
        loads.emplace_back();
        members.push_back(0);
      }
      loads[b] += s;
      members[b] |= std::uint64_t{1} << k;
      ff[static_cast<std::size_t>(k)] = static_cast<int>(b);
    }
    const int ff_bins = static_cast<int>(loads.size());
    search.best = ff_bins;
    search.best_assign = ff;
    if (options.max_bins >= 0 && ff_bins > options.max_bins) {
      search.best = options.max_bins + 1;
      search.best_assign.clear();
    }
  }

  search.assign.assign(static_cast<std::size_t>(n), -1);
  search.loads.assign(static_cast<std::size_t>(n), Load{});
  search.members.assign(static_cast<std::size_t>(n), 0);
  if (n > 0) search.dfs(0, 0, Load{});

  ExactSearchResult out;
  out.nodes = search.nodes;
  out.complete = !search.aborted;
  if (n == 0) {
    out.found = true;
    return out;
  }
  if (search.best_assign.empty()) return out;
  out.found = true;
  out.bins.assign(static_cast<std::size_t>(*std::max_element(search.best_assign.begin(), search.best_assign.end()) + 1),
                  {});
  for (int k = 0; k < n; ++k) {
    out.bins[static_cast<std::size_t>(search.best_assign[static_cast<std::size_t>(k)])].push_back(
        order[static_cast<std::size_t>(k)]);
  }
  for (auto& bin : out.bins) std::sort(bin.begin(), bin.end());
  return out;
}

}  // namespace

int opt_lower_bound(const Graph& graph, std::span<const Rational> sizes) {
  Rational total;
  int large = 0;
  for (const auto& s : sizes) {
    total += s;
    if (s > Rational(1, 2)) ++large;
  }
  const int n = graph.size();
  std::vector<int> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return graph.degree(a) > graph.degree(b); });
  std::vector<int> clique;
  for (int v : by_degree) {
    if (std::all_of(clique.begin(), clique.end(), [&](int u) { return graph.adjacent(u, v); })) clique.push_back(v);
  }
  return std::max({static_cast<int>(total.ceil()), static_cast<int>(clique.size()), large});
}

ExactSearchResult exact_search(const Graph& graph, std::span<const Rational> sizes, const ExactOptions& options) {
  const int n = graph.size();
  if (static_cast<int>(sizes.size()) != n) throw ParameterError("exact_search: sizes do not match the graph");
  if (n > 64) throw CapabilityError("exact_search handles at most 64 items, got " + std::to_string(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)];
  });
  if (const auto scale = common_scale(sizes)) {
    std::vector<std::int64_t> scaled;
    for (int v : order) {
      const auto& s = sizes[static_cast<std::size_t>(v)];
      scaled.push_back(s.num() * (*scale / s.den()));
    }
    return run_search<std::int64_t>(graph, sizes, order, std::move(scaled), *scale, options);
  }
  std::vector<Rational> ordered;
  for (int v : order) ordered.push_back(sizes[static_cast<std::size_t>(v)]);
  return run_search<Rational>(graph, sizes, order, std::move(ordered), Rational(1), options);
}

ExactSolution opt_bpc_exact(const ConflictInstance& instance, int limit_n) {
  if (instance.size() > limit_n) {
    throw CapabilityError("opt_bpc_exact: " + std::to_string(instance.size()) + " items exceed the limit " +
                          std::to_string(limit_n));
  }
  const auto result = exact_search(instance.graph(), instance.sizes(), ExactOptions{});
  if (!result.complete) throw InternalError("opt_bpc_exact: node budget exhausted");
  ExactSolution out;
  out.packing.source = "exact";
  for (const auto& bin : result.bins) out.packing.bins.push_back(instance.to_ids(bin));
  out.opt = out.packing.bin_count();
  return out;
}

template <class Scalar>
BisBruteResult<Scalar> bis_brute(const BisProblem<Scalar>& problem, int limit_n) {
  const int n = problem.graph.size();
  if (n > limit_n) {
    throw CapabilityError("bis_brute: " + std::to_string(n) + " vertices exceed the limit " + std::to_string(limit_n));
  }
  BisBruteResult<Scalar> best;
  std::vector<int> current;
  // Vertices are added in ascending order, so sets are visited
  // lexicographically; only a strictly larger value replaces the incumbent.
  auto visit = [&](auto&& self, int next, Scalar value) -> void {
    if (best.value < value) {
      best.value = value;
      best.set = current;
    }
    for (int v = next; v < n; ++v) {
      const Scalar w = value + problem.weights[static_cast<std::size_t>(v)];
      if (w > problem.budget || !problem.graph.independent_of(v, current)) continue;
      current.push_back(v);
      self(self, v + 1, w);
      current.pop_back();
    }
  };
  visit(visit, 0, Scalar(0));
  return best;
}

template BisBruteResult<Rational> bis_brute<Rational>(const BisProblem<Rational>&, int);
template BisBruteResult<double> bis_brute<double>(const BisProblem<double>&, int);

Rational maxsize_brute(const ConflictInstance& instance, const Packing& initial, const MaxSizeLimits& limits) {
  const int t = initial.bin_count();
  std::vector<char> packed(static_cast<std::size_t>(instance.size()), 0);
  std::vector<Rational> loads(static_cast<std::size_t>(t));
  std::vector<std::vector<int>> members(static_cast<std::size_t>(t));
  for (int b = 0; b < t; ++b) {
    for (ItemId item : initial.bins[static_cast<std::size_t>(b)]) {
      const int l = instance.local(item);
      if (l < 0) throw ParameterError("maxsize_brute: unknown item " + std::to_string(item));
      packed[static_cast<std::size_t>(l)] = 1;
      loads[static_cast<std::size_t>(b)] += instance.size_at(l);
      members[static_cast<std::size_t>(b)].push_back(l);
    }
  }
  std::vector<int> open_items;
  for (int l = 0; l < instance.size(); ++l) {
    if (!packed[static_cast<std::size_t>(l)]) open_items.push_back(l);
  }
  if (static_cast<int>(open_items.size()) > limits.max_unpacked || t > limits.max_bins) {
    throw CapabilityError("maxsize_brute: " + std::to_string(open_items.size()) + " unpacked items / " +
                          std::to_string(t) + " bins exceed the limits");
  }
  std::stable_sort(open_items.begin(), open_items.end(),
                   [&](int a, int b) { return instance.size_at(a) > instance.size_at(b); });
  const auto m = open_items.size();
  std::vector<Rational> suffix(m + 1);
  for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] + instance.size_at(open_items[k]);
  Rational free_total;
  for (const auto& load : loads) {
    if (load < Rational(1)) free_total += Rational(1) - load;
  }

  const Graph& g = instance.graph();
  Rational best;
  auto dfs = [&](auto&& self, std::size_t k, const Rational& added, const Rational& free) -> void {
    if (best < added) best = added;
    if (k == m) return;
    if (!(best < added + std::min(suffix[k], free))) return;
    const int item = open_items[k];
    const Rational& s = instance.size_at(item);
    for (int b = 0; b < t; ++b) {
      const auto bi = static_cast<std::size_t>(b);
      if (loads[bi] + s > Rational(1) || !g.independent_of(item, members[bi])) continue;
      loads[bi] += s;
      members[bi].push_back(item);
      self(self, k + 1, added + s, free - s);
      members[bi].pop_back();
      loads[bi] -= s;
    }
    self(self, k + 1, added, free);
  };
  dfs(dfs, 0, Rational(0), free_total);
  return best;
}

}  // namespace bpc
