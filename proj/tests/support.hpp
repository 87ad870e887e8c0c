#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bpc/graph.hpp"
#include "bpc/model.hpp"

namespace bpc::test {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline std::vector<Rational> twentieths(std::initializer_list<int> ks) {
  std::vector<Rational> out;
  for (int k : ks) out.emplace_back(k, 20);
  return out;
}

inline ConflictInstance make(std::vector<Rational> sizes, std::vector<Edge> edges = {}) {
  return ConflictInstance::create(std::move(sizes), edges);
}

// Independent feasibility check: edge scan and size sum per bin.
inline bool brute_feasible(const ConflictInstance& inst, const Packing& p, bool cover = true) {
  std::vector<int> seen(inst.ids().empty() ? 0 : static_cast<std::size_t>(*std::max_element(inst.ids().begin(), inst.ids().end()) + 1), 0);
  for (const auto& bin : p.bins) {
    Rational load;
    for (std::size_t i = 0; i < bin.size(); ++i) {
      if (!inst.contains(bin[i])) return false;
      if (seen[static_cast<std::size_t>(bin[i])]++) return false;
      load += inst.size_of(bin[i]);
      for (std::size_t j = i + 1; j < bin.size(); ++j) {
        if (inst.conflict(bin[i], bin[j])) return false;
      }
    }
    if (load > Rational(1)) return false;
  }
  if (cover) {
    for (ItemId id : inst.ids()) {
      if (!seen[static_cast<std::size_t>(id)]) return false;
    }
  }
  return true;
}

inline std::vector<Rational> random_sizes(std::mt19937_64& rng, int n, int lo = 1, int hi = 20) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.emplace_back(d(rng), 20);
  return out;
}

inline std::vector<Edge> random_edges(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) out.emplace_back(u, v);
    }
  }
  return out;
}

// Chromatic number by trying k = 1, 2, ... colorings with backtracking.
inline int brute_chromatic(const Graph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int k = 1;; ++k) {
    auto place = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
          if (color[static_cast<std::size_t>(u)] == c) ok = false;
        }
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (self(self, v + 1)) return true;
        color[static_cast<std::size_t>(v)] = -1;
      }
      return false;
    };
    if (place(place, 0)) return k;
  }
}

// Maximum weight over all independent subsets (bitmask scan).
template <class Scalar>
Scalar brute_mwis(const Graph& g, const std::vector<Scalar>& w) {
  const int n = g.size();
  Scalar best(0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Scalar value(0);
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1u)) continue;
      value += w[static_cast<std::size_t>(u)];
      for (int v = u + 1; v < n; ++v) {
        if ((mask >> v & 1u) && g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
    }
    if (ok && best < value) best = value;
  }
  return best;
}

inline int brute_matching(int n, const std::vector<Edge>& edges) {
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto go = [&](auto&& self, std::size_t i, int count) -> void {
    best = std::max(best, count);
    if (count + static_cast<int>(edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const auto [u, v] = edges[j];
      if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
      self(self, j + 1, count + 1);
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    }
  };
  go(go, 0, 0);
  return best;
}

// OPT by enumerating set partitions into independent, fitting blocks.
inline int brute_opt(const ConflictInstance& inst) {
  const int n = inst.size();
  int best = n;
  std::vector<std::vector<int>> bins;
  std::vector<Rational> loads;
  auto go = [&](auto&& self, int v) -> void {
    if (static_cast<int>(bins.size()) >= best) return;
    if (v == n) {
      best = static_cast<int>(bins.size());
      return;
    }
    const Rational& s = inst.size_at(v);
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (loads[b] + s > Rational(1) || !inst.graph().independent_of(v, bins[b])) continue;
      bins[b].push_back(v);
      loads[b] += s;
      self(self, v + 1);
      bins[b].pop_back();
      loads[b] -= s;
    }
    bins.push_back({v});
    loads.push_back(s);
    self(self, v + 1);
    bins.pop_back();
    loads.pop_back();
  };
  go(go, 0);
  return best;
}

}  // namespace bpc::test
