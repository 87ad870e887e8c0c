// Maximum-weight independent sets for the supported graph classes.

#include <algorithm>
#include <limits>
#include <queue>

#include "bpc/errors.hpp"
#include "bpc/graphs.hpp"

namespace bpc {
namespace {

// Dinic max-flow over an exact or floating scalar.
template <class Scalar>
class MaxFlow {
 public:
  explicit MaxFlow(int n) : graph_(static_cast<std::size_t>(n)), level_(static_cast<std::size_t>(n)),
                            next_(static_cast<std::size_t>(n)) {}

  void add_edge(int from, int to, Scalar capacity) {
    graph_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    graph_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, Scalar(0)});
  }

  void run(int source, int sink) {
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        const Scalar pushed = dfs(source, sink, infinity_);
        if (!(pushed > Scalar(0))) break;
      }
    }
  }

  /// Vertices reachable from `source` in the residual graph after run().
  std::vector<char> source_side(int source) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int a : graph_[static_cast<std::size_t>(v)]) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.residual > Scalar(0) && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

  void set_infinity(Scalar value) { infinity_ = value; }

 private:
  struct Arc {
    int to;
    Scalar residual;
  };

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int a : graph_[static_cast<std::size_t>(v)]) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.residual > Scalar(0) && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  Scalar dfs(int v, int sink, Scalar limit) {
    if (v == sink) return limit;
    auto& it = next_[static_cast<std::size_t>(v)];
    const auto& out = graph_[static_cast<std::size_t>(v)];
    for (; it < static_cast<int>(out.size()); ++it) {
      const int a = out[static_cast<std::size_t>(it)];
      auto& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.residual > Scalar(0) &&
          level_[static_cast<std::size_t>(arc.to)] == level_[static_cast<std::size_t>(v)] + 1) {
        const Scalar pushed = dfs(arc.to, sink, std::min(limit, arc.residual));
        if (pushed > Scalar(0)) {
          arc.residual -= pushed;
          arcs_[static_cast<std::size_t>(a ^ 1)].residual += pushed;
          return pushed;
        }
      }
    }
    return Scalar(0);
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> next_;
  Scalar infinity_{0};
};

// Koenig: complement of a minimum-weight vertex cover, found by min cut.
template <class Scalar>
std::vector<int> bipartite_mwis(const Graph& graph, const GraphClassInfo& info, std::span<const Scalar> weights) {
  const int n = graph.size();
  const int source = n;
  const int sink = n + 1;
  Scalar total(0);
  for (const auto& w : weights) total += w;
  const Scalar infinity = total + Scalar(1);

  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (int v : info.side_x) in_x[static_cast<std::size_t>(v)] = 1;

  MaxFlow<Scalar> flow(n + 2);
  flow.set_infinity(infinity);
  for (int v = 0; v < n; ++v) {
    if (in_x[static_cast<std::size_t>(v)]) {
      flow.add_edge(source, v, weights[static_cast<std::size_t>(v)]);
      for (int u : graph.neighbors(v)) flow.add_edge(v, u, infinity);
    } else {
      flow.add_edge(v, sink, weights[static_cast<std::size_t>(v)]);
    }
  }
  flow.run(source, sink);
  const auto reach = flow.source_side(source);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    const bool reached = reach[static_cast<std::size_t>(v)] != 0;
    if (in_x[static_cast<std::size_t>(v)] == static_cast<char>(reached)) out.push_back(v);
  }
  return out;
}

// Frank's algorithm on a perfect elimination ordering.
template <class Scalar>
std::vector<int> chordal_mwis(const Graph& graph, const GraphClassInfo& info, std::span<const Scalar> weights) {
  const int n = graph.size();
  const auto& order = info.elimination_order;
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  std::vector<Scalar> residual(weights.begin(), weights.end());
  std::vector<char> red(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    const Scalar r = residual[static_cast<std::size_t>(v)];
    if (!(r > Scalar(0))) continue;
    red[static_cast<std::size_t>(v)] = 1;
    for (int u : graph.neighbors(v)) {
      if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)]) {
        auto& ru = residual[static_cast<std::size_t>(u)];
        ru = ru > r ? ru - r : Scalar(0);
      }
    }
  }
  std::vector<int> out;
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (!red[static_cast<std::size_t>(v)] || blocked[static_cast<std::size_t>(v)]) continue;
    out.push_back(v);
    for (int u : graph.neighbors(v)) blocked[static_cast<std::size_t>(u)] = 1;
  }
  return out;
}

template <class Scalar>
Scalar weight_of(std::span<const int> set, std::span<const Scalar> weights) {
  Scalar sum(0);
  for (int v : set) sum += weights[static_cast<std::size_t>(v)];
  return sum;
}

}  // namespace

template <class Scalar>
std::vector<int> max_weight_independent_set(const Graph& graph, const GraphClassInfo& info,
                                            std::span<const Scalar> weights) {
  const int n = graph.size();
  if (static_cast<int>(weights.size()) != n) throw ParameterError("weight vector does not match vertex count");
  for (const auto& w : weights) {
    if (w < Scalar(0)) throw ParameterError("weights must be nonnegative");
  }

  std::vector<int> out;
  if (info.edgeless) {
    for (int v = 0; v < n; ++v) out.push_back(v);
  } else if (info.cluster) {
    for (const auto& component : info.components) {
      int best = -1;
      for (int v : component) {
        if (best < 0 || weights[static_cast<std::size_t>(v)] > weights[static_cast<std::size_t>(best)]) best = v;
      }
      if (best >= 0) out.push_back(best);
    }
  } else if (info.complete_multipartite) {
    // Every independent set lies inside one part.
    const std::vector<int>* best = nullptr;
    Scalar best_weight(0);
    for (const auto& part : info.parts) {
      const Scalar w = weight_of<Scalar>(part, weights);
      if (best == nullptr || w > best_weight) {
        best = &part;
        best_weight = w;
      }
    }
    if (best != nullptr) out = *best;
  } else if (info.bipartite) {
    out = bipartite_mwis(graph, info, weights);
  } else if (info.chordal) {
    out = chordal_mwis(graph, info, weights);
  } else {
    throw CapabilityError(std::string("maximum-weight independent set needs one of: ") + kSupportedClasses +
                          "; recognized: " + info.describe());
  }
  std::erase_if(out, [&](int v) { return !(weights[static_cast<std::size_t>(v)] > Scalar(0)); });
  std::sort(out.begin(), out.end());
  return out;
}

template std::vector<int> max_weight_independent_set<Rational>(const Graph&, const GraphClassInfo&,
                                                               std::span<const Rational>);
template std::vector<int> max_weight_independent_set<double>(const Graph&, const GraphClassInfo&,
                                                             std::span<const double>);

}  // namespace bpc
