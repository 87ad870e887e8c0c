#include "bpc/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "bpc/errors.hpp"

namespace bpc {
namespace {

std::vector<std::vector<int>> connected_components(const Graph& graph) {
  const int n = graph.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int u : graph.neighbors(v)) {
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = comp[static_cast<std::size_t>(start)];
          stack.push_back(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// Components of the complement graph, O(n^2).
std::vector<std::vector<int>> complement_components(const Graph& graph) {
  const int n = graph.size();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    out.emplace_back();
    std::vector<int> stack{start};
    done[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int u = 0; u < n; ++u) {
        if (!done[static_cast<std::size_t>(u)] && u != v && !graph.adjacent(u, v)) {
          done[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool try_bipartition(const Graph& graph, GraphClassInfo& info) {
  const int n = graph.size();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int u : graph.neighbors(v)) {
        auto& cu = color[static_cast<std::size_t>(u)];
        if (cu < 0) {
          cu = 1 - color[static_cast<std::size_t>(v)];
          queue.push(u);
        } else if (cu == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? info.side_x : info.side_y).push_back(v);
  return true;
}

// Hammer-Simeone degree-sequence characterization.
bool try_split(const Graph& graph, GraphClassInfo& info) {
  const int n = graph.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return graph.degree(a) > graph.degree(b); });
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (graph.degree(order[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += graph.degree(order[static_cast<std::size_t>(i)]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return false;
  info.clique.assign(order.begin(), order.begin() + m);
  info.independent.assign(order.begin() + m, order.end());
  std::sort(info.clique.begin(), info.clique.end());
  std::sort(info.independent.begin(), info.independent.end());
  return verify_split(graph, info.clique, info.independent);
}

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
std::vector<int> mcs_elimination_order(const Graph& graph) {
  const int n = graph.size();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!visited[static_cast<std::size_t>(v)] &&
          (best < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    visited[static_cast<std::size_t>(best)] = 1;
    visit.push_back(best);
    for (int u : graph.neighbors(best)) {
      if (!visited[static_cast<std::size_t>(u)]) ++label[static_cast<std::size_t>(u)];
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

}  // namespace

std::string GraphClassInfo::describe() const {
  std::vector<std::string> names;
  if (edgeless) names.emplace_back("edgeless");
  if (bipartite) names.emplace_back("bipartite");
  if (split) names.emplace_back("split");
  if (cluster) names.emplace_back("cluster");
  if (complete_multipartite) names.emplace_back("complete-multipartite");
  if (chordal) names.emplace_back("chordal");
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out.empty() ? "none" : out;
}

bool has_class(const GraphClassInfo& info, const std::string& name) {
  if (name == "edgeless") return info.edgeless;
  if (name == "bipartite") return info.bipartite;
  if (name == "split") return info.split;
  if (name == "cluster") return info.cluster;
  if (name == "complete-multipartite") return info.complete_multipartite;
  if (name == "chordal") return info.chordal;
  throw ParameterError("unknown graph class '" + name + "' (supported: " + kSupportedClasses + ")");
}

GraphClassInfo recognize(const Graph& graph) {
  GraphClassInfo info;
  info.edgeless = graph.edge_count() == 0;
  info.bipartite = try_bipartition(graph, info);
  info.split = try_split(graph, info);
  if (!info.split) {
    info.clique.clear();
    info.independent.clear();
  }

  auto components = connected_components(graph);
  info.cluster = std::all_of(components.begin(), components.end(),
                             [&](const std::vector<int>& c) { return graph.is_clique(c); });
  if (info.cluster) info.components = std::move(components);

  auto parts = complement_components(graph);
  info.complete_multipartite = std::all_of(parts.begin(), parts.end(),
                                           [&](const std::vector<int>& p) { return graph.is_independent(p); });
  if (info.complete_multipartite) info.parts = std::move(parts);

  auto order = mcs_elimination_order(graph);
  info.chordal = verify_elimination_order(graph, order);
  if (info.chordal) info.elimination_order = std::move(order);
  return info;
}

bool verify_bipartition(const Graph& graph, std::span<const int> x, std::span<const int> y) {
  if (static_cast<int>(x.size() + y.size()) != graph.size()) return false;
  std::vector<char> seen(static_cast<std::size_t>(graph.size()), 0);
  for (auto side : {x, y}) {
    for (int v : side) {
      if (v < 0 || v >= graph.size() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return graph.is_independent(x) && graph.is_independent(y);
}

bool verify_split(const Graph& graph, std::span<const int> clique, std::span<const int> independent) {
  if (static_cast<int>(clique.size() + independent.size()) != graph.size()) return false;
  std::vector<char> seen(static_cast<std::size_t>(graph.size()), 0);
  for (auto side : {clique, independent}) {
    for (int v : side) {
      if (v < 0 || v >= graph.size() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return graph.is_clique(clique) && graph.is_independent(independent);
}

namespace {
bool is_partition(const Graph& graph, const std::vector<std::vector<int>>& groups, std::vector<int>& group_of) {
  group_of.assign(static_cast<std::size_t>(graph.size()), -1);
  int covered = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int v : groups[g]) {
      if (v < 0 || v >= graph.size() || group_of[static_cast<std::size_t>(v)] >= 0) return false;
      group_of[static_cast<std::size_t>(v)] = static_cast<int>(g);
      ++covered;
    }
  }
  return covered == graph.size();
}
}  // namespace

bool verify_clusters(const Graph& graph, const std::vector<std::vector<int>>& components) {
  std::vector<int> group_of;
  if (!is_partition(graph, components, group_of)) return false;
  for (const auto& [u, v] : graph.edges()) {
    if (group_of[static_cast<std::size_t>(u)] != group_of[static_cast<std::size_t>(v)]) return false;
  }
  return std::all_of(components.begin(), components.end(),
                     [&](const std::vector<int>& c) { return graph.is_clique(c); });
}

bool verify_parts(const Graph& graph, const std::vector<std::vector<int>>& parts) {
  std::vector<int> group_of;
  if (!is_partition(graph, parts, group_of)) return false;
  for (int u = 0; u < graph.size(); ++u) {
    for (int v = u + 1; v < graph.size(); ++v) {
      const bool same = group_of[static_cast<std::size_t>(u)] == group_of[static_cast<std::size_t>(v)];
      if (same == graph.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool verify_elimination_order(const Graph& graph, std::span<const int> order) {
  const int n = graph.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] >= 0) return false;
    position[static_cast<std::size_t>(v)] = i;
  }
  // v is simplicial among later vertices iff its earliest later neighbor is
  // adjacent to all of its other later neighbors.
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int u : graph.neighbors(v)) {
      if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)] &&
          (parent < 0 || position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(parent)])) {
        parent = u;
      }
    }
    if (parent < 0) continue;
    for (int u : graph.neighbors(v)) {
      if (u != parent && position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)] &&
          !graph.adjacent(u, parent)) {
        return false;
      }
    }
  }
  return true;
}

bool verify_certificates(const Graph& graph, const GraphClassInfo& info) {
  if (info.edgeless && graph.edge_count() != 0) return false;
  if (info.bipartite && !verify_bipartition(graph, info.side_x, info.side_y)) return false;
  if (info.split && !verify_split(graph, info.clique, info.independent)) return false;
  if (info.cluster && !verify_clusters(graph, info.components)) return false;
  if (info.complete_multipartite && !verify_parts(graph, info.parts)) return false;
  if (info.chordal && !verify_elimination_order(graph, info.elimination_order)) return false;
  return true;
}

std::vector<std::vector<int>> minimum_coloring(const Graph& graph, const GraphClassInfo& info) {
  const int n = graph.size();
  if (n == 0) return {};
  if (info.edgeless) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return {all};
  }
  if (info.bipartite) return {info.side_x, info.side_y};
  if (info.complete_multipartite) return info.parts;
  if (info.chordal) {
    // Greedy in reverse elimination order uses omega(G) colors.
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int colors = 0;
    for (auto it = info.elimination_order.rbegin(); it != info.elimination_order.rend(); ++it) {
      std::vector<char> used(static_cast<std::size_t>(colors) + 1, 0);
      for (int u : graph.neighbors(*it)) {
        if (color[static_cast<std::size_t>(u)] >= 0) used[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 1;
      }
      int c = 0;
      while (used[static_cast<std::size_t>(c)]) ++c;
      color[static_cast<std::size_t>(*it)] = c;
      colors = std::max(colors, c + 1);
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(colors));
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
    return out;
  }
  throw CapabilityError(std::string("minimum coloring needs one of: ") + kSupportedClasses +
                        "; recognized: " + info.describe());
}

std::vector<ItemSet> minimum_coloring(const ConflictInstance& instance, const GraphClassInfo& info) {
  std::vector<ItemSet> out;
  for (const auto& cls : minimum_coloring(instance.graph(), info)) {
    if (!cls.empty()) out.push_back(instance.to_ids(cls));
  }
  return out;
}

ItemSet max_weight_independent_set(const ConflictInstance& instance, const GraphClassInfo& info,
                                   std::span<const Rational> weights) {
  return instance.to_ids(max_weight_independent_set<Rational>(instance.graph(), info, weights));
}

// Edmonds' blossom algorithm, O(V^3).
std::vector<Edge> maximum_matching_general(int vertex_count, std::span<const Edge> edges) {
  const int n = vertex_count;
  const Graph graph(n, edges);
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> base(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n));
  std::vector<char> blossom(static_cast<std::size_t>(n));
  std::vector<int> queue;

  auto at = [](auto& vec, int i) -> auto& { return vec[static_cast<std::size_t>(i)]; };

  auto lca = [&](int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    while (true) {
      a = at(base, a);
      at(seen, a) = 1;
      if (at(match, a) < 0) break;
      a = at(parent, at(match, a));
    }
    while (true) {
      b = at(base, b);
      if (at(seen, b)) return b;
      b = at(parent, at(match, b));
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (at(base, v) != b) {
      at(blossom, at(base, v)) = 1;
      at(blossom, at(base, at(match, v))) = 1;
      at(parent, v) = child;
      child = at(match, v);
      v = at(parent, at(match, v));
    }
  };

  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    at(used, root) = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : graph.neighbors(v)) {
        if (at(base, v) == at(base, to) || at(match, v) == to) continue;
        if (to == root || (at(match, to) >= 0 && at(parent, at(match, to)) >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (at(blossom, at(base, i))) {
              at(base, i) = cur;
              if (!at(used, i)) {
                at(used, i) = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (at(parent, to) < 0) {
          at(parent, to) = v;
          if (at(match, to) < 0) return to;
          at(used, at(match, to)) = 1;
          queue.push_back(at(match, to));
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (at(match, v) >= 0) continue;
    int u = find_path(v);
    while (u >= 0) {
      const int pv = at(parent, u);
      const int ppv = at(match, pv);
      at(match, u) = pv;
      at(match, pv) = u;
      u = ppv;
    }
  }

  std::vector<Edge> out;
  for (int v = 0; v < n; ++v) {
    if (at(match, v) > v) out.emplace_back(v, at(match, v));
  }
  return out;
}

}  // namespace bpc
