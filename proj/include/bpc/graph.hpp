#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bpc {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with adjacency lists and an
/// adjacency matrix for O(1) edge queries.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws ParameterError on self-loops, duplicate or out-of-range edges.
  Graph(int n, std::span<const Edge> edges);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] bool adjacent(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
  }
  [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  /// Edges as (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  [[nodiscard]] Graph induced(std::span<const int> vertices) const;

  [[nodiscard]] bool is_independent(std::span<const int> vertices) const;
  [[nodiscard]] bool is_clique(std::span<const int> vertices) const;
  /// True if `v` has no neighbor in `set`.
  [[nodiscard]] bool independent_of(int v, std::span<const int> set) const;

  void add_edge(int u, int v);

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

}  // namespace bpc
