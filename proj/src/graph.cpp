#include "bpc/graph.hpp"

#include <algorithm>
#include <string>

#include "bpc/errors.hpp"

namespace bpc {

Graph::Graph(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(n)),
      matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw ParameterError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references unknown vertex");
  }
  if (u == v) throw ParameterError("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw ParameterError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  const auto nn = static_cast<std::size_t>(n_);
  matrix_[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)] = 1;
  matrix_[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(u)] = 1;
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) out.add_edge(i, j);
    }
  }
  return out;
}

bool Graph::is_independent(std::span<const int> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool Graph::is_clique(std::span<const int> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool Graph::independent_of(int v, std::span<const int> set) const {
  return std::none_of(set.begin(), set.end(), [&](int u) { return adjacent(u, v); });
}

}  // namespace bpc
