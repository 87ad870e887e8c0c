#pragma once

#include <span>
#include <string>
#include <vector>

#include "bpc/graph.hpp"
#include "bpc/model.hpp"

namespace bpc {

/// Recognized graph classes with certificates. All vertex references are
/// local indices of the graph that was recognized.
struct GraphClassInfo {
  bool edgeless = false;

  bool bipartite = false;
  std::vector<int> side_x;  ///< bipartition: no edges inside side_x or side_y
  std::vector<int> side_y;

  bool split = false;
  std::vector<int> clique;       ///< split partition: clique part
  std::vector<int> independent;  ///< split partition: independent part

  bool cluster = false;
  std::vector<std::vector<int>> components;  ///< cliques, one per component

  bool complete_multipartite = false;
  std::vector<std::vector<int>> parts;  ///< independent parts, all cross edges present

  bool chordal = false;
  /// Perfect elimination ordering: each vertex is simplicial among the
  /// vertices that follow it.
  std::vector<int> elimination_order;

  /// Classes for which coloring and weighted independent sets are exact.
  [[nodiscard]] bool supported() const {
    return edgeless || bipartite || split || cluster || complete_multipartite || chordal;
  }
  /// Comma-separated list of the recognized class names.
  [[nodiscard]] std::string describe() const;
};

/// Names accepted wherever a graph class is named (class hints, generators).
inline constexpr const char* kSupportedClasses =
    "edgeless, bipartite, split, cluster, complete-multipartite, chordal";

[[nodiscard]] GraphClassInfo recognize(const Graph& graph);
[[nodiscard]] inline GraphClassInfo recognize(const ConflictInstance& instance) {
  return recognize(instance.graph());
}

/// Certificate checks, independent of the recognizers.
[[nodiscard]] bool verify_bipartition(const Graph& graph, std::span<const int> x, std::span<const int> y);
[[nodiscard]] bool verify_split(const Graph& graph, std::span<const int> clique, std::span<const int> independent);
[[nodiscard]] bool verify_clusters(const Graph& graph, const std::vector<std::vector<int>>& components);
[[nodiscard]] bool verify_parts(const Graph& graph, const std::vector<std::vector<int>>& parts);
[[nodiscard]] bool verify_elimination_order(const Graph& graph, std::span<const int> order);
/// Runs every verifier for which `info` claims a class.
[[nodiscard]] bool verify_certificates(const Graph& graph, const GraphClassInfo& info);

/// Whether the named class (see kSupportedClasses) is certified in `info`.
[[nodiscard]] bool has_class(const GraphClassInfo& info, const std::string& name);

/// Minimum coloring of a graph in a supported class. Each color class is an
/// independent set, sorted ascending; the number of classes is chi(G).
/// Throws CapabilityError if no supported certificate is present.
[[nodiscard]] std::vector<std::vector<int>> minimum_coloring(const Graph& graph, const GraphClassInfo& info);
[[nodiscard]] std::vector<ItemSet> minimum_coloring(const ConflictInstance& instance, const GraphClassInfo& info);

/// Maximum-weight independent set for a supported class. Vertices of zero
/// weight are never returned. Result is sorted ascending.
template <class Scalar>
[[nodiscard]] std::vector<int> max_weight_independent_set(const Graph& graph, const GraphClassInfo& info,
                                                          std::span<const Scalar> weights);

[[nodiscard]] ItemSet max_weight_independent_set(const ConflictInstance& instance, const GraphClassInfo& info,
                                                 std::span<const Rational> weights);

/// Maximum-cardinality matching on an arbitrary graph (Edmonds' blossom
/// algorithm). Pairs are (u, v) with u < v, sorted.
[[nodiscard]] std::vector<Edge> maximum_matching_general(int vertex_count, std::span<const Edge> edges);

}  // namespace bpc
