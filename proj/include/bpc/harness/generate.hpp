#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpc/model.hpp"

namespace bpc::harness {

/// Item sizes: a discrete set sampled uniformly, or a uniform draw from
/// [lo, hi] on the grid {k / resolution}.
struct SizeDistribution {
  enum class Kind { kDiscrete, kUniform };
  Kind kind = Kind::kDiscrete;
  std::vector<Rational> values;  ///< empty means {k/20 : k = 1..20}
  Rational lo{1, 20};
  Rational hi{1};
  std::int64_t resolution = 1000;
};

using Triple = std::array<int, 3>;  ///< (x, y, z) element indices

struct B3dmSpec {
  int x_count = 3;
  int y_count = 3;
  int z_count = 3;
  int triple_count = 4;
  int guess = 2;               ///< i; a matching of this size is planted
  std::string variant = "BPB";  ///< BPB (bipartite) or BPS (clique on T)
  int max_degree = 3;          ///< c: triples per element
  /// Explicit triple system; replaces the random one when non-empty.
  std::vector<Triple> triples;
};

/// Class names: edgeless, bipartite, split, cluster, complete-multipartite,
/// chordal, b3dm-reduction.
///
/// `density` is the cross-edge probability for bipartite and split graphs
/// and the probability that a new vertex attaches to the graph for chordal
/// ones. Cluster and complete multipartite graphs draw a random vertex
/// partition and ignore it.
struct GeneratorSpec {
  std::string graph_class = "bipartite";
  int n = 10;
  double density = 0.3;
  SizeDistribution sizes;
  std::uint64_t seed = 0;
  B3dmSpec b3dm;
};

/// The reduction instance for guess i: items U = X ∪ Y ∪ Z (size 3/20),
/// T (11/20), P_i (9/20, |T| - i items), Q_i (17/20, |U| - 3i items), in
/// that id order. Each element conflicts with every triple not containing it.
struct B3dmReduction {
  ConflictInstance instance;
  std::vector<Triple> triples;
  std::vector<int> matching;  ///< indices into `triples`, size i, or empty
  int x_count = 0, y_count = 0, z_count = 0;
  int guess = 0;

  [[nodiscard]] ItemId x(int k) const { return k; }
  [[nodiscard]] ItemId y(int k) const { return x_count + k; }
  [[nodiscard]] ItemId z(int k) const { return x_count + y_count + k; }
  [[nodiscard]] ItemId triple(int k) const { return x_count + y_count + z_count + k; }
  [[nodiscard]] ItemId p(int k) const { return triple(static_cast<int>(triples.size())) + k; }
  [[nodiscard]] ItemId q(int k) const { return p(static_cast<int>(triples.size()) - guess) + k; }

  /// {x, y, z, t} for every triple t.
  [[nodiscard]] std::vector<ItemSet> useful_bins() const;
  /// The packing of all-full bins built from `matching`: useful bins, then
  /// {t, p} for the other triples, then {u, q} for the uncovered elements.
  /// Empty when no matching of size i was found.
  [[nodiscard]] Packing witness() const;
};

/// Throws ParameterError on invalid counts or when the triple system cannot
/// be drawn under the degree bound.
[[nodiscard]] B3dmReduction generate_b3dm(const B3dmSpec& spec, std::uint64_t seed);

/// Deterministic in the spec; the instance carries the class as hint and
/// passes the class's certificate verifier. Throws ParameterError for an
/// unknown class or invalid parameters.
[[nodiscard]] ConflictInstance generate(const GeneratorSpec& spec);

/// Class names accepted by generate().
[[nodiscard]] const std::vector<std::string>& generator_classes();

}  // namespace bpc::harness
