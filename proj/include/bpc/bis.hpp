#pragma once

#include <span>
#include <vector>

#include "bpc/graph.hpp"
#include "bpc/graphs.hpp"

namespace bpc {

/// Bounded independent set: maximize w(S) over independent S with
/// w(S) <= budget.
template <class Scalar>
struct BisProblem {
  Graph graph;
  std::vector<Scalar> weights;
  Scalar budget{0};
  GraphClassInfo info;
};

/// Builds a problem and recognizes the graph class. Throws ParameterError for
/// negative weights or budget.
template <class Scalar>
[[nodiscard]] BisProblem<Scalar> make_bis_problem(Graph graph, std::vector<Scalar> weights, Scalar budget);

/// Default cap on ceil(1/eps) for the PTAS enumeration.
inline constexpr int kDefaultEnumerationCap = 6;

/// Instrumentation for bis_ptas.
struct BisTrace {
  int guesses = 0;    ///< heavy sets F examined
  int evictions = 0;  ///< vertices dropped to restore the budget
  /// Whenever eviction ran, the kept value was still >= (1 - eps) budget.
  bool eviction_bound_ok = true;
};

/// Knapsack FPTAS by profit-scaling dynamic programming. Returns indices
/// (ascending) of a set with cost <= budget and profit >= (1 - eps) OPT.
/// When the profits are exact rationals with a small common denominator the
/// DP runs on exact integer profits and the result is optimal.
/// Throws ParameterError unless 0 < eps < 1.
template <class Scalar>
[[nodiscard]] std::vector<int> knapsack_fptas(std::span<const Scalar> profits, std::span<const Scalar> costs,
                                              Scalar budget, Scalar eps);

/// PTAS for BIS on graphs with exact weighted independent sets. Enumerates
/// independent sets F with |F| <= 1/eps and w(F) <= budget, completes each
/// with a maximum-weight independent set on the light vertices
/// (w <= eps * budget) that avoid F, then evicts lightest vertices until the
/// budget holds. Keeps the first strictly better candidate.
///
/// Throws ParameterError when ceil(1/eps) exceeds `enumeration_cap` or eps is
/// outside (0, 1); CapabilityError for an unsupported graph class.
template <class Scalar>
[[nodiscard]] std::vector<int> bis_ptas(const BisProblem<Scalar>& problem, Scalar eps,
                                        int enumeration_cap = kDefaultEnumerationCap, BisTrace* trace = nullptr);

/// FPTAS for BIS on split graphs: at most one clique vertex is in any
/// independent set, so try each clique vertex v (knapsack over the
/// independent side minus N(v) with budget - w(v)) and the no-clique case.
/// Throws CapabilityError without a split certificate.
template <class Scalar>
[[nodiscard]] std::vector<int> bis_fptas_split(const BisProblem<Scalar>& problem, Scalar eps);

template <class Scalar>
[[nodiscard]] Scalar total_weight(std::span<const int> set, std::span<const Scalar> weights) {
  Scalar sum(0);
  for (int v : set) sum += weights[static_cast<std::size_t>(v)];
  return sum;
}

/// Certificate of `info` restricted to the induced subgraph on `vertices`
/// (vertex i of the subgraph is vertices[i]). All supported classes are
/// hereditary, so the restricted certificates stay valid.
[[nodiscard]] GraphClassInfo induced_info(const GraphClassInfo& info, const Graph& induced,
                                          std::span<const int> vertices, int parent_size);

}  // namespace bpc
