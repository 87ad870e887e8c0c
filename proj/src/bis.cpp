#include "bpc/bis.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "bpc/errors.hpp"
#include "bpc/rational.hpp"

namespace bpc {
namespace {

// Exact DP table budget (cells) before the scaled path is used instead.
constexpr std::int64_t kMaxDpCells = 40'000'000;

std::int64_t lcm_capped(std::int64_t a, std::int64_t b, std::int64_t cap) {
  const std::int64_t g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  return l > cap ? -1 : static_cast<std::int64_t>(l);
}

// Integer profits equal to the exact profits times a common denominator, if
// that keeps the DP small.
std::optional<std::vector<std::int64_t>> exact_integer_profits(std::span<const Rational> profits,
                                                               std::int64_t max_total) {
  std::int64_t den = 1;
  for (const auto& p : profits) {
    den = lcm_capped(den, p.den(), max_total);
    if (den < 0) return std::nullopt;
  }
  std::vector<std::int64_t> out;
  __int128 total = 0;
  for (const auto& p : profits) {
    const __int128 scaled = static_cast<__int128>(p.num()) * (den / p.den());
    total += scaled;
    if (total > max_total) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(scaled));
  }
  return out;
}

std::optional<std::vector<std::int64_t>> exact_integer_profits(std::span<const double>, std::int64_t) {
  return std::nullopt;
}

template <class Scalar>
void check_eps(const Scalar& eps, const char* who) {
  if (!(eps > Scalar(0)) || !(eps < Scalar(1))) {
    throw ParameterError(std::string(who) + ": eps must lie in (0, 1)");
  }
}

}  // namespace

template <class Scalar>
BisProblem<Scalar> make_bis_problem(Graph graph, std::vector<Scalar> weights, Scalar budget) {
  if (static_cast<int>(weights.size()) != graph.size()) throw ParameterError("weights do not match the graph");
  for (const auto& w : weights) {
    if (w < Scalar(0)) throw ParameterError("BIS weights must be nonnegative");
  }
  if (budget < Scalar(0)) throw ParameterError("BIS budget must be nonnegative");
  BisProblem<Scalar> out;
  out.info = recognize(graph);
  out.graph = std::move(graph);
  out.weights = std::move(weights);
  out.budget = budget;
  return out;
}

GraphClassInfo induced_info(const GraphClassInfo& info, const Graph& induced, std::span<const int> vertices,
                            int parent_size) {
  std::vector<int> index(static_cast<std::size_t>(parent_size), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  auto map_list = [&](const std::vector<int>& list) {
    std::vector<int> out;
    for (int v : list) {
      if (const int i = index[static_cast<std::size_t>(v)]; i >= 0) out.push_back(i);
    }
    return out;
  };
  auto map_groups = [&](const std::vector<std::vector<int>>& groups) {
    std::vector<std::vector<int>> out;
    for (const auto& g : groups) {
      auto mapped = map_list(g);
      if (!mapped.empty()) out.push_back(std::move(mapped));
    }
    return out;
  };

  GraphClassInfo out;
  out.edgeless = induced.edge_count() == 0;
  out.bipartite = info.bipartite;
  if (out.bipartite) {
    out.side_x = map_list(info.side_x);
    out.side_y = map_list(info.side_y);
  }
  out.split = info.split;
  if (out.split) {
    out.clique = map_list(info.clique);
    out.independent = map_list(info.independent);
  }
  out.cluster = info.cluster;
  if (out.cluster) out.components = map_groups(info.components);
  out.complete_multipartite = info.complete_multipartite;
  if (out.complete_multipartite) out.parts = map_groups(info.parts);
  out.chordal = info.chordal;
  if (out.chordal) out.elimination_order = map_list(info.elimination_order);
  return out;
}

template <class Scalar>
std::vector<int> knapsack_fptas(std::span<const Scalar> profits, std::span<const Scalar> costs, Scalar budget,
                                Scalar eps) {
  check_eps(eps, "knapsack_fptas");
  if (profits.size() != costs.size()) throw ParameterError("knapsack_fptas: profits and costs differ in length");

  std::vector<int> candidates;
  for (std::size_t i = 0; i < profits.size(); ++i) {
    if (profits[i] > Scalar(0) && !(costs[i] > budget)) candidates.push_back(static_cast<int>(i));
  }
  if (candidates.empty()) return {};

  std::vector<Scalar> cand_profits;
  for (int i : candidates) cand_profits.push_back(profits[static_cast<std::size_t>(i)]);
  const auto m = static_cast<std::int64_t>(candidates.size());

  std::vector<std::int64_t> scaled;
  if (auto exact = exact_integer_profits(std::span<const Scalar>(cand_profits), kMaxDpCells / (m + 1))) {
    scaled = std::move(*exact);
  } else {
    // Profit scaling: K = eps * P_max / n, profits rounded down.
    const Scalar p_max = *std::max_element(cand_profits.begin(), cand_profits.end());
    const Scalar k = eps * p_max / Scalar(static_cast<double>(m));
    for (const auto& p : cand_profits) scaled.push_back(floor_div(p, k));
  }
  const std::int64_t total = std::accumulate(scaled.begin(), scaled.end(), std::int64_t{0});
  if ((total + 1) * m > kMaxDpCells * 4) throw ParameterError("knapsack_fptas: eps too small for the DP table");

  // min_cost[q]: least cost reaching scaled profit exactly q.
  const auto width = static_cast<std::size_t>(total + 1);
  std::vector<Scalar> min_cost(width, Scalar(0));
  std::vector<char> reached(width, 0);
  std::vector<char> took(static_cast<std::size_t>(m) * width, 0);
  reached[0] = 1;
  std::int64_t reach_max = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t p = scaled[static_cast<std::size_t>(i)];
    if (p == 0) continue;
    const Scalar& c = costs[static_cast<std::size_t>(candidates[static_cast<std::size_t>(i)])];
    for (std::int64_t q = reach_max; q >= 0; --q) {
      if (!reached[static_cast<std::size_t>(q)]) continue;
      const Scalar cost = min_cost[static_cast<std::size_t>(q)] + c;
      if (cost > budget) continue;
      const auto target = static_cast<std::size_t>(q + p);
      if (!reached[target] || cost < min_cost[target]) {
        reached[target] = 1;
        min_cost[target] = cost;
        took[static_cast<std::size_t>(i) * width + target] = 1;
      }
    }
    reach_max += p;
  }
  std::int64_t best = total;
  while (best > 0 && !reached[static_cast<std::size_t>(best)]) --best;

  std::vector<int> out;
  for (std::int64_t i = m - 1; i >= 0 && best > 0; --i) {
    if (took[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(best)]) {
      out.push_back(candidates[static_cast<std::size_t>(i)]);
      best -= scaled[static_cast<std::size_t>(i)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Scalar>
std::vector<int> bis_ptas(const BisProblem<Scalar>& problem, Scalar eps, int enumeration_cap, BisTrace* trace) {
  check_eps(eps, "bis_ptas");
  const Scalar inverse = Scalar(1) / eps;
  const std::int64_t max_guess = floor_div(Scalar(1), eps);
  const std::int64_t bound = max_guess + (Scalar(static_cast<double>(max_guess)) < inverse ? 1 : 0);
  if (bound > enumeration_cap) {
    throw ParameterError("bis_ptas: ceil(1/eps) = " + std::to_string(bound) + " exceeds the enumeration cap " +
                         std::to_string(enumeration_cap) + "; use a larger eps");
  }
  const auto& graph = problem.graph;
  const auto& w = problem.weights;
  const int n = graph.size();
  if (n > 0 && !problem.info.supported()) {
    throw CapabilityError(std::string("bis_ptas needs one of: ") + kSupportedClasses +
                          "; recognized: " + problem.info.describe());
  }
  const Scalar threshold = eps * problem.budget;

  // Candidates for F: any vertex that fits the budget on its own.
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    if (!(w[static_cast<std::size_t>(v)] > problem.budget)) candidates.push_back(v);
  }

  std::vector<int> best;
  Scalar best_weight(0);
  std::vector<int> guess;

  auto evaluate = [&]() {
    if (trace) ++trace->guesses;
    std::vector<int> residual;
    for (int v = 0; v < n; ++v) {
      if (w[static_cast<std::size_t>(v)] > threshold) continue;
      if (std::find(guess.begin(), guess.end(), v) != guess.end()) continue;
      if (!graph.independent_of(v, guess)) continue;
      residual.push_back(v);
    }
    const Graph sub = graph.induced(residual);
    const auto sub_info = induced_info(problem.info, sub, residual, n);
    std::vector<Scalar> sub_weights;
    for (int v : residual) sub_weights.push_back(w[static_cast<std::size_t>(v)]);
    std::vector<int> chosen;
    for (int i : max_weight_independent_set<Scalar>(sub, sub_info, sub_weights)) {
      chosen.push_back(residual[static_cast<std::size_t>(i)]);
    }

    Scalar value = total_weight<Scalar>(guess, w) + total_weight<Scalar>(chosen, w);
    bool evicted = false;
    while (value > problem.budget) {
      // Drop the lightest vertex, ties by smallest index.
      auto z = std::min_element(chosen.begin(), chosen.end(), [&](int a, int b) {
        if (w[static_cast<std::size_t>(a)] != w[static_cast<std::size_t>(b)]) {
          return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
        }
        return a < b;
      });
      value -= w[static_cast<std::size_t>(*z)];
      chosen.erase(z);
      evicted = true;
      if (trace) ++trace->evictions;
    }
    if (evicted && trace && value < problem.budget - threshold) trace->eviction_bound_ok = false;

    if (best_weight < value) {
      best = guess;
      best.insert(best.end(), chosen.begin(), chosen.end());
      best_weight = value;
    }
  };

  // Independent sets F with |F| <= 1/eps and w(F) <= budget, in
  // lexicographic order.
  auto extend = [&](auto&& self, std::size_t start, Scalar weight) -> void {
    evaluate();
    if (static_cast<std::int64_t>(guess.size()) >= max_guess) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const int v = candidates[i];
      const Scalar next = weight + w[static_cast<std::size_t>(v)];
      if (next > problem.budget || !graph.independent_of(v, guess)) continue;
      guess.push_back(v);
      self(self, i + 1, next);
      guess.pop_back();
    }
  };
  extend(extend, 0, Scalar(0));

  std::sort(best.begin(), best.end());
  return best;
}

template <class Scalar>
std::vector<int> bis_fptas_split(const BisProblem<Scalar>& problem, Scalar eps) {
  check_eps(eps, "bis_fptas_split");
  const auto& info = problem.info;
  if (!info.split) {
    throw CapabilityError("bis_fptas_split needs a split partition; recognized: " + info.describe());
  }
  const auto& graph = problem.graph;
  const auto& w = problem.weights;

  auto knapsack_over = [&](const std::vector<int>& pool, Scalar budget) {
    std::vector<Scalar> values;
    for (int v : pool) values.push_back(w[static_cast<std::size_t>(v)]);
    std::vector<int> out;
    for (int i : knapsack_fptas<Scalar>(values, values, budget, eps)) out.push_back(pool[static_cast<std::size_t>(i)]);
    return out;
  };

  std::vector<int> best = knapsack_over(info.independent, problem.budget);
  Scalar best_weight = total_weight<Scalar>(best, w);
  for (int v : info.clique) {
    const Scalar wv = w[static_cast<std::size_t>(v)];
    if (wv > problem.budget) continue;
    std::vector<int> pool;
    for (int u : info.independent) {
      if (!graph.adjacent(u, v)) pool.push_back(u);
    }
    auto candidate = knapsack_over(pool, problem.budget - wv);
    candidate.push_back(v);
    const Scalar value = total_weight<Scalar>(candidate, w);
    if (value > best_weight) {
      best = std::move(candidate);
      best_weight = value;
    }
  }
  std::erase_if(best, [&](int v) { return !(w[static_cast<std::size_t>(v)] > Scalar(0)); });
  std::sort(best.begin(), best.end());
  return best;
}

#define BPC_INSTANTIATE_BIS(Scalar)                                                                            \
  template BisProblem<Scalar> make_bis_problem<Scalar>(Graph, std::vector<Scalar>, Scalar);                    \
  template std::vector<int> knapsack_fptas<Scalar>(std::span<const Scalar>, std::span<const Scalar>, Scalar,   \
                                                   Scalar);                                                    \
  template std::vector<int> bis_ptas<Scalar>(const BisProblem<Scalar>&, Scalar, int, BisTrace*);               \
  template std::vector<int> bis_fptas_split<Scalar>(const BisProblem<Scalar>&, Scalar);

BPC_INSTANTIATE_BIS(Rational)
BPC_INSTANTIATE_BIS(double)

#undef BPC_INSTANTIATE_BIS

}  // namespace bpc
