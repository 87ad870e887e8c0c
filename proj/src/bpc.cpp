#include "bpc/bpc.hpp"

#include <algorithm>

#include "bpc/errors.hpp"
#include "bpc/oracle.hpp"
#include "bpc/packing_classic.hpp"

namespace bpc {
namespace {

void require(bool ok, const std::string& algorithm, const std::string& needed, const GraphClassInfo& info) {
  if (!ok) {
    throw CapabilityError(algorithm + " needs a " + needed + " conflict graph; recognized: " + info.describe());
  }
}

// Better of FFD and asymptotic_bp on a conflict-free item set.
Packing pack_independent(const ConflictInstance& instance, const ItemSet& items, const SolverConfig& config) {
  const auto sizes = sizes_of(instance, items);
  Packing a = ffd(items, sizes);
  Packing b = asymptotic_bp(items, sizes, config.exact_threshold);
  return b.bin_count() < a.bin_count() ? b : a;
}

Packing color_sets_rest(const ConflictInstance& instance, std::span<const ItemId> remove, const SolverConfig& config) {
  const auto rest = restrict_instance(instance, remove, RestrictMode::kSubtract);
  return color_sets(rest, recognize(rest), config);
}

Packing tagged(Packing p, const std::string& source) {
  p.source = source;
  return p;
}

}  // namespace

void SolveDiagnostics::flag(const std::string& name) {
  if (std::find(flags.begin(), flags.end(), name) == flags.end()) flags.push_back(name);
}

Packing color_sets(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config) {
  Packing out;
  for (const auto& color : minimum_coloring(instance, info)) out = concat_packings(out, pack_independent(instance, color, config));
  return tagged(std::move(out), "color_sets");
}

Rational color_sets_bound(const ConflictInstance& instance, const GraphClassInfo& info) {
  Rational bound(static_cast<std::int64_t>(minimum_coloring(instance, info).size()));
  const auto classes = classify_items(instance);
  bound += Rational(static_cast<std::int64_t>(classes.large.size()));
  bound += Rational(3, 2) * instance.total_size(classes.medium);
  bound += Rational(4, 3) * instance.total_size(classes.small);
  return bound;
}

Packing max_solve(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config,
                  SolveDiagnostics* diagnostics) {
  require(info.supported() || instance.graph().edge_count() == 0, "max_solve", "supported", info);
  Packing singletons;
  for (ItemId l : classify_items(instance).large) singletons.bins.push_back({l});
  MaxSizeOptions options;
  options.strategy = config.strategy;
  options.eps = config.eps;
  options.fptas_eps = config.fptas_eps;
  options.enumeration_cap = config.enumeration_cap;
  options.seed = config.seed;
  auto grown = max_size(instance, singletons, info, options);
  if (diagnostics) {
    for (const auto& f : grown.flags) diagnostics->flag(f);
  }
  const ItemSet packed = grown.augmented.items();
  return tagged(concat_packings(grown.augmented, color_sets_rest(instance, packed, config)), "max_solve");
}

Packing matching_pack(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config) {
  require(info.supported() || instance.graph().edge_count() == 0, "matching", "supported", info);
  const auto classes = classify_items(instance);
  ItemSet big = classes.large;
  big.insert(big.end(), classes.medium.begin(), classes.medium.end());
  std::sort(big.begin(), big.end());

  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < big.size(); ++i) {
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      if (instance.size_of(big[i]) + instance.size_of(big[j]) <= Rational(1) && !instance.conflict(big[i], big[j])) {
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  const auto matching = maximum_matching_general(static_cast<int>(big.size()), pairs);
  Packing out;
  std::vector<char> matched(big.size(), 0);
  for (const auto& [u, v] : matching) {
    out.bins.push_back({big[static_cast<std::size_t>(u)], big[static_cast<std::size_t>(v)]});
    matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (!matched[i]) out.bins.push_back({big[i]});
  }
  return tagged(concat_packings(out, color_sets_rest(instance, big, config)), "matching");
}

Packing approx_bpc(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config,
                   SolveDiagnostics* diagnostics) {
  Packing candidates[] = {color_sets(instance, info, config), max_solve(instance, info, config, diagnostics),
                          matching_pack(instance, info, config)};
  std::size_t best = 0;
  for (std::size_t i = 0; i < std::size(candidates); ++i) {
    if (diagnostics) diagnostics->subroutine_bins[candidates[i].source] = candidates[i].bin_count();
    if (candidates[i].bin_count() < candidates[best].bin_count()) best = i;
  }
  return tagged(std::move(candidates[best]), "approx_bpc");
}

Packing split_approx(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config,
                     SolveDiagnostics* diagnostics) {
  require(info.split, "split_approx", "split", info);
  if (instance.empty()) return tagged(Packing{}, "split_approx");
  if (instance.graph().edge_count() == 0 && instance.total_size() <= Rational(1)) {
    return tagged(Packing{{instance.ids()}, ""}, "split_approx");
  }

  MaxSizeOptions options;
  options.strategy = config.strategy;
  options.oracle = BisOracle::kSplitFptas;
  options.fptas_eps = config.fptas_eps;
  options.seed = config.seed;

  Packing clique;
  for (int l : info.clique) clique.bins.push_back({instance.id(l)});
  const std::int64_t alpha_max = (Rational(2) * instance.total_size()).ceil() + 1;
  Packing best;
  bool have = false;
  for (std::int64_t alpha = 0; alpha <= alpha_max; ++alpha) {
    Packing initial = clique;
    initial.bins.resize(initial.bins.size() + static_cast<std::size_t>(alpha));
    auto grown = max_size(instance, initial, info, options);
    if (diagnostics) {
      for (const auto& f : grown.flags) diagnostics->flag(f);
    }
    const ItemSet packed = grown.augmented.items();
    const auto rest = restrict_instance(instance, packed, RestrictMode::kSubtract);
    Packing candidate = concat_packings(grown.augmented, ffd(rest));
    std::erase_if(candidate.bins, [](const ItemSet& bin) { return bin.empty(); });
    if (!have || candidate.bin_count() < best.bin_count()) {
      best = std::move(candidate);
      have = true;
    }
  }
  return tagged(std::move(best), "split_approx");
}

Packing abs_bpb(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config,
                SolveDiagnostics* diagnostics) {
  require(info.bipartite, "abs_bpb", "bipartite", info);
  std::vector<Packing> candidates;
  candidates.push_back(color_sets(instance, info, config));

  if (instance.size() <= config.exact_fallback_n) {
    candidates.push_back(tagged(opt_bpc_exact(instance, config.exact_fallback_n).packing, "exact"));
  } else {
    ExactOptions small;
    small.max_bins = 3;
    small.node_limit = config.small_opt_node_limit;
    const auto r = exact_search(instance.graph(), instance.sizes(), small);
    if (r.found) {
      Packing p;
      for (const auto& bin : r.bins) p.bins.push_back(instance.to_ids(bin));
      candidates.push_back(tagged(std::move(p), "exact"));
    } else if (!r.complete && diagnostics) {
      diagnostics->flag("small-opt-search-incomplete");
    }
  }

  const auto classes = classify_items(instance, config.tiny_eps);
  for (const auto* side : {&info.side_x, &info.side_y}) {
    ItemSet w;
    for (int l : *side) {
      const ItemId id = instance.id(l);
      if (std::binary_search(classes.tiny.begin(), classes.tiny.end(), id)) w.push_back(id);
    }
    std::sort(w.begin(), w.end());
    candidates.push_back(assign(instance, info, w, config, diagnostics));
  }

  std::size_t best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].bin_count() < candidates[best].bin_count()) best = i;
  }
  if (diagnostics) {
    diagnostics->subroutine_bins["color_sets"] = candidates[0].bin_count();
    if (candidates.size() == 4) diagnostics->subroutine_bins["exact"] = candidates[1].bin_count();
    diagnostics->subroutine_bins["assign_x"] = candidates[candidates.size() - 2].bin_count();
    diagnostics->subroutine_bins["assign_y"] = candidates.back().bin_count();
  }
  return tagged(std::move(candidates[best]), "abs_bpb");
}

Packing multipartite_pack(const ConflictInstance& instance, const GraphClassInfo& info, const SolverConfig& config) {
  require(info.complete_multipartite, "multipartite_pack", "complete multipartite", info);
  Packing out;
  for (const auto& part : info.parts) {
    ItemSet ids = instance.to_ids(part);
    std::sort(ids.begin(), ids.end());
    out = concat_packings(out, pack_independent(instance, ids, config));
  }
  return tagged(std::move(out), "multipartite");
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"color_sets", "max_solve",   "matching", "approx_bpc",
                                              "split_approx", "abs_bpb", "multipartite", "exact"};
  return names;
}

bool applicable(const std::string& algorithm, const GraphClassInfo& info) {
  if (algorithm == "split_approx") return info.split;
  if (algorithm == "abs_bpb") return info.bipartite;
  if (algorithm == "multipartite") return info.complete_multipartite;
  if (algorithm == "exact") return true;
  if (std::find(algorithm_names().begin(), algorithm_names().end(), algorithm) == algorithm_names().end()) {
    throw ParameterError("unknown algorithm '" + algorithm + "'");
  }
  return info.supported();
}

Packing solve(const std::string& algorithm, const ConflictInstance& instance, const GraphClassInfo& info,
              const SolverConfig& config, SolveDiagnostics* diagnostics) {
  if (algorithm == "color_sets") return color_sets(instance, info, config);
  if (algorithm == "max_solve") return max_solve(instance, info, config, diagnostics);
  if (algorithm == "matching") return matching_pack(instance, info, config);
  if (algorithm == "approx_bpc") return approx_bpc(instance, info, config, diagnostics);
  if (algorithm == "split_approx") return split_approx(instance, info, config, diagnostics);
  if (algorithm == "abs_bpb") return abs_bpb(instance, info, config, diagnostics);
  if (algorithm == "multipartite") return multipartite_pack(instance, info, config);
  if (algorithm == "exact") return tagged(opt_bpc_exact(instance, config.exact_threshold).packing, "exact");
  std::string known;
  for (const auto& name : algorithm_names()) known += (known.empty() ? "" : ", ") + name;
  throw ParameterError("unknown algorithm '" + algorithm + "' (expected one of: " + known + ")");
}

}  // namespace bpc
