#include "bpc/harness/generate.hpp"

#include <algorithm>
#include <set>

#include "bpc/errors.hpp"
#include "bpc/graphs.hpp"
#include "bpc/rng.hpp"

namespace bpc::harness {
namespace {

const Rational kElementSize{3, 20};
const Rational kTripleSize{11, 20};
const Rational kPSize{9, 20};
const Rational kQSize{17, 20};

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::vector<Rational> draw_sizes(const SizeDistribution& dist, int n, SplitMix64& rng) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  if (dist.kind == SizeDistribution::Kind::kDiscrete) {
    std::vector<Rational> values = dist.values;
    if (values.empty()) {
      for (int k = 1; k <= 20; ++k) values.emplace_back(k, 20);
    }
    for (const auto& v : values) {
      if (v < Rational(0) || v > Rational(1)) throw ParameterError("size value " + v.str() + " outside [0, 1]");
    }
    for (int i = 0; i < n; ++i) out.push_back(values[rng.below(values.size())]);
    return out;
  }
  if (dist.resolution <= 0) throw ParameterError("size resolution must be positive");
  if (dist.lo < Rational(0) || dist.hi > Rational(1) || dist.hi < dist.lo) {
    throw ParameterError("uniform size range must satisfy 0 <= lo <= hi <= 1");
  }
  const std::int64_t a = (dist.lo * Rational(dist.resolution)).ceil();
  const std::int64_t b = (dist.hi * Rational(dist.resolution)).floor();
  if (a > b) throw ParameterError("uniform size range contains no grid point");
  for (int i = 0; i < n; ++i) out.emplace_back(rng.range(a, b), dist.resolution);
  return out;
}

// Backtracking search for `size` pairwise disjoint triples.
bool find_matching(const std::vector<Triple>& triples, int size, std::vector<int>& chosen,
                   std::array<std::set<int>, 3>& used, std::size_t from) {
  if (static_cast<int>(chosen.size()) == size) return true;
  for (std::size_t k = from; k < triples.size(); ++k) {
    const auto& t = triples[k];
    if (used[0].count(t[0]) || used[1].count(t[1]) || used[2].count(t[2])) continue;
    for (int d = 0; d < 3; ++d) used[static_cast<std::size_t>(d)].insert(t[static_cast<std::size_t>(d)]);
    chosen.push_back(static_cast<int>(k));
    if (find_matching(triples, size, chosen, used, k + 1)) return true;
    chosen.pop_back();
    for (int d = 0; d < 3; ++d) used[static_cast<std::size_t>(d)].erase(t[static_cast<std::size_t>(d)]);
  }
  return false;
}

std::vector<Triple> random_triples(const B3dmSpec& spec, SplitMix64& rng, std::vector<int>& matching) {
  const int i = spec.guess;
  if (i > std::min({spec.x_count, spec.y_count, spec.z_count})) {
    throw ParameterError("b3dm: cannot plant a matching of size " + std::to_string(i));
  }
  if (spec.max_degree < 1) throw ParameterError("b3dm: max_degree must be at least 1");
  std::array<std::vector<int>, 3> perm;
  const int counts[] = {spec.x_count, spec.y_count, spec.z_count};
  for (std::size_t d = 0; d < 3; ++d) {
    perm[d].resize(static_cast<std::size_t>(counts[d]));
    for (int k = 0; k < counts[d]; ++k) perm[d][static_cast<std::size_t>(k)] = k;
    shuffle(perm[d], rng);
  }
  std::vector<Triple> triples;
  std::set<Triple> seen;
  std::array<std::vector<int>, 3> degree{std::vector<int>(static_cast<std::size_t>(spec.x_count)),
                                         std::vector<int>(static_cast<std::size_t>(spec.y_count)),
                                         std::vector<int>(static_cast<std::size_t>(spec.z_count))};
  auto add = [&](const Triple& t) {
    triples.push_back(t);
    seen.insert(t);
    for (std::size_t d = 0; d < 3; ++d) ++degree[d][static_cast<std::size_t>(t[d])];
  };
  for (int k = 0; k < i; ++k) {
    const auto s = static_cast<std::size_t>(k);
    add({perm[0][s], perm[1][s], perm[2][s]});
  }
  const long long attempts = 1000LL * std::max(1, spec.triple_count);
  for (long long a = 0; a < attempts && static_cast<int>(triples.size()) < spec.triple_count; ++a) {
    Triple t{static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.x_count))),
             static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.y_count))),
             static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.z_count)))};
    if (seen.count(t)) continue;
    bool ok = true;
    for (std::size_t d = 0; d < 3; ++d) ok = ok && degree[d][static_cast<std::size_t>(t[d])] < spec.max_degree;
    if (ok) add(t);
  }
  if (static_cast<int>(triples.size()) < spec.triple_count) {
    throw ParameterError("b3dm: could not draw " + std::to_string(spec.triple_count) +
                         " distinct triples with at most " + std::to_string(spec.max_degree) + " per element");
  }
  std::vector<int> order(triples.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  shuffle(order, rng);
  std::vector<Triple> out(triples.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out[k] = triples[static_cast<std::size_t>(order[k])];
    if (order[k] < i) matching.push_back(static_cast<int>(k));
  }
  std::sort(matching.begin(), matching.end());
  return out;
}

bool known_class(const std::string& name) {
  const auto& names = generator_classes();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

std::vector<ItemSet> B3dmReduction::useful_bins() const {
  std::vector<ItemSet> out;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& t = triples[k];
    out.push_back({x(t[0]), y(t[1]), z(t[2]), triple(static_cast<int>(k))});
  }
  return out;
}

Packing B3dmReduction::witness() const {
  Packing out;
  if (static_cast<int>(matching.size()) != guess) return out;
  std::vector<char> in_matching(triples.size(), 0);
  std::vector<char> covered(static_cast<std::size_t>(x_count + y_count + z_count), 0);
  const auto bins = useful_bins();
  for (int m : matching) {
    out.bins.push_back(bins[static_cast<std::size_t>(m)]);
    in_matching[static_cast<std::size_t>(m)] = 1;
    for (ItemId u : bins[static_cast<std::size_t>(m)]) {
      if (u < x_count + y_count + z_count) covered[static_cast<std::size_t>(u)] = 1;
    }
  }
  int pk = 0;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    if (!in_matching[k]) out.bins.push_back({triple(static_cast<int>(k)), p(pk++)});
  }
  int qk = 0;
  for (int u = 0; u < x_count + y_count + z_count; ++u) {
    if (!covered[static_cast<std::size_t>(u)]) out.bins.push_back({u, q(qk++)});
  }
  out.source = "witness";
  return out;
}

B3dmReduction generate_b3dm(const B3dmSpec& spec, std::uint64_t seed) {
  if (spec.x_count < 1 || spec.y_count < 1 || spec.z_count < 1) {
    throw ParameterError("b3dm: element counts must be positive");
  }
  if (spec.variant != "BPB" && spec.variant != "BPS") {
    throw ParameterError("b3dm: variant must be BPB or BPS, got '" + spec.variant + "'");
  }
  const int triple_count = spec.triples.empty() ? spec.triple_count : static_cast<int>(spec.triples.size());
  const int elements = spec.x_count + spec.y_count + spec.z_count;
  if (spec.guess < 0 || triple_count - spec.guess < 0 || elements - 3 * spec.guess < 0) {
    throw ParameterError("b3dm: guess " + std::to_string(spec.guess) + " needs |T| - i >= 0 and |U| - 3i >= 0");
  }

  B3dmReduction r;
  r.x_count = spec.x_count;
  r.y_count = spec.y_count;
  r.z_count = spec.z_count;
  r.guess = spec.guess;
  if (spec.triples.empty()) {
    SplitMix64 rng(seed);
    r.triples = random_triples(spec, rng, r.matching);
  } else {
    std::set<Triple> seen;
    const int counts[] = {spec.x_count, spec.y_count, spec.z_count};
    for (const auto& t : spec.triples) {
      for (std::size_t d = 0; d < 3; ++d) {
        if (t[d] < 0 || t[d] >= counts[d]) throw ParameterError("b3dm: triple element out of range");
      }
      if (!seen.insert(t).second) throw ParameterError("b3dm: duplicate triple");
    }
    r.triples = spec.triples;
    std::array<std::set<int>, 3> used;
    if (!find_matching(r.triples, spec.guess, r.matching, used, 0)) r.matching.clear();
  }

  const int t_count = static_cast<int>(r.triples.size());
  std::vector<Rational> sizes(static_cast<std::size_t>(elements), kElementSize);
  sizes.insert(sizes.end(), static_cast<std::size_t>(t_count), kTripleSize);
  sizes.insert(sizes.end(), static_cast<std::size_t>(t_count - spec.guess), kPSize);
  sizes.insert(sizes.end(), static_cast<std::size_t>(elements - 3 * spec.guess), kQSize);

  std::vector<Edge> edges;
  for (int k = 0; k < t_count; ++k) {
    const auto& t = r.triples[static_cast<std::size_t>(k)];
    for (int a = 0; a < spec.x_count; ++a) {
      if (a != t[0]) edges.emplace_back(r.x(a), r.triple(k));
    }
    for (int a = 0; a < spec.y_count; ++a) {
      if (a != t[1]) edges.emplace_back(r.y(a), r.triple(k));
    }
    for (int a = 0; a < spec.z_count; ++a) {
      if (a != t[2]) edges.emplace_back(r.z(a), r.triple(k));
    }
  }
  if (spec.variant == "BPS") {
    for (int a = 0; a < t_count; ++a) {
      for (int b = a + 1; b < t_count; ++b) edges.emplace_back(r.triple(a), r.triple(b));
    }
  }
  r.instance = ConflictInstance::create(std::move(sizes), edges, spec.variant == "BPB" ? "bipartite" : "split");
  return r;
}

const std::vector<std::string>& generator_classes() {
  static const std::vector<std::string> names{"edgeless", "bipartite", "split",         "cluster",
                                              "complete-multipartite", "chordal", "b3dm-reduction"};
  return names;
}

ConflictInstance generate(const GeneratorSpec& spec) {
  if (!known_class(spec.graph_class)) {
    std::string known;
    for (const auto& name : generator_classes()) known += (known.empty() ? "" : ", ") + name;
    throw ParameterError("unknown generator class '" + spec.graph_class + "' (expected one of: " + known + ")");
  }
  ConflictInstance out;
  std::string declared = spec.graph_class;
  if (spec.graph_class == "b3dm-reduction") {
    out = generate_b3dm(spec.b3dm, spec.seed).instance;
    declared = *out.class_hint();
  } else {
    if (spec.n < 0) throw ParameterError("n must be non-negative");
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw ParameterError("density must lie in [0, 1]");
    SplitMix64 rng(spec.seed);
    const int n = spec.n;
    auto sizes = draw_sizes(spec.sizes, n, rng);
    std::vector<Edge> edges;
    const auto& cls = spec.graph_class;
    if (cls == "bipartite") {
      std::vector<char> side(static_cast<std::size_t>(n));
      for (auto& s : side) s = rng.chance(0.5) ? 1 : 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && rng.chance(spec.density)) {
            edges.emplace_back(u, v);
          }
        }
      }
    } else if (cls == "split") {
      std::vector<int> order(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
      shuffle(order, rng);
      const int k = n == 0 ? 0 : static_cast<int>(rng.range(1, std::max(1, n / 2)));
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (b < k || rng.chance(spec.density)) {
            const int u = order[static_cast<std::size_t>(a)], v = order[static_cast<std::size_t>(b)];
            edges.emplace_back(std::min(u, v), std::max(u, v));
          }
        }
      }
    } else if (cls == "cluster" || cls == "complete-multipartite") {
      const bool cluster = cls == "cluster";
      const int groups = n == 0 ? 1 : static_cast<int>(rng.range(1, cluster ? std::max(1, n / 2) : std::min(n, 5)));
      std::vector<int> group(static_cast<std::size_t>(n));
      for (auto& g : group) g = static_cast<int>(rng.below(static_cast<std::uint64_t>(groups)));
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if ((group[static_cast<std::size_t>(u)] == group[static_cast<std::size_t>(v)]) == cluster) {
            edges.emplace_back(u, v);
          }
        }
      }
    } else if (cls == "chordal") {
      // Each new vertex attaches to a clique, so reversed insertion order is
      // a perfect elimination ordering.
      std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n)));
      for (int v = 1; v < n; ++v) {
        if (!rng.chance(spec.density)) continue;
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        std::vector<int> clique{u};
        for (int w = 0; w < v; ++w) {
          if (w == u || !adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) continue;
          const bool joins = std::all_of(clique.begin(), clique.end(), [&](int c) {
            return adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)] != 0;
          });
          if (joins && rng.chance(0.5)) clique.push_back(w);
        }
        for (int c : clique) {
          adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 1;
          adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = 1;
          edges.emplace_back(c, v);
        }
      }
    }
    out = ConflictInstance::create(std::move(sizes), edges, spec.graph_class);
  }

  const auto info = recognize(out);
  if (!has_class(info, declared) || !verify_certificates(out.graph(), info)) {
    throw InternalError("generated instance fails the " + declared + " verifier");
  }
  return out;
}

}  // namespace bpc::harness
