#include "bpc/harness/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "bpc/errors.hpp"
#include "bpc/harness/io.hpp"
#include "bpc/oracle.hpp"
#include "bpc/packing_classic.hpp"
#include "bpc/rng.hpp"

namespace bpc::harness {
namespace {

using nlohmann::json;

Rational rational_field(const json& doc, const char* key, Rational fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number()) return Rational::from_double(v.get<double>());
  throw ParameterError(std::string("field '") + key + "' must be a number or a fraction string");
}

template <typename T>
T field(const json& doc, const char* key, T fallback) {
  return doc.contains(key) ? doc.at(key).get<T>() : fallback;
}

std::string bool_cell(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string padded(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", k);
  return buf;
}

bool ffd_bounds_hold(const ConflictInstance& instance, const GraphClassInfo& info) {
  for (const auto& color : minimum_coloring(instance, info)) {
    const auto sizes = sizes_of(instance, color);
    const Rational bins(ffd(color, sizes).bin_count());
    if (bins > ffd_size_bound(sizes) || bins > ffd_class_bound(sizes)) return false;
  }
  return true;
}

std::vector<RunRow> run_instance(const SuiteInstance& si, const SuiteConfig& config,
                                 const std::vector<std::string>& algorithms) {
  const auto& instance = si.instance;
  const auto info = recognize(instance);
  std::vector<RunRow> rows;
  for (const auto& algorithm : algorithms) {
    RunRow row;
    row.instance_id = si.id;
    row.graph_class = si.graph_class;
    row.n = instance.size();
    row.algorithm = algorithm;
    row.opt = si.opt;
    if (!applicable(algorithm, info)) {
      row.flags.push_back("skipped");
      rows.push_back(std::move(row));
      continue;
    }
    SolveDiagnostics diag;
    const auto start = std::chrono::steady_clock::now();
    try {
      row.packing = solve(algorithm, instance, info, config.solver, &diag);
    } catch (const CapabilityError&) {
      row.flags.push_back("capability-error");
      rows.push_back(std::move(row));
      continue;
    }
    const auto stop = std::chrono::steady_clock::now();
    if (config.timestamp) {
      row.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    }
    row.bins = row.packing.bin_count();
    row.flags = diag.flags;
    if (!validate_packing(instance, row.packing, true).feasible) row.flags.push_back("infeasible");

    if (algorithm == "color_sets") {
      row.lemma2_ok = ffd_bounds_hold(instance, info);
      row.lemma4_ok = Rational(*row.bins) <= color_sets_bound(instance, info);
    }
    if (algorithm == "matching" && si.opt) {
      const auto chi = static_cast<std::int64_t>(minimum_coloring(instance, info).size());
      const Rational bound =
          Rational(*si.opt + chi) + Rational(4, 3) * instance.total_size(classify_items(instance).small);
      row.lemma8_ok = Rational(*row.bins) <= bound;
    }
    if (algorithm == "abs_bpb" && diag.lemma12_runs > 0) row.lemma12_ok = diag.lemma12_ok;
    if (algorithm == "multipartite" && si.opt) row.lemma16_ok = *row.bins == *si.opt;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::optional<double> RunRow::ratio() const {
  if (!bins || !opt) return std::nullopt;
  if (*opt == 0) return *bins == 0 ? 1.0 : static_cast<double>(*bins);
  return static_cast<double>(*bins) / static_cast<double>(*opt);
}

bool RunRow::feasible() const { return std::find(flags.begin(), flags.end(), "infeasible") == flags.end(); }

GeneratorSpec generator_spec_from_json(const json& doc) {
  try {
    GeneratorSpec spec;
    spec.graph_class = field<std::string>(doc, "class", spec.graph_class);
    spec.n = field<int>(doc, "n", spec.n);
    spec.density = field<double>(doc, "density", spec.density);
    spec.seed = field<std::uint64_t>(doc, "seed", spec.seed);
    if (doc.contains("sizes")) {
      const auto& s = doc.at("sizes");
      const auto kind = field<std::string>(s, "kind", "discrete");
      if (kind == "discrete") {
        spec.sizes.kind = SizeDistribution::Kind::kDiscrete;
        if (s.contains("values")) {
          for (const auto& v : s.at("values")) {
            spec.sizes.values.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                                      : Rational::from_double(v.get<double>()));
          }
        }
      } else if (kind == "uniform") {
        spec.sizes.kind = SizeDistribution::Kind::kUniform;
        spec.sizes.lo = rational_field(s, "lo", spec.sizes.lo);
        spec.sizes.hi = rational_field(s, "hi", spec.sizes.hi);
        spec.sizes.resolution = field<std::int64_t>(s, "resolution", spec.sizes.resolution);
      } else {
        throw ParameterError("size distribution kind must be 'discrete' or 'uniform', got '" + kind + "'");
      }
    }
    if (doc.contains("b3dm")) {
      const auto& b = doc.at("b3dm");
      auto& r = spec.b3dm;
      r.x_count = field<int>(b, "x", r.x_count);
      r.y_count = field<int>(b, "y", r.y_count);
      r.z_count = field<int>(b, "z", r.z_count);
      r.triple_count = field<int>(b, "triples", r.triple_count);
      r.guess = field<int>(b, "guess", r.guess);
      r.variant = field<std::string>(b, "variant", r.variant);
      r.max_degree = field<int>(b, "c", r.max_degree);
      if (b.contains("triple_list")) {
        for (const auto& t : b.at("triple_list")) r.triples.push_back(t.get<Triple>());
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed generator spec: ") + e.what());
  }
}

SolverConfig solver_config_from_json(const json& doc) {
  try {
    SolverConfig c;
    c.eps = rational_field(doc, "eps", c.eps);
    c.fptas_eps = rational_field(doc, "fptas_eps", c.fptas_eps);
    c.tiny_eps = rational_field(doc, "tiny_eps", c.tiny_eps);
    c.enumeration_cap = field<int>(doc, "enumeration_cap", c.enumeration_cap);
    c.exact_threshold = field<int>(doc, "exact_threshold", c.exact_threshold);
    c.assign_max_bins = field<int>(doc, "assign_max_bins", c.assign_max_bins);
    c.assign_max_big_items = field<int>(doc, "assign_max_big_items", c.assign_max_big_items);
    c.exact_fallback_n = field<int>(doc, "exact_fallback_n", c.exact_fallback_n);
    c.small_opt_node_limit = field<long long>(doc, "small_opt_node_limit", c.small_opt_node_limit);
    if (doc.contains("strategy")) c.strategy = parse_strategy(doc.at("strategy").get<std::string>());
    c.seed = field<std::uint64_t>(doc, "seed", c.seed);
    return c;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed solver config: ") + e.what());
  }
}

SuiteConfig suite_from_json(const json& doc, const std::filesystem::path& base) {
  try {
    if (!doc.is_object()) throw ParameterError("suite file must hold a JSON object");
    SuiteConfig c;
    c.name = field<std::string>(doc, "name", c.name);
    c.seed = field<std::uint64_t>(doc, "seed", c.seed);
    c.algorithms = field<std::vector<std::string>>(doc, "algorithms", {});
    for (const auto& a : c.algorithms) {
      const auto& known = algorithm_names();
      if (std::find(known.begin(), known.end(), a) == known.end()) {
        throw ParameterError("unknown algorithm '" + a + "' in suite");
      }
    }
    c.oracle = field<bool>(doc, "oracle", c.oracle);
    c.oracle_limit = field<int>(doc, "oracle_limit", c.oracle_limit);
    c.timestamp = field<bool>(doc, "timestamp", c.timestamp);
    if (doc.contains("solver")) c.solver = solver_config_from_json(doc.at("solver"));
    if (doc.contains("instances")) {
      for (const auto& g : doc.at("instances")) {
        InstanceGroup group;
        group.spec = generator_spec_from_json(g);
        group.count = field<int>(g, "count", 1);
        if (group.count < 0) throw ParameterError("group count must be non-negative");
        c.groups.push_back(std::move(group));
      }
    }
    if (doc.contains("files")) {
      for (const auto& f : doc.at("files")) {
        std::filesystem::path p = f.get<std::string>();
        c.files.push_back(p.is_relative() && !base.empty() ? base / p : p);
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed suite: ") + e.what());
  }
}

json suite_to_json(const SuiteConfig& c) {
  json doc;
  doc["name"] = c.name;
  doc["seed"] = c.seed;
  doc["algorithms"] = c.algorithms;
  doc["oracle"] = c.oracle;
  doc["oracle_limit"] = c.oracle_limit;
  doc["timestamp"] = c.timestamp;
  doc["solver"] = {{"eps", c.solver.eps.str()},
                   {"fptas_eps", c.solver.fptas_eps.str()},
                   {"tiny_eps", c.solver.tiny_eps.str()},
                   {"enumeration_cap", c.solver.enumeration_cap},
                   {"exact_threshold", c.solver.exact_threshold},
                   {"assign_max_bins", c.solver.assign_max_bins},
                   {"assign_max_big_items", c.solver.assign_max_big_items},
                   {"exact_fallback_n", c.solver.exact_fallback_n},
                   {"small_opt_node_limit", c.solver.small_opt_node_limit},
                   {"strategy", to_string(c.solver.strategy)},
                   {"seed", c.solver.seed}};
  json groups = json::array();
  for (const auto& g : c.groups) {
    json sizes;
    if (g.spec.sizes.kind == SizeDistribution::Kind::kDiscrete) {
      sizes["kind"] = "discrete";
      json values = json::array();
      for (const auto& v : g.spec.sizes.values) values.push_back(v.str());
      sizes["values"] = values;
    } else {
      sizes = {{"kind", "uniform"},
               {"lo", g.spec.sizes.lo.str()},
               {"hi", g.spec.sizes.hi.str()},
               {"resolution", g.spec.sizes.resolution}};
    }
    json group{{"class", g.spec.graph_class}, {"count", g.count},    {"n", g.spec.n},
               {"density", g.spec.density},   {"sizes", sizes}};
    if (g.spec.graph_class == "b3dm-reduction") {
      const auto& b = g.spec.b3dm;
      group["b3dm"] = {{"x", b.x_count},         {"y", b.y_count},     {"z", b.z_count},
                       {"triples", b.triple_count}, {"guess", b.guess}, {"variant", b.variant},
                       {"c", b.max_degree},      {"triple_list", b.triples}};
    }
    groups.push_back(std::move(group));
  }
  doc["instances"] = std::move(groups);
  json files = json::array();
  for (const auto& f : c.files) files.push_back(f.generic_string());
  doc["files"] = std::move(files);
  return doc;
}

SuiteConfig load_suite(const std::filesystem::path& path) {
  auto config = suite_from_json(read_json(path), path.parent_path());
  if (const char* env = std::getenv("CBP_SEED"); env != nullptr && *env != '\0') {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("CBP_SEED must be an unsigned integer, got '") + env + "'");
    }
  }
  return config;
}

std::vector<SuiteInstance> suite_instances(const SuiteConfig& config) {
  std::vector<SuiteInstance> out;
  for (std::size_t g = 0; g < config.groups.size(); ++g) {
    const auto& group = config.groups[g];
    SplitMix64 seeds(config.seed + 0x100000001B3ULL * (g + 1));
    for (int k = 0; k < group.count; ++k) {
      GeneratorSpec spec = group.spec;
      spec.seed = seeds.next();
      SuiteInstance si;
      si.id = "g" + std::to_string(g) + "-" + spec.graph_class + "-" + padded(k);
      si.graph_class = spec.graph_class;
      si.instance = generate(spec);
      out.push_back(std::move(si));
    }
  }
  for (const auto& f : config.files) {
    SuiteInstance si;
    si.id = "file-" + f.stem().string();
    si.instance = read_instance(f);
    si.graph_class = si.instance.class_hint().value_or("file");
    out.push_back(std::move(si));
  }
  std::sort(out.begin(), out.end(), [](const SuiteInstance& a, const SuiteInstance& b) { return a.id < b.id; });
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].id == out[k - 1].id) throw ParameterError("duplicate instance id " + out[k].id);
  }
  return out;
}

SuiteResult run_suite(const SuiteConfig& config, int jobs) {
  SuiteResult result;
  result.instances = suite_instances(config);
  const std::vector<std::string> algorithms = config.algorithms.empty() ? algorithm_names() : config.algorithms;

  const std::size_t count = result.instances.size();
  std::vector<std::vector<RunRow>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        auto& si = result.instances[k];
        if (config.oracle && si.instance.size() <= config.oracle_limit) {
          si.opt = opt_bpc_exact(si.instance, config.oracle_limit).opt;
        }
        rows[k] = run_instance(si, config, algorithms);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (auto& r : rows) std::move(r.begin(), r.end(), std::back_inserter(result.rows));
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const RunRow& a, const RunRow& b) {
    return std::tie(a.instance_id, a.algorithm) < std::tie(b.instance_id, b.algorithm);
  });

  std::map<std::pair<std::string, std::string>, SummaryRow> summary;
  for (const auto& row : result.rows) {
    auto& s = summary[{row.graph_class, row.algorithm}];
    s.graph_class = row.graph_class;
    s.algorithm = row.algorithm;
    if (!row.bins) {
      ++s.skipped;
      continue;
    }
    ++s.runs;
    if (!row.feasible()) ++s.infeasible;
    if (const auto r = row.ratio()) {
      ++s.with_opt;
      s.max_ratio = std::max(s.max_ratio, *r);
      s.mean_ratio += *r;
    }
  }
  for (auto& [key, s] : summary) {
    if (s.with_opt > 0) s.mean_ratio /= s.with_opt;
    result.summary.push_back(s);
  }
  return result;
}

std::string report_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "instance_id,class,n,algorithm,bins,opt,ratio,lemma2_ok,lemma4_ok,lemma8_ok,lemma12_ok,lemma16_ok,"
         "fallback_flags,micros\n";
  for (const auto& r : result.rows) {
    const auto ratio = r.ratio();
    out << r.instance_id << ',' << r.graph_class << ',' << r.n << ',' << r.algorithm << ','
        << (r.bins ? std::to_string(*r.bins) : "") << ',' << (r.opt ? std::to_string(*r.opt) : "") << ','
        << (ratio ? fixed6(*ratio) : "") << ',' << bool_cell(r.lemma2_ok) << ',' << bool_cell(r.lemma4_ok) << ','
        << bool_cell(r.lemma8_ok) << ',' << bool_cell(r.lemma12_ok) << ',' << bool_cell(r.lemma16_ok) << ','
        << join(r.flags, ';') << ',' << (r.micros ? std::to_string(*r.micros) : "") << '\n';
  }
  return out.str();
}

std::string summary_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "class,algorithm,runs,skipped,infeasible,with_opt,max_ratio,mean_ratio\n";
  for (const auto& s : result.summary) {
    out << s.graph_class << ',' << s.algorithm << ',' << s.runs << ',' << s.skipped << ',' << s.infeasible << ','
        << s.with_opt << ',' << (s.with_opt ? fixed6(s.max_ratio) : "") << ','
        << (s.with_opt ? fixed6(s.mean_ratio) : "") << '\n';
  }
  return out.str();
}

void write_suite(const SuiteResult& result, const SuiteConfig& config, const std::filesystem::path& out) {
  std::filesystem::create_directories(out / "instances");
  write_text(out / "report.csv", report_csv(result));
  write_text(out / "summary.csv", summary_csv(result));

  json run;
  run["config"] = suite_to_json(config);
  run["instances"] = result.instances.size();
  run["rows"] = result.rows.size();
  if (config.timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    run["timestamp"] = buf;
  }
  write_json(out / "run.json", run);

  std::map<std::string, std::vector<const RunRow*>> by_instance;
  for (const auto& r : result.rows) by_instance[r.instance_id].push_back(&r);
  for (const auto& si : result.instances) {
    json doc;
    doc["id"] = si.id;
    doc["class"] = si.graph_class;
    doc["n"] = si.instance.size();
    doc["opt"] = si.opt ? json(*si.opt) : json(nullptr);
    doc["instance"] = instance_to_json(si.instance);
    json results = json::array();
    for (const RunRow* r : by_instance[si.id]) {
      json entry{{"algorithm", r->algorithm}, {"flags", r->flags}};
      entry["bins"] = r->bins ? json(*r->bins) : json(nullptr);
      if (r->bins) entry["packing"] = packing_to_json(r->packing, si.instance)["bins"];
      if (r->micros) entry["micros"] = *r->micros;
      results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    write_json(out / "instances" / (si.id + ".json"), doc);
  }
}

}  // namespace bpc::harness
