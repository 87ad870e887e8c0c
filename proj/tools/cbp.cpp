// cbp: solve, generate, benchmark and verify bin packing with conflicts.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "bpc/bpc.hpp"
#include "bpc/errors.hpp"
#include "bpc/harness/generate.hpp"
#include "bpc/harness/io.hpp"
#include "bpc/harness/suite.hpp"
#include "bpc/oracle.hpp"

namespace {

using namespace bpc;
using namespace bpc::harness;
using nlohmann::json;

constexpr int kExitParameter = 2;
constexpr int kExitCapability = 3;
constexpr int kExitInfeasible = 4;

struct SolveArgs {
  std::string algo = "approx_bpc";
  std::string in;
  std::string eps;
  std::string strategy;
  std::uint64_t seed = 0;
  bool oracle = false;
  std::string out;
};

int run_solve(const SolveArgs& args) {
  const auto instance = read_instance(args.in);
  const auto info = recognize(instance);
  SolverConfig config;
  if (!args.eps.empty()) config.eps = Rational::parse(args.eps);
  if (!args.strategy.empty()) config.strategy = parse_strategy(args.strategy);
  config.seed = args.seed;
  SolveDiagnostics diag;
  const auto packing = solve(args.algo, instance, info, config, &diag);

  json doc;
  doc["algorithm"] = args.algo;
  doc["classes"] = info.describe();
  doc["bins"] = packing.bin_count();
  doc["packing"] = packing_to_json(packing, instance)["bins"];
  doc["flags"] = diag.flags;
  if (args.oracle) {
    const int opt = opt_bpc_exact(instance).opt;
    doc["opt"] = opt;
    doc["ratio"] = opt == 0 ? 1.0 : static_cast<double>(packing.bin_count()) / opt;
  }
  if (!args.out.empty()) write_json(args.out, packing_to_json(packing, instance));
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_generate(const std::string& spec_path, const std::string& out) {
  const auto doc = read_json(spec_path);
  const auto spec = generator_spec_from_json(doc);
  const int count = doc.value("count", 1);
  if (count < 0) throw ParameterError("count must be non-negative");
  std::filesystem::create_directories(out);
  for (int k = 0; k < count; ++k) {
    GeneratorSpec s = spec;
    s.seed = spec.seed + static_cast<std::uint64_t>(k);
    const std::string stem = s.graph_class + "-" + std::to_string(s.seed);
    const auto dir = std::filesystem::path(out);
    if (s.graph_class == "b3dm-reduction") {
      const auto r = generate_b3dm(s.b3dm, s.seed);
      (void)generate(s);  // runs the class verifier
      write_instance(dir / (stem + ".json"), r.instance);
      const auto witness = r.witness();
      if (witness.bin_count() > 0) write_json(dir / (stem + ".witness.json"), packing_to_json(witness, r.instance));
    } else {
      write_instance(dir / (stem + ".json"), generate(s));
    }
    std::cout << (dir / (stem + ".json")).string() << "\n";
  }
  return 0;
}

int run_bench(const std::string& suite_path, const std::string& out, int jobs, bool timestamp) {
  auto config = load_suite(suite_path);
  if (timestamp) config.timestamp = true;
  const auto result = run_suite(config, jobs);
  write_suite(result, config, out);
  std::cout << summary_csv(result);
  return 0;
}

int run_verify(const std::string& in, const std::string& packing_path, bool partial) {
  const auto instance = read_instance(in);
  const auto packing = packing_from_json(read_json(packing_path), instance);
  const auto report = validate_packing(instance, packing, !partial);
  json doc;
  doc["feasible"] = report.feasible;
  doc["bins"] = packing.bin_count();
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"bin", v.bin}, {"kind", to_string(v.kind)}, {"detail", v.detail}});
  }
  doc["violations"] = std::move(violations);
  std::cout << doc.dump(2) << "\n";
  return report.feasible ? 0 : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bin packing with conflicts: solvers, generators and benchmarks"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Pack one instance");
  solve_cmd->add_option("--algo", solve_args.algo, "Algorithm name")->capture_default_str();
  solve_cmd->add_option("--in", solve_args.in, "Instance JSON file")->required();
  solve_cmd->add_option("--eps", solve_args.eps, "Accuracy of the independent set oracle, e.g. 1/6");
  solve_cmd->add_option("--strategy", solve_args.strategy, "greedy-sequential or config-lp");
  solve_cmd->add_option("--seed", solve_args.seed, "Rounding seed for config-lp");
  solve_cmd->add_flag("--oracle", solve_args.oracle, "Also compute the exact optimum");
  solve_cmd->add_option("--out", solve_args.out, "Write the packing to this file");

  std::string spec_path, gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Generate instances from a spec file");
  gen_cmd->add_option("--spec", spec_path, "Generator spec JSON")->required();
  gen_cmd->add_option("--out", gen_out, "Output directory")->required();

  std::string suite_path, bench_out;
  int jobs = 1;
  bool timestamp = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", suite_path, "Suite JSON")->required();
  bench_cmd->add_option("--out", bench_out, "Output directory")->required();
  bench_cmd->add_option("--jobs", jobs, "Instances solved in parallel")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--timestamp", timestamp, "Record wall-clock times");

  std::string verify_in, verify_packing;
  bool partial = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a packing against an instance");
  verify_cmd->add_option("--in", verify_in, "Instance JSON file")->required();
  verify_cmd->add_option("--packing", verify_packing, "Packing JSON file")->required();
  verify_cmd->add_flag("--partial", partial, "Do not require every item to be packed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParameter;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*gen_cmd) return run_generate(spec_path, gen_out);
    if (*bench_cmd) return run_bench(suite_path, bench_out, jobs, timestamp);
    if (*verify_cmd) return run_verify(verify_in, verify_packing, partial);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
