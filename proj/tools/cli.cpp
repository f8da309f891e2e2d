#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pikdom/errors.hpp"
#include "pikdom/fast_solver.hpp"
#include "pikdom/oracle.hpp"
#include "pikdom/reduction.hpp"

namespace pikdom::cli {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t SeedFromEnv(std::uint64_t fallback) {
  if (const char* env = std::getenv("PIKDOM_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParam, std::string("PIKDOM_SEED is not an integer: ") + env);
    }
  }
  return fallback;
}

std::vector<int> ReadCandidateSet(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::vector<int> members;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || (fields >> extra)) {
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(line_no) +
                                         ": expected one vertex index");
    }
    members.push_back(value);
  }
  return members;
}

struct SolveArgs {
  std::string instance;
  std::string variant = "total";
  int k = 1;
  std::string algo = "fast";
  std::string format = "text";
  bool stats = false;
  std::string dump_dag;
  std::uint64_t cap_nodes = 100'000'000;
  int cap_brute = kDefaultBruteCap;
};

int CmdSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const auto model = ReadModelFile(args.instance);
  SolveOptions options;
  options.variant = ParseVariant(args.variant);
  options.k = args.k;
  options.weighted = model.has_costs();
  options.node_cap = args.cap_nodes;
  if (!args.dump_dag.empty()) {
    std::ofstream dump(args.dump_dag, std::ios::binary);
    if (!dump) throw Error(ErrorCode::kParam, "cannot write '" + args.dump_dag + "'");
    dump << DumpDigraph(BuildDigraph(model, options));
  }
  const auto start = Clock::now();
  const SolveReport report =
      Solve(model, ParseEngine(args.algo), options, args.stats, args.cap_brute);
  err << "wall-ms: " << MillisSince(start) << '\n';
  if (args.format == "json") {
    out << ToJson(report).dump() << '\n';
  } else {
    out << RenderText(report);
  }
  return report.feasible ? kExitOk : kExitInfeasible;
}

struct VerifyArgs {
  std::string instance;
  std::string set_file;
  std::string variant = "total";
  int k = 1;
};

int CmdVerify(const VerifyArgs& args, std::ostream& out) {
  const auto model = ReadModelFile(args.instance);
  const Variant variant = ParseVariant(args.variant);
  if (args.k < 1) throw Error(ErrorCode::kParam, "k must be positive");
  const VertexSet set(ReadCandidateSet(args.set_file));
  set.CheckRange(model.size());
  const auto graph = DeriveGraph(model);
  const auto violation = FirstViolation(graph, set, args.k, variant);
  if (!violation) {
    out << "valid\n";
    return kExitOk;
  }
  int inside = 0;
  for (int u : graph.neighbors(*violation)) inside += set.contains(u) ? 1 : 0;
  out << "invalid: vertex " << *violation << " has " << inside
      << " neighbors in the set (needs " << args.k << ")\n";
  return kExitInfeasible;
}

struct GenArgs {
  int n = 10;
  std::uint64_t seed = 1;
  std::string stretch = "3";
  bool weighted = false;
  int max_cost = 10;
  std::string output;
};

int CmdGen(const GenArgs& args, std::ostream& out) {
  const std::uint64_t seed = SeedFromEnv(args.seed);
  auto model = GenerateRandom(args.n, seed, ParseRational(args.stretch));
  if (args.weighted) model = WithRandomCosts(model, seed, args.max_cost);
  const std::string text = SerializeModel(model);
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::kParam, "cannot write '" + args.output + "'");
    file << text;
  }
  return kExitOk;
}

struct BenchArgs {
  int n_min = 8;
  int n_max = 16;
  int n_step = 1;
  std::vector<int> ks{1};
  std::vector<std::string> variants{"total"};
  std::vector<std::string> engines{"naive", "fast"};
  int instances = 1;
  std::uint64_t seed = 1;
  std::string stretch = "3";
  bool weighted = false;
  std::string dir;
  std::uint64_t cap_nodes = 100'000'000;
  int cap_brute = kDefaultBruteCap;
  bool has_dir = false;
};

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, ProperIntervalModel>> corpus;
  if (args.has_dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(args.dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) corpus.emplace_back(path.string(), ReadModelFile(path.string()));
    if (corpus.empty()) {
      err << "error: no instances in '" << args.dir << "'\n";
      return kExitError;
    }
  } else {
    const std::uint64_t seed = SeedFromEnv(args.seed);
    const Rational stretch = ParseRational(args.stretch);
    if (args.n_step < 1) throw Error(ErrorCode::kParam, "n-step must be positive");
    for (int n = args.n_min; n <= args.n_max; n += args.n_step) {
      for (int i = 0; i < args.instances; ++i) {
        const std::uint64_t s = seed + 1000003ULL * static_cast<std::uint64_t>(n) + i;
        auto model = GenerateRandom(n, s, stretch);
        if (args.weighted) model = WithRandomCosts(model, s, 10);
        corpus.emplace_back("gen(n=" + std::to_string(n) + ",seed=" + std::to_string(s) + ")",
                            std::move(model));
      }
    }
    if (corpus.empty()) {
      err << "error: empty n range\n";
      return kExitError;
    }
  }

  out << "n,k,variant,engine,nodes,work,wall_ms,cost\n";
  for (const auto& [label, model] : corpus) {
    for (const int k : args.ks) {
      for (const std::string& variant_name : args.variants) {
        SolveOptions options;
        options.k = k;
        options.variant = ParseVariant(variant_name);
        options.weighted = model.has_costs();
        options.node_cap = args.cap_nodes;
        std::optional<SolveReport> reference;
        for (const std::string& engine_name : args.engines) {
          const auto start = Clock::now();
          const SolveReport report =
              Solve(model, ParseEngine(engine_name), options, true, args.cap_brute);
          const double ms = MillisSince(start);
          std::uint64_t nodes = 0;
          std::uint64_t work = 0;
          const auto& stats = *report.stats;
          if (engine_name == "fast") {
            nodes = stats["small"].get<std::uint64_t>() + stats["big"].get<std::uint64_t>() + 2;
            work = stats["representative_tests"].get<std::uint64_t>();
          } else if (engine_name == "naive") {
            nodes = stats["nodes"].get<std::uint64_t>();
            work = stats["arcs"].get<std::uint64_t>();
          } else {
            work = stats["subsets"].get<std::uint64_t>();
          }
          out << model.size() << ',' << k << ',' << variant_name << ',' << engine_name << ','
              << nodes << ',' << work << ',' << ms << ','
              << report.cost.value_or("infeasible") << '\n';
          if (!reference) {
            reference = report;
          } else if (reference->cost != report.cost) {
            err << "error: engines disagree on " << label << " (k=" << k
                << ", variant=" << variant_name << "): " << reference->engine << "="
                << reference->cost.value_or("infeasible") << ", " << engine_name << "="
                << report.cost.value_or("infeasible") << "\n--- instance ---\n"
                << SerializeModel(model);
            return kExitError;
          }
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

nlohmann::ordered_json ToJson(const SolveReport& report) {
  nlohmann::ordered_json json;
  json["feasible"] = report.feasible;
  json["cost"] = report.cost ? nlohmann::ordered_json(*report.cost) : nlohmann::ordered_json();
  json["set"] = report.set;
  json["engine"] = report.engine;
  json["k"] = report.k;
  json["variant"] = report.variant;
  json["n"] = report.n;
  if (report.stats) json["stats"] = *report.stats;
  return json;
}

SolveReport ReportFromJson(const nlohmann::ordered_json& json) {
  SolveReport report;
  report.feasible = json.at("feasible").get<bool>();
  if (!json.at("cost").is_null()) report.cost = json.at("cost").get<std::string>();
  report.set = json.at("set").get<std::vector<int>>();
  report.engine = json.at("engine").get<std::string>();
  report.k = json.at("k").get<int>();
  report.variant = json.at("variant").get<std::string>();
  report.n = json.at("n").get<int>();
  if (json.contains("stats")) report.stats = json.at("stats");
  return report;
}

std::string RenderText(const SolveReport& report) {
  std::ostringstream out;
  out << "feasible: " << (report.feasible ? "yes" : "no") << '\n';
  out << "cost: " << report.cost.value_or("infeasible") << '\n';
  out << "set:";
  for (int v : report.set) out << ' ' << v;
  out << '\n';
  out << "engine: " << report.engine << '\n';
  out << "k: " << report.k << '\n';
  out << "variant: " << report.variant << '\n';
  out << "n: " << report.n << '\n';
  if (report.stats) out << "stats: " << report.stats->dump() << '\n';
  return out.str();
}

SolveReport Solve(const ProperIntervalModel& model, Engine engine, const SolveOptions& options,
                  bool with_stats, int brute_cap) {
  Solution solution;
  nlohmann::ordered_json stats;
  switch (engine) {
    case Engine::kFast: {
      const FastResult result = SolveFastDetailed(model, options);
      solution = result.solution;
      const FastStats& s = result.stats;
      stats["small"] = s.small;
      stats["big"] = s.big;
      stats["big_prime"] = s.big_prime;
      stats["classes"] = s.classes;
      stats["representative_tests"] = s.representative_tests;
      stats["source_tests"] = s.source_tests;
      stats["sink_tests"] = s.sink_tests;
      stats["e1_arcs"] = s.e1_arcs;
      break;
    }
    case Engine::kNaive: {
      const NaiveResult result = SolveNaiveDetailed(model, options);
      solution = result.solution;
      stats["nodes"] = result.nodes;
      stats["arcs"] = result.arcs;
      break;
    }
    case Engine::kBrute:
      solution = BruteForceMin(model, options.k, options.variant, options.weighted, brute_cap);
      stats["subsets"] = std::uint64_t{1} << model.size();
      break;
  }
  SolveReport report;
  report.feasible = solution.feasible;
  if (solution.cost) report.cost = FormatRational(*solution.cost);
  report.set = solution.set.members();
  report.engine = std::string(EngineName(solution.engine));
  report.k = options.k;
  report.variant = std::string(VariantName(options.variant));
  report.n = model.size();
  if (with_stats) report.stats = std::move(stats);
  return report;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (total) k-domination on proper interval graphs"};
  app.name("pikdom");
  app.require_subcommand(1);

  const auto add_k = [](CLI::App* cmd, int& k) {
    cmd->add_option("--k", k, "Domination parameter")->check(CLI::PositiveNumber);
  };
  const auto add_variant = [](CLI::App* cmd, std::string& variant) {
    cmd->add_option("--variant", variant, "kdom or total")
        ->check(CLI::IsMember({"kdom", "total"}));
  };

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  add_variant(solve_cmd, solve.variant);
  add_k(solve_cmd, solve.k);
  solve_cmd->add_option("--algo", solve.algo, "fast, naive or brute")
      ->check(CLI::IsMember({"fast", "naive", "brute"}));
  solve_cmd->add_option("--format", solve.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--stats", solve.stats, "Include engine statistics");
  solve_cmd->add_option("--dump-dag", solve.dump_dag, "Write the explicit digraph here");
  solve_cmd->add_option("--cap-nodes", solve.cap_nodes, "Abort above this projected node count");
  solve_cmd->add_option("--cap-brute", solve.cap_brute, "Largest n accepted by --algo brute");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate set");
  verify_cmd->add_option("instance", verify.instance, "Instance file")->required();
  verify_cmd->add_option("set", verify.set_file, "One vertex index per line")->required();
  add_variant(verify_cmd, verify.variant);
  add_k(verify_cmd, verify.k);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random proper interval model");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Seed (PIKDOM_SEED overrides)");
  gen_cmd->add_option("--stretch", gen.stretch, "Interval length");
  gen_cmd->add_flag("--weighted", gen.weighted, "Attach random integer costs");
  gen_cmd->add_option("--max-cost", gen.max_cost, "Largest generated cost");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare engines over an instance sweep");
  bench_cmd->add_option("--n-min", bench.n_min);
  bench_cmd->add_option("--n-max", bench.n_max);
  bench_cmd->add_option("--n-step", bench.n_step);
  bench_cmd->add_option("--k", bench.ks, "Comma-separated k values")->delimiter(',');
  bench_cmd->add_option("--variant", bench.variants, "Comma-separated variants")->delimiter(',');
  bench_cmd->add_option("--engines", bench.engines, "Comma-separated engines")->delimiter(',');
  bench_cmd->add_option("--instances", bench.instances, "Instances per n");
  bench_cmd->add_option("--seed", bench.seed, "Base seed (PIKDOM_SEED overrides)");
  bench_cmd->add_option("--stretch", bench.stretch, "Interval length");
  bench_cmd->add_flag("--weighted", bench.weighted, "Attach random costs to generated models");
  bench_cmd->add_option("--dir", bench.dir, "Benchmark every instance file in this directory");
  bench_cmd->add_option("--cap-nodes", bench.cap_nodes);
  bench_cmd->add_option("--cap-brute", bench.cap_brute);

  SelftestConfig selftest;
  std::string fault = "none";
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the randomized invariant suite");
  selftest_cmd->add_flag("--quick", selftest.quick, "Fewer instances");
  selftest_cmd->add_option("--seed", selftest.seed, "Base seed (PIKDOM_SEED overrides)");
  selftest_cmd->add_option("--inject-fault", fault, "Corrupt the engines: none or drop-gap")
      ->check(CLI::IsMember({"none", "drop-gap"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve, out, err);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*gen_cmd) return CmdGen(gen, out);
    if (*bench_cmd) {
      bench.has_dir = bench_cmd->count("--dir") > 0;
      return CmdBench(bench, out, err);
    }
    if (*selftest_cmd) {
      selftest.seed = SeedFromEnv(selftest.seed);
      selftest.fault = fault == "drop-gap" ? Fault::kDropGapCondition : Fault::kNone;
      const SelftestOutcome outcome = RunSelftest(selftest, out);
      if (outcome.passed) {
        out << "selftest passed: " << outcome.instances << " instances, " << outcome.checks
            << " checks\n";
        return kExitOk;
      }
      out << "selftest FAILED (seed " << selftest.seed << ")\n" << outcome.failure;
      return kExitError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace pikdom::cli
