#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pikdom/interval_model.hpp"
#include "pikdom/solution.hpp"

namespace pikdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

struct SolveReport {
  bool feasible = false;
  std::optional<std::string> cost;  // canonical decimal
  std::vector<int> set;             // original numbering
  std::string engine;
  int k = 1;
  std::string variant;
  int n = 0;
  std::optional<nlohmann::ordered_json> stats;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

nlohmann::ordered_json ToJson(const SolveReport& report);
SolveReport ReportFromJson(const nlohmann::ordered_json& json);
std::string RenderText(const SolveReport& report);

// Runs one engine. Weighted iff the model carries costs.
SolveReport Solve(const ProperIntervalModel& model, Engine engine, const SolveOptions& options,
                  bool with_stats, int brute_cap);

struct SelftestConfig {
  bool quick = false;
  std::uint64_t seed = 1;
  Fault fault = Fault::kNone;
};

struct SelftestOutcome {
  bool passed = true;
  int instances = 0;
  long checks = 0;
  std::string failure;  // first failing check, with its instance
};

// Randomized agreement of the three engines plus the module invariants.
SelftestOutcome RunSelftest(const SelftestConfig& config, std::ostream& log);

// Entry point shared by the executable and the tests.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pikdom::cli
