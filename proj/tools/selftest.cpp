#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "pikdom/fast_solver.hpp"
#include "pikdom/oracle.hpp"
#include "pikdom/reduction.hpp"

namespace pikdom::cli {
namespace {

std::string Describe(const ProperIntervalModel& model, int k, Variant variant, bool weighted,
                     const std::string& what) {
  std::ostringstream out;
  out << what << " (k=" << k << ", variant=" << VariantName(variant)
      << ", weighted=" << (weighted ? "yes" : "no") << ")\n--- instance ---\n"
      << SerializeModel(model);
  return out.str();
}

std::string CostText(const Solution& s) {
  return s.cost ? FormatRational(*s.cost) : std::string("infeasible");
}

}  // namespace

SelftestOutcome RunSelftest(const SelftestConfig& config, std::ostream& log) {
  SelftestOutcome outcome;
  const int count = config.quick ? 24 : 160;
  const auto fail = [&](const std::string& message) {
    outcome.passed = false;
    outcome.failure = message;
    return outcome;
  };

  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = config.seed * 1'000'003ULL + static_cast<std::uint64_t>(i);
    const int n = 4 + i % 9;
    const Rational stretch(2 + i % 5, 2);
    const auto base = GenerateRandom(n, seed, stretch);
    const auto priced = WithRandomCosts(base, seed, 10);
    const auto graph = DeriveGraph(base);
    ++outcome.instances;

    for (const int k : {1, 2}) {
      for (const Variant variant : {Variant::kKDom, Variant::kTotal}) {
        for (const bool weighted : {false, true}) {
          const auto& model = weighted ? priced : base;
          SolveOptions options;
          options.k = k;
          options.variant = variant;
          options.weighted = weighted;
          options.fault = config.fault;

          const Solution brute = BruteForceMin(model, k, variant, weighted);
          const Solution naive = SolveNaive(model, options);
          const Solution fast = SolveFast(model, options);
          outcome.checks += 3;
          if (brute.cost != naive.cost || brute.cost != fast.cost) {
            return fail(Describe(model, k, variant, weighted,
                                 "engine disagreement: brute=" + CostText(brute) +
                                     " naive=" + CostText(naive) + " fast=" + CostText(fast)));
          }
          if (variant == Variant::kTotal && fast.feasible != (MinDegree(graph) >= k)) {
            return fail(Describe(model, k, variant, weighted, "feasibility characterization"));
          }
          for (const Solution* s : {&naive, &fast}) {
            if (!s->feasible) continue;
            ++outcome.checks;
            if (FirstViolation(graph, s->set, k, variant)) {
              return fail(Describe(model, k, variant, weighted,
                                   std::string(EngineName(s->engine)) +
                                       " returned a non-dominating set"));
            }
            if (variant == Variant::kTotal && !CheckComponentSizes(graph, s->set, k)) {
              return fail(Describe(model, k, variant, weighted, "component smaller than k+1"));
            }
          }
        }
        if (config.fault == Fault::kNone && n <= 10) {
          ++outcome.checks;
          if (!RepresentativeIndependenceCheck(base, k, variant)) {
            return fail(Describe(base, k, variant, false, "representative dependence"));
          }
        }
      }
    }
    if (!config.quick && (i + 1) % 40 == 0) log << "  " << (i + 1) << '/' << count << " instances\n";
  }
  return outcome;
}

}  // namespace pikdom::cli
