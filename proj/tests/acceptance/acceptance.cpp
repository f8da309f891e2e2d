// Acceptance gate. One PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pikdom/fast_solver.hpp"
#include "pikdom/oracle.hpp"
#include "pikdom/reduction.hpp"
#include "test_support.hpp"

using namespace pikdom;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  long checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void Expect(bool cond, const std::function<std::string()>& what) {
    ++checks;
    if (cond) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what());
  }
};

struct Instance {
  std::uint64_t seed;
  ProperIntervalModel plain;
  ProperIntervalModel priced;  // integer costs in [0, 10]
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Show(const std::optional<Cost>& c) { return c ? FormatRational(*c) : "inf"; }

std::string Label(const Instance& inst, int k, Variant v, bool weighted) {
  std::ostringstream out;
  out << "seed=" << inst.seed << " n=" << inst.plain.size() << " k=" << k
      << " variant=" << VariantName(v) << (weighted ? " weighted" : "");
  return out.str();
}

Cost SetCost(const ProperIntervalModel& model, const VertexSet& set, bool weighted) {
  Cost total = 0;
  for (int v : set.members()) total += weighted ? model.cost(model.sorted_index(v)) : Cost(1);
  return total;
}

SolveOptions Options(int k, Variant v, bool weighted) {
  SolveOptions o;
  o.k = k;
  o.variant = v;
  o.weighted = weighted;
  return o;
}

// 33 models per n in [4, 14]; stretch cycles from sparse to nearly complete.
std::vector<Instance> BuildCorpus() {
  std::vector<Instance> corpus;
  for (int n = 4; n <= 14; ++n) {
    for (int j = 0; j < 33; ++j) {
      const std::uint64_t seed = 20261016ULL + 1000ULL * n + j;
      static const int kHalves[] = {3, 4, 6, 8, 10, 12, 14, 16, 20, 24, 28};
      const Rational stretch(kHalves[j % 11], 2);
      auto plain = GenerateRandom(n, seed, stretch);
      auto priced = WithRandomCosts(plain, seed, 10);
      corpus.push_back({seed, std::move(plain), std::move(priced)});
    }
  }
  return corpus;
}

struct CorpusVerdicts {
  Verdict agreement, feasibility, components, weighted, order;
  long runs = 0;
  long total_runs = 0;
  long total_feasible = 0;
};

// Criteria 1, 2, 3, 5 and 6 over one corpus (or a slice of it).
void RunCorpus(const std::vector<Instance>& corpus, CorpusVerdicts& out) {
  for (const auto& inst : corpus) {
    const int n = inst.plain.size();
    const auto graph = DeriveGraph(inst.plain);
    const int min_degree = MinDegree(graph);
    std::vector<Cost> ones(n, Cost(1));
    const auto unit = inst.plain.WithCosts(ones);

    for (int k = 1; k <= 3; ++k) {
      for (const Variant v : {Variant::kKDom, Variant::kTotal}) {
        for (const bool weighted : {false, true}) {
          const auto& model = weighted ? inst.priced : inst.plain;
          const auto opts = Options(k, v, weighted);
          const Solution sols[3] = {BruteForceMin(model, k, v, weighted, 14),
                                    SolveNaive(model, opts), SolveFast(model, opts)};
          ++out.runs;
          if (v == Variant::kTotal) {
            ++out.total_runs;
            if (sols[0].feasible) ++out.total_feasible;
          }
          const auto label = [&] { return Label(inst, k, v, weighted); };
          for (const auto& s : sols) {
            out.agreement.Expect(s.cost == sols[0].cost, [&] {
              return label() + ": " + std::string(EngineName(s.engine)) + "=" + Show(s.cost) +
                     " brute=" + Show(sols[0].cost);
            });
            if (s.feasible) {
              out.agreement.Expect(!FirstViolation(graph, s.set, k, v) &&
                                       SetCost(model, s.set, weighted) == *s.cost,
                                   [&] { return label() + ": bad set from " +
                                                std::string(EngineName(s.engine)); });
            }
            if (v == Variant::kTotal) {
              out.feasibility.Expect(s.feasible == (min_degree >= k), [&] {
                return label() + ": " + std::string(EngineName(s.engine)) + " feasible=" +
                       (s.feasible ? "yes" : "no") + " min_degree=" + std::to_string(min_degree);
              });
              if (s.feasible) {
                out.components.Expect(CheckComponentSizes(graph, s.set, k), [&] {
                  return label() + ": small component from " + std::string(EngineName(s.engine));
                });
              }
            }
          }
        }

        // unit costs and integer scaling
        const auto plain_cost = SolveFast(inst.plain, Options(k, v, false)).cost;
        const Solution unit_sols[3] = {BruteForceMin(unit, k, v, true, 14),
                                       SolveNaive(unit, Options(k, v, true)),
                                       SolveFast(unit, Options(k, v, true))};
        for (const auto& s : unit_sols) {
          out.weighted.Expect(s.cost == plain_cost, [&] {
            return Label(inst, k, v, true) + ": unit-cost " + std::string(EngineName(s.engine)) +
                   "=" + Show(s.cost) + " unweighted=" + Show(plain_cost);
          });
        }
        const auto base_cost = SolveFast(inst.priced, Options(k, v, true)).cost;
        for (const std::int64_t lambda : {2, 3, 7}) {
          std::vector<Cost> scaled = *inst.priced.OriginalCosts();
          for (auto& c : scaled) c *= Cost(lambda);
          const auto model = inst.plain.WithCosts(scaled);
          for (const auto& got : {SolveFast(model, Options(k, v, true)).cost,
                                  SolveNaive(model, Options(k, v, true)).cost}) {
            const auto want = base_cost ? std::optional<Cost>(*base_cost * Cost(lambda))
                                        : std::nullopt;
            out.weighted.Expect(got == want, [&] {
              return Label(inst, k, v, true) + ": lambda=" + std::to_string(lambda) + " got " +
                     Show(got) + " want " + Show(want);
            });
          }
        }

        if (n <= 12) {
          const auto dag = BuildDigraph(inst.plain, Options(k, v, false));
          const auto fast = SolveFastDetailed(inst.plain, Options(k, v, false));
          std::vector<int> position(dag.nodes.size(), -1);
          for (std::size_t i = 0; i < fast.order.size(); ++i) position.at(fast.order[i]) = i;
          bool complete = fast.order.size() == dag.nodes.size();
          for (int p : position) complete = complete && p >= 0;
          out.order.Expect(complete, [&] { return Label(inst, k, v, false) + ": order size"; });
          for (const auto& arc : dag.arcs) {
            out.order.Expect(position[arc.tail] < position[arc.head], [&] {
              return Label(inst, k, v, false) + ": arc " + std::to_string(arc.tail) + "->" +
                     std::to_string(arc.head) + " goes backwards";
            });
          }
          out.order.Expect(RepresentativeIndependenceCheck(inst.plain, k, v), [&] {
            return Label(inst, k, v, false) + ": representative check";
          });
        }
      }
    }
  }
}

Verdict Cliques() {
  Verdict v;
  for (int k = 1; k <= 4; ++k) {
    for (int n = k + 1; n <= 10; ++n) {
      const auto model = CliqueModel(n);
      for (const Variant variant : {Variant::kKDom, Variant::kTotal}) {
        const Cost want = variant == Variant::kKDom ? k : k + 1;
        const auto opts = Options(k, variant, false);
        for (const auto& s : {BruteForceMin(model, k, variant, false), SolveNaive(model, opts),
                              SolveFast(model, opts)}) {
          v.Expect(s.cost == want, [&] {
            return "K_" + std::to_string(n) + " k=" + std::to_string(k) + " " +
                   std::string(VariantName(variant)) + " " + std::string(EngineName(s.engine)) +
                   "=" + Show(s.cost);
          });
        }
      }
    }
  }
  return v;
}

Verdict Complexity() {
  Verdict v;
  std::ostringstream note;
  const auto run = [&](int n, int k, Variant variant, const Rational& stretch, double limit) {
    const auto model = GenerateRandom(n, 7000 + n + k, stretch);
    const auto start = Clock::now();
    const auto result = SolveFastDetailed(model, Options(k, variant, false));
    const double secs = Seconds(start);
    const auto& st = result.stats;
    const std::size_t bound = (st.small + st.big + 2) * st.classes;
    note << " n=" << n << "/k=" << k << "/" << VariantName(variant) << "/s=" << stretch << ":"
         << secs << "s," << (st.small + st.big) << " nodes";
    v.Expect(secs < limit, [&] { return "n=" + std::to_string(n) + " took " +
                                        std::to_string(secs) + "s"; });
    v.Expect(st.representative_tests <= bound, [&] {
      return "n=" + std::to_string(n) + " representative tests " +
             std::to_string(st.representative_tests) + " > " + std::to_string(bound);
    });
    // cross-check the optimum where the naive engine is cheap enough
    {
      v.Expect(SolveNaive(model, Options(k, variant, false)).cost == result.solution.cost,
               [&] { return "n=" + std::to_string(n) + " naive disagrees"; });
    }
  };
  for (const Variant variant : {Variant::kKDom, Variant::kTotal}) {
    run(200, 1, variant, Rational(4), 30.0);
    run(200, 1, variant, Rational(12), 30.0);
    run(20, 2, variant, Rational(6), 60.0);
    run(20, 2, variant, Rational(14), 60.0);
  }
  v.note = note.str();
  return v;
}

// 8-interval models consistent with the worked instance's description:
// total 2-domination optimum 5, unique optimal set {2,3,5,6,7}, unique
// shortest path Source, 2356, 3567, Sink.
Verdict WorkedExample() {
  Verdict v;
  const std::vector<std::vector<int>> reaches = {
      {3, 5, 5, 5, 7, 8, 8, 8}, {3, 5, 5, 6, 7, 8, 8, 8}, {3, 5, 6, 6, 7, 8, 8, 8}};
  for (const auto& reach : reaches) {
    const auto model = testing::ReachModel(reach);
    const auto opts = Options(2, Variant::kTotal, false);
    const VertexSet want({2, 3, 5, 6, 7});
    for (const auto& s :
         {BruteForceMin(model, 2, Variant::kTotal, false), SolveNaive(model, opts),
          SolveFast(model, opts)}) {
      v.Expect(s.cost == Cost(5) && s.set == want,
               [&] { return std::string(EngineName(s.engine)) + " wrong optimum"; });
    }
    // uniqueness of the optimal set, by exhaustion
    const auto graph = DeriveGraph(model);
    int optimal = 0;
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
      std::vector<int> members;
      for (int i = 0; i < 8; ++i) if (mask >> i & 1u) members.push_back(i + 1);
      if (members.size() == 5 && IsTotalKDominating(graph, VertexSet(members), 2)) ++optimal;
      v.Expect(members.size() >= 5 || !IsTotalKDominating(graph, VertexSet(members), 2),
               [&] { return "set smaller than 5 dominates"; });
    }
    v.Expect(optimal == 1, [&] { return std::to_string(optimal) + " optimal sets"; });

    // count shortest Source-Sink paths in the full digraph
    const auto dag = BuildDigraph(model, opts);
    const int count = static_cast<int>(dag.nodes.size());
    std::vector<std::optional<Cost>> dist(count);
    std::vector<long> ways(count, 0);
    std::vector<std::vector<const DagArc*>> in(count);
    for (const auto& arc : dag.arcs) in[arc.head].push_back(&arc);
    dist[dag.source()] = 0;
    ways[dag.source()] = 1;
    for (int id : SolveFastDetailed(model, opts).order) {
      for (const DagArc* arc : in[id]) {
        if (!dist[arc->tail]) continue;
        const Cost d = *dist[arc->tail] + arc->length;
        if (!dist[id] || d < *dist[id]) {
          dist[id] = d;
          ways[id] = ways[arc->tail];
        } else if (d == *dist[id]) {
          ways[id] += ways[arc->tail];
        }
      }
    }
    v.Expect(dist[dag.sink()] == Cost(5) && ways[dag.sink()] == 1,
             [&] { return "shortest path not unique"; });
    const auto path = SolveFastDetailed(model, opts).path;
    std::vector<NodeSeq> seqs;
    for (const auto& node : path) seqs.push_back(node.seq);
    v.Expect(seqs == std::vector<NodeSeq>{{0}, {2, 3, 5, 6}, {3, 5, 6, 7}, {9}},
             [&] { return "unexpected path"; });
  }
  return v;
}

Verdict E1Amendment() {
  Verdict v;
  int instances = 0;
  int head_min_mismatches = 0;
  for (std::uint64_t seed = 1; instances < 60; ++seed) {
    const int n = 6 + static_cast<int>(seed % 7);
    const auto model = WithRandomCosts(GenerateRandom(n, 90000 + seed, Rational(5, 2)), seed, 10);
    std::set<Cost> distinct;
    for (int i = 1; i <= n; ++i) distinct.insert(model.cost(i));
    if (distinct.size() < 2) continue;
    ++instances;
    for (int k = 1; k <= 3; ++k) {
      for (const Variant variant : {Variant::kKDom, Variant::kTotal}) {
        const auto oracle = BruteForceMin(model, k, variant, true).cost;
        auto opts = Options(k, variant, true);
        for (const auto& got : {SolveFast(model, opts).cost, SolveNaive(model, opts).cost}) {
          v.Expect(got == oracle, [&] {
            return "seed=" + std::to_string(seed) + " k=" + std::to_string(k) + " amended " +
                   Show(got) + " oracle " + Show(oracle);
          });
        }
        opts.e1_rule = E1CostRule::kHeadMin;
        if (SolveNaive(model, opts).cost != oracle) ++head_min_mismatches;
      }
    }
  }
  v.Expect(head_min_mismatches > 0, [] { return "head-min rule never disagreed"; });
  v.note = " instances=" + std::to_string(instances) +
           " head-min disagreements=" + std::to_string(head_min_mismatches);
  return v;
}

bool Report(int id, const std::string& name, const Verdict& v, double secs) {
  std::cout << "criterion " << id << " [" << name << "]: " << (v.ok ? "PASS" : "FAIL") << " ("
            << v.checks << " checks, " << secs << "s" << v.note << ")\n";
  for (const auto& f : v.failures) std::cout << "    " << f << "\n";
  return v.ok;
}

}  // namespace

int main() {
  bool all = true;
  auto start = Clock::now();
  const auto corpus = BuildCorpus();
  CorpusVerdicts cv;
  RunCorpus(corpus, cv);
  const double corpus_secs = Seconds(start);
  cv.agreement.note = ", " + std::to_string(corpus.size()) + " models, " +
                      std::to_string(cv.runs) + " solver configurations";
  all &= Report(1, "three-engine agreement", cv.agreement, corpus_secs);
  cv.feasibility.note = ", " + std::to_string(cv.total_feasible) + " of " +
                        std::to_string(cv.total_runs) + " total-variant runs feasible";
  all &= Report(2, "feasibility characterization", cv.feasibility, corpus_secs);
  all &= Report(3, "component size", cv.components, corpus_secs);

  start = Clock::now();
  const auto cliques = Cliques();
  all &= Report(4, "clique closed forms", cliques, Seconds(start));
  all &= Report(5, "weighted consistency", cv.weighted, corpus_secs);
  all &= Report(6, "suffix order validity", cv.order, corpus_secs);

  start = Clock::now();
  const auto complexity = Complexity();
  all &= Report(7, "complexity trend", complexity, Seconds(start));

  // Coordinates of the original 8-interval instance are not available, so this
  // runs on the n = 8 slice of the corpus, with the reconstructions on top.
  start = Clock::now();
  std::vector<Instance> eight;
  for (const auto& inst : corpus) if (inst.plain.size() == 8) eight.push_back(inst);
  CorpusVerdicts ev;
  RunCorpus(eight, ev);
  Verdict example = WorkedExample();
  for (const Verdict* part : {&ev.agreement, &ev.feasibility, &ev.components}) {
    example.ok = example.ok && part->ok;
    example.checks += part->checks;
    example.failures.insert(example.failures.end(), part->failures.begin(), part->failures.end());
  }
  example.note = ", n=8 slice of " + std::to_string(eight.size()) + " models + 3 reconstructions";
  all &= Report(8, "worked example", example, Seconds(start));

  start = Clock::now();
  const auto e1 = E1Amendment();
  all &= Report(9, "E1 weighted length", e1, Seconds(start));

  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
