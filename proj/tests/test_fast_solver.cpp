#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pikdom/errors.hpp"
#include "pikdom/fast_solver.hpp"
#include "pikdom/oracle.hpp"
#include "test_support.hpp"

using namespace pikdom;
using pikdom::testing::ChainModel;
using pikdom::testing::MakeModel;
using pikdom::testing::ReachModel;

namespace {

DagNode Big(NodeSeq seq, int id = 0) { return {NodeKind::kBig, std::move(seq), id}; }
DagNode Small(NodeSeq seq, int id = 0) { return {NodeKind::kSmall, std::move(seq), id}; }

SolveOptions Options(int k, Variant variant, bool weighted = false) {
  SolveOptions o;
  o.k = k;
  o.variant = variant;
  o.weighted = weighted;
  return o;
}

}  // namespace

TEST_CASE("compute_b_prime") {
  SUBCASE("k=1: every big node qualifies") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto model = GenerateRandom(9, seed, Rational(3));
      const ReductionContext ctx(model, 1, Variant::kTotal);
      const auto nodes = EnumerateNodes(ctx);
      const auto bprime = ComputeBPrime(ctx, nodes);
      const auto bigs = std::count_if(nodes.begin(), nodes.end(), [](const DagNode& d) { return d.is_big(); });
      CHECK(static_cast<long>(bprime.size()) == bigs);
    }
  }
  SUBCASE("k=2, total: tail of three must pairwise meet") {
    // 3, 5, 6 pairwise meet here: I_3 reaches 6.
    const auto model = ReachModel({3, 5, 6, 6, 7, 8, 8, 8});
    const ReductionContext ctx(model, 2, Variant::kTotal);
    CHECK(model.intersects(3, 5));
    CHECK(model.intersects(3, 6));
    CHECK(model.intersects(5, 6));
    const auto nodes = EnumerateNodes(ctx);
    const auto it = std::find_if(nodes.begin(), nodes.end(),
                                 [](const DagNode& d) { return d.seq == NodeSeq{2, 3, 5, 6}; });
    REQUIRE(it != nodes.end());
    const auto bprime = ComputeBPrime(ctx, nodes);
    CHECK(std::find(bprime.begin(), bprime.end(), it->id) != bprime.end());
  }
  SUBCASE("k=2, total: P_4's tail (2,3,4) has 2 and 4 apart") {
    const auto path = ChainModel(4);
    const ReductionContext ctx(path, 2, Variant::kTotal);
    CHECK(ctx.IsBig(NodeSeq{1, 2, 3, 4}));
    CHECK_FALSE(path.intersects(2, 4));
    CHECK_FALSE(ctx.TailCondition(Big({1, 2, 3, 4})));
    // [0,2] [1,4] [3,5] [3.5,6]: tail (2,3,4) pairwise meets, I_1 and I_3 do not.
    const auto meets = MakeModel({{"0", "2"}, {"1", "4"}, {"3", "5"}, {"3.5", "6"}});
    const ReductionContext ctx2(meets, 2, Variant::kTotal);
    CHECK(ctx2.IsBig(NodeSeq{1, 2, 3, 4}));
    CHECK(ctx2.TailCondition(Big({1, 2, 3, 4})));
  }
}

TEST_CASE("suffix_partition") {
  SUBCASE("distinct suffixes give singleton classes") {
    const std::vector<DagNode> nodes{Big({1, 2}, 0), Big({2, 3}, 1), Big({3, 4}, 2)};
    const std::vector<int> members{0, 1, 2};
    const auto classes = SuffixPartition(nodes, members, 1);
    REQUIRE(classes.size() == 3);
    for (const auto& c : classes) CHECK(c.members.size() == 1);
  }
  SUBCASE("shared last two indices") {
    const std::vector<DagNode> nodes{Big({1, 3, 4, 5}, 0), Big({2, 3, 4, 5}, 1)};
    const std::vector<int> members{0, 1};
    const auto classes = SuffixPartition(nodes, members, 2);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].key == NodeSeq{4, 5});
    CHECK(classes[0].members == std::vector<int>{0, 1});
  }
  SUBCASE("empty") {
    CHECK(SuffixPartition(std::vector<DagNode>{}, std::vector<int>{}, 2).empty());
  }
  SUBCASE("short kdom nodes keep their whole sequence") {
    CHECK(KSuffix(Small({4}), 3) == NodeSeq{4});
    CHECK(KSuffix(Small({1, 4, 5}), 2) == NodeSeq{4, 5});
  }
}

TEST_CASE("topo_order") {
  SUBCASE("two overlapping intervals") {
    const auto nodes = EnumerateNodes(MakeModel({{"0", "2"}, {"1", "3"}}), 1, Variant::kTotal);
    CHECK(TopoOrder(nodes, 1) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("E1 pair") {
    const std::vector<DagNode> nodes{
        {NodeKind::kSource, {0}, 0}, Big({2, 3}, 1), Big({1, 2}, 2), {NodeKind::kSink, {4}, 3}};
    CHECK(TopoOrder(nodes, 1) == std::vector<int>{0, 2, 1, 3});
  }
  SUBCASE("every arc of the explicit digraph goes forward") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto model = GenerateRandom(4 + static_cast<int>(seed % 7), seed, Rational(5, 2));
      for (const int k : {1, 2}) {
        for (const Variant v : {Variant::kTotal, Variant::kKDom}) {
          const auto dag = BuildDigraph(model, Options(k, v));
          const auto order = TopoOrder(dag.nodes, k);
          std::vector<int> pos(order.size());
          for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
          for (const auto& arc : dag.arcs) CHECK(pos[arc.tail] < pos[arc.head]);
        }
      }
    }
  }
}

TEST_CASE("solve_fast") {
  SUBCASE("two overlapping intervals") {
    const auto result = SolveFastDetailed(MakeModel({{"0", "2"}, {"1", "3"}}), Options(1, Variant::kTotal));
    CHECK(*result.solution.cost == Cost(2));
    CHECK(result.solution.set == VertexSet({1, 2}));
    CHECK(result.solution.engine == Engine::kFast);
    REQUIRE(result.path.size() == 3);
    CHECK(result.path[1].seq == NodeSeq{1, 2});
  }
  SUBCASE("K_5, total, k=2") {
    const auto sol = SolveFast(CliqueModel(5), Options(2, Variant::kTotal));
    CHECK(*sol.cost == Cost(3));
  }
  SUBCASE("infeasible total instance") {
    const auto sol = SolveFast(MakeModel({{"0", "2"}, {"1", "3"}, {"5", "6"}}), Options(1, Variant::kTotal));
    CHECK_FALSE(sol.feasible);
    CHECK_FALSE(sol.cost.has_value());
  }
  SUBCASE("budget") {
    SolveOptions o = Options(2, Variant::kKDom);
    o.node_cap = 5;
    CHECK_THROWS_AS(SolveFast(ChainModel(10), o), Error);
  }
}

TEST_CASE("three-engine agreement and DP invariants") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const auto base = GenerateRandom(n, seed * 7 + 1, Rational(3 + static_cast<int>(seed % 5), 2));
    const auto weighted = WithRandomCosts(base, seed, 10);
    const auto graph = DeriveGraph(base);
    for (const int k : {1, 2}) {
      for (const Variant v : {Variant::kTotal, Variant::kKDom}) {
        for (const bool w : {false, true}) {
          const auto& model = w ? weighted : base;
          const auto brute = BruteForceMin(model, k, v, w);
          const auto naive = SolveNaiveDetailed(model, Options(k, v, w));
          const auto fast = SolveFastDetailed(model, Options(k, v, w));
          REQUIRE(fast.solution.feasible == brute.feasible);
          REQUIRE(naive.solution.feasible == brute.feasible);
          const std::size_t eligible_and_rest = fast.stats.small + fast.stats.big;
          CHECK(fast.stats.representative_tests <= eligible_and_rest * fast.stats.classes);
          if (!brute.feasible) continue;
          CHECK(*fast.solution.cost == *brute.cost);
          CHECK(*naive.solution.cost == *brute.cost);
          CHECK(FirstViolation(graph, fast.solution.set, k, v) == std::nullopt);

          // The reconstructed path is a genuine path of the digraph.
          const ReductionContext ctx(model, k, v);
          Cost length(0);
          for (std::size_t i = 0; i + 1 < fast.path.size(); ++i) {
            const auto& a = fast.path[i];
            const auto& b = fast.path[i + 1];
            const bool e0 = ctx.IsE0(a, b);
            const bool e1 = IsE1(k, a, b);
            CHECK((e0 || e1));
            length += ctx.ArcLength(a, b, e0 ? ArcClass::kE0 : ArcClass::kE1, w);
          }
          CHECK(length == *fast.solution.cost);
        }
      }
    }
  }
}

TEST_CASE("representative_independence_check") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto model = GenerateRandom(4 + static_cast<int>(seed % 7), seed + 500, Rational(3));
    for (const int k : {1, 2}) {
      CHECK(RepresentativeIndependenceCheck(model, k, Variant::kTotal));
      CHECK(RepresentativeIndependenceCheck(model, k, Variant::kKDom));
    }
  }
  // All singleton classes: P_3 with k=1 total has big nodes (1,2), (2,3).
  CHECK(RepresentativeIndependenceCheck(ChainModel(3), 1, Variant::kTotal));
  try {
    RepresentativeIndependenceCheck(ChainModel(13), 1, Variant::kTotal);
    FAIL("expected E_TOO_LARGE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
}

TEST_CASE("weighted E1 rule") {
  // Unit costs: both rules agree with the unweighted count.
  const auto model = GenerateRandom(10, 3, Rational(3));
  const auto unit = model.WithCosts(std::vector<Cost>(10, Cost(1)));
  SolveOptions o = Options(1, Variant::kTotal, true);
  const auto plain = SolveFast(model, Options(1, Variant::kTotal));
  CHECK(*SolveFast(unit, o).cost == *plain.cost);
  o.e1_rule = E1CostRule::kHeadMin;
  CHECK(*SolveFast(unit, o).cost == *plain.cost);
}
