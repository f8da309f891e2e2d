#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pikdom/reduction.hpp"

namespace pikdom {

// Last min(k, q) indices of a node's sequence. Nodes shorter than k (only
// possible for k-domination) are keyed by their whole sequence.
NodeSeq KSuffix(const DagNode& node, int k);

// Nodes of S ∪ B' sharing one k-suffix. No arc joins two members.
struct SuffixClass {
  NodeSeq key;
  std::vector<int> members;      // node ids, increasing
  std::optional<Cost> best;      // min p over members once finalized
  int best_node = -1;
  bool finalized = false;
};

// Big nodes that satisfy the tail-side E0 condition, i.e. may start an E0 arc.
std::vector<int> ComputeBPrime(const ReductionContext& ctx, std::span<const DagNode> nodes);

// Groups `members` (ids into `nodes`) by k-suffix; classes ordered by key.
std::vector<SuffixClass> SuffixPartition(std::span<const DagNode> nodes,
                                         std::span<const int> members, int k);

// Source, then Small/Big nodes by (k-suffix, sequence), then Sink. Every arc
// of the derived digraph goes forward in this order.
std::vector<int> TopoOrder(std::span<const DagNode> nodes, int k);

struct FastStats {
  std::size_t small = 0;
  std::size_t big = 0;
  std::size_t big_prime = 0;
  std::size_t classes = 0;
  std::size_t e1_arcs = 0;
  std::size_t representative_tests = 0;  // E0 tests of a class representative
  std::size_t source_tests = 0;          // explicit (Source, s) tests
  std::size_t sink_tests = 0;            // explicit (s, Sink) tests
};

struct FastResult {
  Solution solution;
  std::vector<DagNode> path;  // Source..Sink; empty when infeasible
  std::vector<int> order;     // processing order (node ids)
  FastStats stats;
};

// Suffix-partition dynamic program. E0 arcs are never materialized except
// those leaving Source or entering Sink; for every other node, the best E0
// predecessor is found by testing one representative per finished suffix
// class.
FastResult SolveFastDetailed(const ProperIntervalModel& model, const SolveOptions& options);
Solution SolveFast(const ProperIntervalModel& model, const SolveOptions& options);

// Diagnostic: for every suffix class and every node t, either all class
// members have an E0 arc to t or none does. Throws E_TOO_LARGE for n > max_n.
bool RepresentativeIndependenceCheck(const ProperIntervalModel& model, int k, Variant variant,
                                     int max_n = 12);

}  // namespace pikdom
