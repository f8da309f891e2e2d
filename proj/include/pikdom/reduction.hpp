#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pikdom/interval_model.hpp"
#include "pikdom/solution.hpp"

namespace pikdom {

// Increasing sequence of sorted interval indices. Source and Sink carry the
// dummy indices 0 and n + 1.
using NodeSeq = std::vector<int>;

enum class NodeKind { kSource, kSink, kSmall, kBig };
enum class ArcClass { kE0, kE1 };

std::string_view NodeKindName(NodeKind kind);
std::string_view ArcClassName(ArcClass cls);

struct DagNode {
  NodeKind kind = NodeKind::kSource;
  NodeSeq seq;
  int id = 0;

  int min() const { return seq.front(); }
  int max() const { return seq.back(); }
  int size() const { return static_cast<int>(seq.size()); }
  bool is_big() const { return kind == NodeKind::kBig; }
};

struct DagArc {
  int tail = 0;
  int head = 0;
  ArcClass cls = ArcClass::kE0;
  Cost length;
};

// Node and arc predicates of the derived digraph for one (model, k, variant).
//
// The model is extended by two dummy intervals, [a_1 - 2, a_1 - 1] at index 0
// and [b_n + 1, b_n + 2] at index n + 1; they meet no real interval.
class ReductionContext {
 public:
  ReductionContext(const ProperIntervalModel& model, int k, Variant variant,
                   Fault fault = Fault::kNone);

  const ProperIntervalModel& model() const { return *model_; }
  int n() const { return n_; }
  int k() const { return k_; }
  Variant variant() const { return variant_; }

  // Intersection over the extended index range 0..n+1.
  bool Meets(int i, int j) const;

  bool IsSmall(std::span<const int> seq) const;
  bool IsBig(std::span<const int> seq) const;

  DagNode Source() const;
  DagNode Sink() const;

  // E_0 membership, all four conditions. s must not be the Sink and t must
  // not be the Source; a Small/Big node whose length does not fit this
  // (k, variant) raises E_VARIANT_MISMATCH.
  bool IsE0(const DagNode& s, const DagNode& t) const;

  // Condition (3) alone: the tail-side requirement on a big node. True for
  // every other node kind. Defines B'.
  bool TailCondition(const DagNode& s) const;
  // Condition (4) alone: the head-side requirement on a big node.
  bool HeadCondition(const DagNode& t) const;
  // Conditions (1) and (2): the gap between max(s) and min(t).
  bool GapCondition(const DagNode& s, const DagNode& t) const;

  // Length of arc (s, t) of class cls. Throws E_NOT_ARC if (s, t) is not
  // such an arc.
  Cost ArcLength(const DagNode& s, const DagNode& t, ArcClass cls, bool weighted,
                 E1CostRule rule = E1CostRule::kHeadMax) const;

  // Length without re-validating the arc.
  Cost ArcLengthUnchecked(const DagNode& t, ArcClass cls, bool weighted,
                          E1CostRule rule) const;

 private:
  // Number of members of seq meeting interval `index`, not counting `index`
  // itself.
  int CountMeeting(std::span<const int> seq, int index) const;
  bool Contains(std::span<const int> seq, int index) const;
  bool ConsecutiveMeet(std::span<const int> seq) const;
  bool PairwiseMeet(std::span<const int> seq) const;
  // Every non-member strictly between seq[lo] and seq[hi] meets >= k members.
  bool OutsidersCovered(std::span<const int> seq, int lo, int hi) const;
  // Every interval in [seq[lo], seq[hi]] meets >= k other members.
  bool AllCovered(std::span<const int> seq, int lo, int hi) const;
  void CheckShape(const DagNode& node) const;

  const ProperIntervalModel* model_;
  int n_;
  int k_;
  Variant variant_;
  Fault fault_;
  std::vector<int> right_reach_;  // extended indices 0..n+1
  std::vector<int> left_reach_;
};

// E_1 membership: both big, t is s shifted left by one with one new interval
// appended.
bool IsE1(int k, const DagNode& s, const DagNode& t);

// Upper bound on node count: the number of consecutive-meeting increasing
// sequences of admissible length, plus Source and Sink. Saturates.
std::uint64_t ProjectedNodeCount(const ProperIntervalModel& model, int k, Variant variant);

// Source, all Small and Big nodes in lexicographic order of their sequences,
// then Sink; ids are positions in this list. Throws E_BUDGET when the
// projected count exceeds node_cap.
std::vector<DagNode> EnumerateNodes(const ReductionContext& ctx,
                                    std::uint64_t node_cap = 100'000'000);
std::vector<DagNode> EnumerateNodes(const ProperIntervalModel& model, int k, Variant variant,
                                    std::uint64_t node_cap = 100'000'000);

struct DerivedDigraph {
  Variant variant = Variant::kTotal;
  int k = 1;
  bool weighted = false;
  std::vector<DagNode> nodes;
  std::vector<DagArc> arcs;  // sorted by (tail, head)

  int source() const { return 0; }
  int sink() const { return static_cast<int>(nodes.size()) - 1; }
};

// Materializes every node and arc. Throws E_BUDGET past node_cap / arc_cap.
DerivedDigraph BuildDigraph(const ProperIntervalModel& model, const SolveOptions& options);

// Kahn check.
bool IsAcyclic(const DerivedDigraph& dag);

// One node per line ("id kind indices..."), then one arc per line
// ("tail head class length"). Indices are in sorted numbering.
std::string DumpDigraph(const DerivedDigraph& dag);

// Union of the intervals of the internal nodes of a Source -> Sink path, in
// original numbering. Throws E_NOT_PATH if the sequence does not start at
// Source, end at Sink and strictly advance max() along the way.
VertexSet PathToVertexSet(const ProperIntervalModel& model, std::span<const DagNode> path);

struct NaiveResult {
  Solution solution;
  std::vector<int> path;  // node ids, Source..Sink; empty when infeasible
  std::size_t nodes = 0;
  std::size_t arcs = 0;
};

// Explicit-digraph engine: shortest Source -> Sink path by dynamic programming
// over a topological order. Among shortest paths the lexicographically
// smallest node-id sequence is returned.
NaiveResult SolveNaiveDetailed(const ProperIntervalModel& model, const SolveOptions& options);
Solution SolveNaive(const ProperIntervalModel& model, const SolveOptions& options);

}  // namespace pikdom
