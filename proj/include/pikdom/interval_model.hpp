#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pikdom/cost.hpp"

namespace pikdom {

// Closed interval [left, right] with left < right.
struct Interval {
  Rational left;
  Rational right;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted, containment-free family of closed intervals with optional
// non-negative vertex costs.
//
// Two numberings coexist. Algorithms work on the *sorted* order (1..n by
// increasing left endpoint, which for a proper model is also the order of the
// right endpoints). Callers see their *original* order (1..n as given on
// input); `original_index` and `sorted_index` translate between the two.
class ProperIntervalModel {
 public:
  ProperIntervalModel() = default;

  // Validates and sorts. Throws E_PARAM (degenerate interval), E_DUPLICATE,
  // E_NOT_PROPER or E_NEG_COST.
  static ProperIntervalModel FromIntervals(
      std::vector<Interval> intervals,
      std::optional<std::vector<Cost>> costs = std::nullopt);

  int size() const { return static_cast<int>(sorted_.size()); }
  bool has_costs() const { return has_costs_; }

  // Sorted numbering, 1-based.
  const Interval& interval(int i) const;
  // 1 when the model carries no costs.
  Cost cost(int i) const;

  int original_index(int sorted) const;
  int sorted_index(int original) const;

  // Closed-interval intersection in sorted numbering; intersects(i, i) holds.
  // Throws E_INDEX.
  bool intersects(int i, int j) const;

  // Largest sorted index j >= i with I_j meeting I_i, resp. smallest j <= i.
  int right_reach(int i) const;
  int left_reach(int i) const;

  // Same intervals with costs replaced (or dropped with nullopt).
  ProperIntervalModel WithCosts(std::optional<std::vector<Cost>> costs_in_original_order) const;

  // Intervals and costs in the caller's original order.
  std::vector<Interval> OriginalIntervals() const;
  std::optional<std::vector<Cost>> OriginalCosts() const;

  friend bool operator==(const ProperIntervalModel& a, const ProperIntervalModel& b);

 private:
  std::vector<Interval> sorted_;
  std::vector<Cost> costs_;         // sorted numbering, empty when unweighted
  std::vector<int> to_original_;    // sorted position -> original index (1-based)
  std::vector<int> to_sorted_;      // original position -> sorted index (1-based)
  std::vector<int> right_reach_;
  std::vector<int> left_reach_;
  bool has_costs_ = false;
};

// Simple undirected graph on vertices 1..n.
struct DerivedGraph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;  // adjacency[v - 1], sorted

  const std::vector<int>& neighbors(int v) const { return adjacency.at(v - 1); }
  bool adjacent(int u, int v) const;
};

// Instance text format: first line "n" or "n weighted", then n lines
// "left right" or "left right cost". '#' starts a comment; blank lines are
// ignored.
ProperIntervalModel ParseModel(std::string_view text);
ProperIntervalModel ReadModelFile(const std::string& path);

// Byte-stable rendering in original order; ParseModel(SerializeModel(m)) == m.
std::string SerializeModel(const ProperIntervalModel& model);

bool Intersects(const ProperIntervalModel& model, int i, int j);

// Intersection graph in the caller's original numbering.
DerivedGraph DeriveGraph(const ProperIntervalModel& model);

// Intersection graph in sorted numbering (what the engines see).
DerivedGraph DeriveSortedGraph(const ProperIntervalModel& model);

// Throws E_EMPTY for n = 0.
int MinDegree(const DerivedGraph& graph);

// n equal-length intervals [x, x + stretch] with strictly increasing integer
// left endpoints; successive gaps are drawn from {1, 2, 3} by a
// std::mt19937_64 stream seeded with `seed`. Throws E_PARAM for n < 1 or
// stretch <= 0.
ProperIntervalModel GenerateRandom(int n, std::uint64_t seed, const Rational& stretch);

// Attaches integer costs uniform in [0, max_cost], deterministic in seed.
ProperIntervalModel WithRandomCosts(const ProperIntervalModel& model, std::uint64_t seed,
                                    int max_cost);

// Model whose intersection graph is K_n.
ProperIntervalModel CliqueModel(int n);

}  // namespace pikdom
