#pragma once

#include <optional>

#include "pikdom/interval_model.hpp"
#include "pikdom/solution.hpp"

namespace pikdom {

// Ground-truth predicates. Graph and set share one numbering; members outside
// 1..n raise E_INDEX.
bool IsKDominating(const DerivedGraph& graph, const VertexSet& set, int k);
bool IsTotalKDominating(const DerivedGraph& graph, const VertexSet& set, int k);

// Smallest vertex that violates the variant's domination requirement.
std::optional<int> FirstViolation(const DerivedGraph& graph, const VertexSet& set, int k,
                                  Variant variant);

// Every component of graph[set] has at least k + 1 vertices. The set must be
// total k-dominating (E_PRECONDITION otherwise).
bool CheckComponentSizes(const DerivedGraph& graph, const VertexSet& set, int k);

inline constexpr int kDefaultBruteCap = 20;

// Exhaustive minimum over all 2^n subsets, original numbering. Ties go to the
// smaller cardinality, then to the lexicographically smaller member list.
// Throws E_TOO_LARGE when n > cap.
Solution BruteForceMin(const ProperIntervalModel& model, int k, Variant variant,
                       bool weighted, int cap = kDefaultBruteCap);

}  // namespace pikdom
