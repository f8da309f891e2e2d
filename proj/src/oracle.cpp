#include "pikdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "pikdom/errors.hpp"

namespace pikdom {
namespace {

int CountInside(const DerivedGraph& graph, const VertexSet& set, int v) {
  int count = 0;
  for (int u : graph.neighbors(v)) count += set.contains(u) ? 1 : 0;
  return count;
}

void CheckK(int k) {
  if (k < 1) throw Error(ErrorCode::kParam, "k must be positive");
}

}  // namespace

std::optional<int> FirstViolation(const DerivedGraph& graph, const VertexSet& set, int k,
                                  Variant variant) {
  CheckK(k);
  set.CheckRange(graph.n);
  for (int v = 1; v <= graph.n; ++v) {
    if (variant == Variant::kKDom && set.contains(v)) continue;
    if (CountInside(graph, set, v) < k) return v;
  }
  return std::nullopt;
}

bool IsKDominating(const DerivedGraph& graph, const VertexSet& set, int k) {
  return !FirstViolation(graph, set, k, Variant::kKDom).has_value();
}

bool IsTotalKDominating(const DerivedGraph& graph, const VertexSet& set, int k) {
  return !FirstViolation(graph, set, k, Variant::kTotal).has_value();
}

bool CheckComponentSizes(const DerivedGraph& graph, const VertexSet& set, int k) {
  if (!IsTotalKDominating(graph, set, k)) {
    throw Error(ErrorCode::kPrecondition, "set is not total k-dominating");
  }
  std::vector<char> seen(graph.n + 1, 0);
  for (int start : set.members()) {
    if (seen[start]) continue;
    int size = 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int u : graph.neighbors(v)) {
        if (!seen[u] && set.contains(u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    if (size < k + 1) return false;
  }
  return true;
}

Solution BruteForceMin(const ProperIntervalModel& model, int k, Variant variant, bool weighted,
                       int cap) {
  CheckK(k);
  const int n = model.size();
  if (n > cap || n > 30) {
    throw Error(ErrorCode::kTooLarge,
                "brute force limited to n <= " + std::to_string(std::min(cap, 30)));
  }
  const DerivedGraph graph = DeriveGraph(model);
  std::vector<std::uint32_t> adj(n, 0);
  std::vector<Cost> cost(n, Cost(1));
  for (int v = 1; v <= n; ++v) {
    for (int u : graph.neighbors(v)) adj[v - 1] |= 1u << (u - 1);
    if (weighted) cost[v - 1] = model.cost(model.sorted_index(v));
  }

  const auto feasible = [&](std::uint32_t subset) {
    for (int v = 0; v < n; ++v) {
      if (variant == Variant::kKDom && (subset >> v & 1u)) continue;
      if (std::popcount(adj[v] & subset) < k) return false;
    }
    return true;
  };

  Solution best;
  best.engine = Engine::kBrute;
  std::vector<int> best_members;
  std::vector<int> members;
  // Cardinality levels in increasing order; combinations within a level in
  // lexicographic order of their member lists.
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint32_t subset = 0;
      for (int p : pick) subset |= 1u << p;
      if (feasible(subset)) {
        Cost total(0);
        for (int p : pick) total += cost[p];
        members.assign(pick.begin(), pick.end());
        for (int& m : members) ++m;
        // Strictly lower cost wins; equal cost at equal size keeps the
        // earlier (lexicographically smaller) list.
        if (!best.feasible || total < *best.cost) {
          best.feasible = true;
          best.cost = total;
          best_members = members;
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    // With unit costs the first feasible level is optimal.
    if (best.feasible && !weighted) break;
  }
  if (best.feasible) best.set = VertexSet(best_members);
  return best;
}

}  // namespace pikdom
