#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pikdom/cost.hpp"

namespace pikdom {

enum class Variant { kKDom, kTotal };
enum class Engine { kBrute, kNaive, kFast };

std::string_view VariantName(Variant v);  // "kdom" / "total"
std::string_view EngineName(Engine e);    // "brute" / "naive" / "fast"
Variant ParseVariant(std::string_view text);
Engine ParseEngine(std::string_view text);

// Sorted, duplicate-free set of 1-based vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int cardinality() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;

  // Throws E_INDEX if some member lies outside 1..n.
  void CheckRange(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

struct Solution {
  VertexSet set;               // original numbering; empty when infeasible
  std::optional<Cost> cost;    // absent when infeasible
  bool feasible = false;
  Engine engine = Engine::kFast;
};

// Weighted length of an E1 arc (s, s'). kHeadMax charges the interval the
// arc adds, max(s'). kHeadMin charges min(s'), kept only to demonstrate that
// it miscounts on non-uniform costs.
enum class E1CostRule { kHeadMax, kHeadMin };

// Deliberate corruptions used by the self-test mutation check.
enum class Fault { kNone, kDropGapCondition };

struct SolveOptions {
  Variant variant = Variant::kTotal;
  int k = 1;
  bool weighted = false;
  E1CostRule e1_rule = E1CostRule::kHeadMax;
  Fault fault = Fault::kNone;
  std::uint64_t node_cap = 100'000'000;
  std::uint64_t arc_cap = 50'000'000;  // naive engine only
};

}  // namespace pikdom
