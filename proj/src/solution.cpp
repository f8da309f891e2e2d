#include "pikdom/solution.hpp"

#include <algorithm>
#include <string>

#include "pikdom/errors.hpp"

namespace pikdom {

std::string_view VariantName(Variant v) { return v == Variant::kKDom ? "kdom" : "total"; }

std::string_view EngineName(Engine e) {
  switch (e) {
    case Engine::kBrute: return "brute";
    case Engine::kNaive: return "naive";
    case Engine::kFast: return "fast";
  }
  return "?";
}

Variant ParseVariant(std::string_view text) {
  if (text == "kdom") return Variant::kKDom;
  if (text == "total") return Variant::kTotal;
  throw Error(ErrorCode::kParam, "unknown variant '" + std::string(text) + "'");
}

Engine ParseEngine(std::string_view text) {
  if (text == "brute") return Engine::kBrute;
  if (text == "naive") return Engine::kNaive;
  if (text == "fast") return Engine::kFast;
  throw Error(ErrorCode::kParam, "unknown engine '" + std::string(text) + "'");
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::CheckRange(int n) const {
  for (int v : members_) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::kIndex,
                  "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
  }
}

}  // namespace pikdom
