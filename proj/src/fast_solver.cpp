#include "pikdom/fast_solver.hpp"

#include <algorithm>
#include <map>

#include "pikdom/errors.hpp"

namespace pikdom {

NodeSeq KSuffix(const DagNode& node, int k) {
  const int take = std::min(k, node.size());
  return NodeSeq(node.seq.end() - take, node.seq.end());
}

std::vector<int> ComputeBPrime(const ReductionContext& ctx, std::span<const DagNode> nodes) {
  std::vector<int> out;
  for (const DagNode& node : nodes) {
    if (node.is_big() && ctx.TailCondition(node)) out.push_back(node.id);
  }
  return out;
}

std::vector<SuffixClass> SuffixPartition(std::span<const DagNode> nodes,
                                         std::span<const int> members, int k) {
  std::map<NodeSeq, std::vector<int>> groups;
  for (int id : members) groups[KSuffix(nodes[id], k)].push_back(id);
  std::vector<SuffixClass> classes;
  classes.reserve(groups.size());
  for (auto& [key, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    SuffixClass cls;
    cls.key = key;
    cls.members = std::move(ids);
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> TopoOrder(std::span<const DagNode> nodes, int k) {
  std::vector<std::pair<NodeSeq, int>> keyed;
  int source = -1;
  int sink = -1;
  for (const DagNode& node : nodes) {
    if (node.kind == NodeKind::kSource) {
      source = node.id;
    } else if (node.kind == NodeKind::kSink) {
      sink = node.id;
    } else {
      keyed.emplace_back(KSuffix(node, k), node.id);
    }
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return nodes[a.second].seq < nodes[b.second].seq;
  });
  std::vector<int> order;
  order.reserve(nodes.size());
  if (source >= 0) order.push_back(source);
  for (const auto& entry : keyed) order.push_back(entry.second);
  if (sink >= 0) order.push_back(sink);
  return order;
}

FastResult SolveFastDetailed(const ProperIntervalModel& model, const SolveOptions& options) {
  const ReductionContext ctx(model, options.k, options.variant, options.fault);
  const int k = options.k;
  const std::vector<DagNode> nodes = EnumerateNodes(ctx, options.node_cap);
  const int count = static_cast<int>(nodes.size());
  const int source = 0;
  const int sink = count - 1;

  FastResult result;
  result.solution.engine = Engine::kFast;
  FastStats& stats = result.stats;

  std::vector<int> eligible;  // S ∪ B'
  for (const DagNode& node : nodes) {
    if (node.kind == NodeKind::kSmall) {
      ++stats.small;
      eligible.push_back(node.id);
    } else if (node.is_big()) {
      ++stats.big;
      if (ctx.TailCondition(node)) {
        ++stats.big_prime;
        eligible.push_back(node.id);
      }
    }
  }
  std::vector<SuffixClass> classes = SuffixPartition(nodes, eligible, k);
  stats.classes = classes.size();
  std::vector<int> class_of(count, -1);
  std::vector<std::size_t> remaining(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int id : classes[c].members) class_of[id] = static_cast<int>(c);
    remaining[c] = classes[c].members.size();
  }

  // E1 tails of a big node t are the big nodes whose last 2k-1 indices equal
  // the first 2k-1 of t.
  std::map<NodeSeq, std::vector<int>> big_by_tail;
  for (const DagNode& node : nodes) {
    if (node.is_big()) big_by_tail[NodeSeq(node.seq.begin() + 1, node.seq.end())].push_back(node.id);
  }

  result.order = TopoOrder(nodes, k);
  std::vector<std::optional<Cost>> p(count);
  std::vector<int> pred(count, -1);
  std::vector<int> finished;  // classes whose p_sigma is final
  p[source] = Cost(0);

  const DagNode& source_node = nodes[source];
  for (int id : result.order) {
    if (id == source || id == sink) continue;
    const DagNode& s = nodes[id];
    const Cost enter = ctx.ArcLengthUnchecked(s, ArcClass::kE0, options.weighted, options.e1_rule);

    // p0_s
    std::optional<Cost> p0;
    int pred0 = -1;
    ++stats.source_tests;
    if (ctx.IsE0(source_node, s)) {
      p0 = enter;
      pred0 = source;
    } else {
      for (int c : finished) {
        const SuffixClass& cls = classes[c];
        if (!cls.best) continue;
        if (p0 && !(*cls.best + enter < *p0)) continue;
        ++stats.representative_tests;
        if (ctx.IsE0(nodes[cls.members.front()], s)) {
          p0 = *cls.best + enter;
          pred0 = cls.best_node;
        }
      }
    }

    // p_e for incoming E1 arcs, then p_s.
    p[id] = p0;
    pred[id] = pred0;
    if (s.is_big()) {
      const auto it = big_by_tail.find(NodeSeq(s.seq.begin(), s.seq.end() - 1));
      if (it != big_by_tail.end()) {
        const Cost step = ctx.ArcLengthUnchecked(s, ArcClass::kE1, options.weighted, options.e1_rule);
        for (int tail : it->second) {
          ++stats.e1_arcs;
          if (!p[tail]) continue;
          const Cost pe = *p[tail] + step;
          if (!p[id] || pe < *p[id]) {
            p[id] = pe;
            pred[id] = tail;
          }
        }
      }
    }

    // p_sigma
    if (const int c = class_of[id]; c >= 0) {
      SuffixClass& cls = classes[c];
      if (cls.finalized) throw std::logic_error("suffix class updated after finalization");
      if (p[id] && (!cls.best || *p[id] < *cls.best)) {
        cls.best = p[id];
        cls.best_node = id;
      }
      if (--remaining[c] == 0) {
        cls.finalized = true;
        finished.push_back(c);
      }
    }
  }

  // Sink: explicit E0 in-arcs.
  const DagNode& sink_node = nodes[sink];
  for (int id = 0; id < sink; ++id) {
    if (!p[id]) continue;
    if (p[sink] && !(*p[id] < *p[sink])) continue;
    ++stats.sink_tests;
    if (ctx.IsE0(nodes[id], sink_node)) {
      p[sink] = p[id];
      pred[sink] = id;
    }
  }

  if (!p[sink]) return result;
  std::vector<int> ids;
  for (int v = sink; v != -1; v = pred[v]) ids.push_back(v);
  std::reverse(ids.begin(), ids.end());
  if (ids.front() != source) throw std::logic_error("predecessor chain does not reach Source");
  for (int v : ids) result.path.push_back(nodes[v]);
  result.solution.feasible = true;
  result.solution.cost = *p[sink];
  result.solution.set = PathToVertexSet(model, result.path);
  return result;
}

Solution SolveFast(const ProperIntervalModel& model, const SolveOptions& options) {
  return SolveFastDetailed(model, options).solution;
}

bool RepresentativeIndependenceCheck(const ProperIntervalModel& model, int k, Variant variant,
                                     int max_n) {
  if (model.size() > max_n) {
    throw Error(ErrorCode::kTooLarge, "representative check limited to n <= " + std::to_string(max_n));
  }
  const ReductionContext ctx(model, k, variant);
  const std::vector<DagNode> nodes = EnumerateNodes(ctx);
  std::vector<int> eligible;
  for (const DagNode& node : nodes) {
    if (node.kind == NodeKind::kSmall || (node.is_big() && ctx.TailCondition(node))) {
      eligible.push_back(node.id);
    }
  }
  for (const SuffixClass& cls : SuffixPartition(nodes, eligible, k)) {
    for (const DagNode& t : nodes) {
      if (t.kind == NodeKind::kSource) continue;
      const bool first = ctx.IsE0(nodes[cls.members.front()], t);
      for (int m : cls.members) {
        if (ctx.IsE0(nodes[m], t) != first) return false;
      }
    }
  }
  return true;
}

}  // namespace pikdom
