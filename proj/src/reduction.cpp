#include "pikdom/reduction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "pikdom/errors.hpp"

namespace pikdom {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kSource: return "source";
    case NodeKind::kSink: return "sink";
    case NodeKind::kSmall: return "small";
    case NodeKind::kBig: return "big";
  }
  return "?";
}

std::string_view ArcClassName(ArcClass cls) { return cls == ArcClass::kE0 ? "E0" : "E1"; }

ReductionContext::ReductionContext(const ProperIntervalModel& model, int k, Variant variant,
                                   Fault fault)
    : model_(&model), n_(model.size()), k_(k), variant_(variant), fault_(fault) {
  if (k < 1) throw Error(ErrorCode::kParam, "k must be positive");
  if (n_ < 1) throw Error(ErrorCode::kEmpty, "model has no intervals");

  std::vector<Interval> ext;
  ext.reserve(n_ + 2);
  const Rational first = model.interval(1).left;
  const Rational last = model.interval(n_).right;
  ext.push_back({first - 2, first - 1});
  for (int i = 1; i <= n_; ++i) ext.push_back(model.interval(i));
  ext.push_back({last + 1, last + 2});

  const int m = n_ + 2;
  right_reach_.resize(m);
  left_reach_.resize(m);
  int j = 0;
  for (int i = 0; i < m; ++i) {
    j = std::max(j, i);
    while (j + 1 < m && ext[j + 1].left <= ext[i].right) ++j;
    right_reach_[i] = j;
  }
  j = m - 1;
  for (int i = m - 1; i >= 0; --i) {
    j = std::min(j, i);
    while (j - 1 >= 0 && ext[i].left <= ext[j - 1].right) --j;
    left_reach_[i] = j;
  }
}

bool ReductionContext::Meets(int i, int j) const {
  if (i > j) std::swap(i, j);
  return j <= right_reach_[i];
}

int ReductionContext::CountMeeting(std::span<const int> seq, int index) const {
  const int lo = left_reach_[index];
  const int hi = right_reach_[index];
  int count = 0;
  for (int m : seq) count += (m != index && lo <= m && m <= hi) ? 1 : 0;
  return count;
}

bool ReductionContext::Contains(std::span<const int> seq, int index) const {
  return std::binary_search(seq.begin(), seq.end(), index);
}

bool ReductionContext::ConsecutiveMeet(std::span<const int> seq) const {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!Meets(seq[i], seq[i + 1])) return false;
  }
  return true;
}

bool ReductionContext::PairwiseMeet(std::span<const int> seq) const {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!Meets(seq[i], seq[j])) return false;
    }
  }
  return true;
}

bool ReductionContext::OutsidersCovered(std::span<const int> seq, int lo, int hi) const {
  for (int index = seq[lo] + 1; index < seq[hi]; ++index) {
    if (Contains(seq, index)) continue;
    if (CountMeeting(seq, index) < k_) return false;
  }
  return true;
}

bool ReductionContext::AllCovered(std::span<const int> seq, int lo, int hi) const {
  for (int index = seq[lo]; index <= seq[hi]; ++index) {
    if (CountMeeting(seq, index) < k_) return false;
  }
  return true;
}

bool ReductionContext::IsSmall(std::span<const int> seq) const {
  const int q = static_cast<int>(seq.size());
  const int min_q = variant_ == Variant::kTotal ? k_ + 1 : 1;
  if (q < min_q || q > 2 * k_ - 1) return false;
  if (seq.front() < 1 || seq.back() > n_ || !ConsecutiveMeet(seq)) return false;
  return variant_ == Variant::kTotal ? AllCovered(seq, 0, q - 1)
                                     : OutsidersCovered(seq, 0, q - 1);
}

bool ReductionContext::IsBig(std::span<const int> seq) const {
  if (static_cast<int>(seq.size()) != 2 * k_) return false;
  if (seq.front() < 1 || seq.back() > n_ || !ConsecutiveMeet(seq)) return false;
  return variant_ == Variant::kTotal ? AllCovered(seq, k_ - 1, k_)
                                     : OutsidersCovered(seq, k_ - 1, k_);
}

DagNode ReductionContext::Source() const { return {NodeKind::kSource, {0}, 0}; }

DagNode ReductionContext::Sink() const { return {NodeKind::kSink, {n_ + 1}, 0}; }

void ReductionContext::CheckShape(const DagNode& node) const {
  const int q = node.size();
  bool ok = true;
  switch (node.kind) {
    case NodeKind::kSource: ok = q == 1 && node.seq[0] == 0; break;
    case NodeKind::kSink: ok = q == 1 && node.seq[0] == n_ + 1; break;
    case NodeKind::kSmall:
      ok = q >= (variant_ == Variant::kTotal ? k_ + 1 : 1) && q <= 2 * k_ - 1;
      break;
    case NodeKind::kBig: ok = q == 2 * k_; break;
  }
  if (!ok) {
    throw Error(ErrorCode::kVariantMismatch,
                std::string(NodeKindName(node.kind)) + " node of length " + std::to_string(q) +
                    " does not belong to this digraph");
  }
}

bool ReductionContext::TailCondition(const DagNode& s) const {
  if (!s.is_big()) return true;
  const std::span<const int> seq(s.seq);
  if (variant_ == Variant::kTotal) return PairwiseMeet(seq.subspan(k_ - 1));
  return OutsidersCovered(seq, k_, 2 * k_ - 1);
}

bool ReductionContext::HeadCondition(const DagNode& t) const {
  if (!t.is_big()) return true;
  const std::span<const int> seq(t.seq);
  if (variant_ == Variant::kTotal) return PairwiseMeet(seq.first(k_ + 1));
  return OutsidersCovered(seq, 0, k_ - 1);
}

bool ReductionContext::GapCondition(const DagNode& s, const DagNode& t) const {
  const int left = s.max();
  const int right = t.min();
  if (left >= right || Meets(left, right)) return false;
  if (fault_ == Fault::kDropGapCondition) return true;
  for (int index = std::max(left + 1, 1); index < right && index <= n_; ++index) {
    if (CountMeeting(s.seq, index) + CountMeeting(t.seq, index) < k_) return false;
  }
  return true;
}

bool ReductionContext::IsE0(const DagNode& s, const DagNode& t) const {
  CheckShape(s);
  CheckShape(t);
  if (s.kind == NodeKind::kSink || t.kind == NodeKind::kSource) return false;
  return GapCondition(s, t) && TailCondition(s) && HeadCondition(t);
}

Cost ReductionContext::ArcLengthUnchecked(const DagNode& t, ArcClass cls, bool weighted,
                                          E1CostRule rule) const {
  if (cls == ArcClass::kE1) {
    if (!weighted) return Cost(1);
    return model_->cost(rule == E1CostRule::kHeadMax ? t.max() : t.min());
  }
  if (t.kind == NodeKind::kSink) return Cost(0);
  if (!weighted) return Cost(t.size());
  Cost total(0);
  for (int index : t.seq) total += model_->cost(index);
  return total;
}

Cost ReductionContext::ArcLength(const DagNode& s, const DagNode& t, ArcClass cls,
                                 bool weighted, E1CostRule rule) const {
  const bool is_arc = cls == ArcClass::kE0 ? IsE0(s, t) : IsE1(k_, s, t);
  if (!is_arc) {
    throw Error(ErrorCode::kNotArc,
                "pair is not an " + std::string(ArcClassName(cls)) + " arc");
  }
  return ArcLengthUnchecked(t, cls, weighted, rule);
}

bool IsE1(int k, const DagNode& s, const DagNode& t) {
  if (!s.is_big() || !t.is_big()) return false;
  if (s.size() != 2 * k || t.size() != 2 * k) return false;
  if (!std::equal(s.seq.begin() + 1, s.seq.end(), t.seq.begin())) return false;
  return t.seq.back() > s.seq.back();
}

std::uint64_t ProjectedNodeCount(const ProperIntervalModel& model, int k, Variant variant) {
  const int n = model.size();
  const int min_q = variant == Variant::kTotal ? k + 1 : 1;
  const int max_q = 2 * k;
  constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max() / 4;
  // chains[i] = number of consecutive-meeting increasing sequences of the
  // current length starting at i.
  std::vector<std::uint64_t> chains(n + 2, 1);
  std::uint64_t total = 2;
  for (int q = 1; q <= max_q; ++q) {
    if (q > 1) {
      std::vector<std::uint64_t> next(n + 2, 0);
      for (int i = n; i >= 1; --i) {
        std::uint64_t sum = 0;
        for (int j = i + 1; j <= model.right_reach(i); ++j) sum = std::min(kSat, sum + chains[j]);
        next[i] = sum;
      }
      chains = std::move(next);
    }
    if (q >= min_q) {
      for (int i = 1; i <= n; ++i) total = std::min(kSat, total + chains[i]);
    }
  }
  return total;
}

namespace {

void ExtendChains(const ReductionContext& ctx, NodeSeq& chain, std::vector<DagNode>& out) {
  const int q = static_cast<int>(chain.size());
  if (q == 2 * ctx.k()) {
    if (ctx.IsBig(chain)) {
      out.push_back({NodeKind::kBig, chain, static_cast<int>(out.size())});
    }
    return;
  }
  if (ctx.IsSmall(chain)) {
    out.push_back({NodeKind::kSmall, chain, static_cast<int>(out.size())});
  }
  const int last = chain.back();
  const int reach = ctx.model().right_reach(last);
  for (int next = last + 1; next <= reach; ++next) {
    chain.push_back(next);
    ExtendChains(ctx, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<DagNode> EnumerateNodes(const ReductionContext& ctx, std::uint64_t node_cap) {
  const std::uint64_t projected = ProjectedNodeCount(ctx.model(), ctx.k(), ctx.variant());
  if (projected > node_cap) {
    throw Error(ErrorCode::kBudget, "projected node count " + std::to_string(projected) +
                                        " exceeds cap " + std::to_string(node_cap));
  }
  std::vector<DagNode> nodes;
  nodes.push_back(ctx.Source());
  NodeSeq chain;
  for (int start = 1; start <= ctx.n(); ++start) {
    chain.assign(1, start);
    ExtendChains(ctx, chain, nodes);
  }
  DagNode sink = ctx.Sink();
  sink.id = static_cast<int>(nodes.size());
  nodes.push_back(std::move(sink));
  return nodes;
}

std::vector<DagNode> EnumerateNodes(const ProperIntervalModel& model, int k, Variant variant,
                                    std::uint64_t node_cap) {
  const ReductionContext ctx(model, k, variant);
  return EnumerateNodes(ctx, node_cap);
}

DerivedDigraph BuildDigraph(const ProperIntervalModel& model, const SolveOptions& options) {
  const ReductionContext ctx(model, options.k, options.variant, options.fault);
  DerivedDigraph dag;
  dag.variant = options.variant;
  dag.k = options.k;
  dag.weighted = options.weighted;
  dag.nodes = EnumerateNodes(ctx, options.node_cap);

  const int n = model.size();
  std::vector<std::vector<int>> by_min(n + 2);
  std::map<std::vector<int>, std::vector<int>> big_by_prefix;
  for (const DagNode& node : dag.nodes) {
    if (node.kind != NodeKind::kSource) by_min[node.min()].push_back(node.id);
    if (node.is_big()) {
      big_by_prefix[std::vector<int>(node.seq.begin(), node.seq.end() - 1)].push_back(node.id);
    }
  }

  const auto add_arc = [&](int tail, int head, ArcClass cls) {
    if (dag.arcs.size() >= options.arc_cap) {
      throw Error(ErrorCode::kBudget,
                  "arc count exceeds cap " + std::to_string(options.arc_cap));
    }
    dag.arcs.push_back({tail, head, cls,
                        ctx.ArcLengthUnchecked(dag.nodes[head], cls, options.weighted,
                                               options.e1_rule)});
  };

  std::vector<std::pair<int, ArcClass>> heads;
  for (const DagNode& s : dag.nodes) {
    if (s.kind == NodeKind::kSink) continue;
    heads.clear();
    // E0 heads start strictly right of max(s) and must not meet it.
    const int first = s.kind == NodeKind::kSource ? 1 : ctx.model().right_reach(s.max()) + 1;
    for (int m = first; m <= n + 1; ++m) {
      for (int t : by_min[m]) {
        if (ctx.IsE0(s, dag.nodes[t])) heads.emplace_back(t, ArcClass::kE0);
      }
    }
    if (s.is_big()) {
      const auto it = big_by_prefix.find(std::vector<int>(s.seq.begin() + 1, s.seq.end()));
      if (it != big_by_prefix.end()) {
        for (int t : it->second) heads.emplace_back(t, ArcClass::kE1);
      }
    }
    std::sort(heads.begin(), heads.end());
    for (const auto& [t, cls] : heads) add_arc(s.id, t, cls);
  }
  return dag;
}

bool IsAcyclic(const DerivedDigraph& dag) {
  const std::size_t count = dag.nodes.size();
  std::vector<int> indegree(count, 0);
  std::vector<std::vector<int>> out(count);
  for (const DagArc& arc : dag.arcs) {
    ++indegree[arc.head];
    out[arc.tail].push_back(arc.head);
  }
  std::vector<int> ready;
  for (std::size_t v = 0; v < count; ++v) {
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++visited;
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return visited == count;
}

std::string DumpDigraph(const DerivedDigraph& dag) {
  std::string out;
  for (const DagNode& node : dag.nodes) {
    out += std::to_string(node.id);
    out += ' ';
    out += NodeKindName(node.kind);
    for (int index : node.seq) {
      out += ' ';
      out += std::to_string(index);
    }
    out += '\n';
  }
  for (const DagArc& arc : dag.arcs) {
    out += std::to_string(arc.tail) + ' ' + std::to_string(arc.head) + ' ' +
           std::string(ArcClassName(arc.cls)) + ' ' + FormatRational(arc.length) + '\n';
  }
  return out;
}

VertexSet PathToVertexSet(const ProperIntervalModel& model, std::span<const DagNode> path) {
  if (path.size() < 2 || path.front().kind != NodeKind::kSource ||
      path.back().kind != NodeKind::kSink) {
    throw Error(ErrorCode::kNotPath, "path must run from Source to Sink");
  }
  std::vector<int> members;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i].max() <= path[i - 1].max()) {
      throw Error(ErrorCode::kNotPath, "path does not advance at position " + std::to_string(i));
    }
    if (i + 1 < path.size()) {
      const DagNode& node = path[i];
      if (node.kind == NodeKind::kSource || node.kind == NodeKind::kSink) {
        throw Error(ErrorCode::kNotPath, "dummy node inside path");
      }
      for (int index : node.seq) members.push_back(model.original_index(index));
    }
  }
  return VertexSet(std::move(members));
}

NaiveResult SolveNaiveDetailed(const ProperIntervalModel& model, const SolveOptions& options) {
  const DerivedDigraph dag = BuildDigraph(model, options);
  const int count = static_cast<int>(dag.nodes.size());

  std::vector<std::size_t> first_arc(count + 1, 0);
  for (const DagArc& arc : dag.arcs) ++first_arc[arc.tail + 1];
  for (int v = 0; v < count; ++v) first_arc[v + 1] += first_arc[v];

  // Every arc strictly increases max(), so decreasing max() is a reverse
  // topological order.
  std::vector<int> order(count);
  for (int v = 0; v < count; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return dag.nodes[a].max() > dag.nodes[b].max();
  });

  std::vector<std::optional<Cost>> to_sink(count);
  to_sink[dag.sink()] = Cost(0);
  for (int v : order) {
    for (std::size_t a = first_arc[v]; a < first_arc[v + 1]; ++a) {
      const DagArc& arc = dag.arcs[a];
      if (!to_sink[arc.head]) continue;
      const Cost candidate = arc.length + *to_sink[arc.head];
      if (!to_sink[v] || candidate < *to_sink[v]) to_sink[v] = candidate;
    }
  }

  NaiveResult result;
  result.nodes = dag.nodes.size();
  result.arcs = dag.arcs.size();
  result.solution.engine = Engine::kNaive;
  if (!to_sink[dag.source()]) return result;

  // Greedy walk: smallest head id that stays on a shortest path.
  int v = dag.source();
  result.path.push_back(v);
  while (v != dag.sink()) {
    for (std::size_t a = first_arc[v]; a < first_arc[v + 1]; ++a) {
      const DagArc& arc = dag.arcs[a];
      if (to_sink[arc.head] && arc.length + *to_sink[arc.head] == *to_sink[v]) {
        v = arc.head;
        break;
      }
    }
    result.path.push_back(v);
  }
  std::vector<DagNode> path_nodes;
  for (int id : result.path) path_nodes.push_back(dag.nodes[id]);
  result.solution.feasible = true;
  result.solution.cost = *to_sink[dag.source()];
  result.solution.set = PathToVertexSet(model, path_nodes);
  return result;
}

Solution SolveNaive(const ProperIntervalModel& model, const SolveOptions& options) {
  return SolveNaiveDetailed(model, options).solution;
}

}  // namespace pikdom
