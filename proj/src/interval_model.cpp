#include "pikdom/interval_model.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "pikdom/errors.hpp"

namespace pikdom {

ProperIntervalModel ProperIntervalModel::FromIntervals(std::vector<Interval> intervals,
                                                       std::optional<std::vector<Cost>> costs) {
  const int n = static_cast<int>(intervals.size());
  if (costs && static_cast<int>(costs->size()) != n) {
    throw Error(ErrorCode::kParam, "cost list length does not match interval count");
  }
  for (int i = 0; i < n; ++i) {
    if (!(intervals[i].left < intervals[i].right)) {
      throw Error(ErrorCode::kParam, "interval " + std::to_string(i + 1) + " is degenerate");
    }
    if (costs && (*costs)[i] < 0) {
      throw Error(ErrorCode::kNegCost, "vertex " + std::to_string(i + 1) + " has negative cost");
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (intervals[a].left != intervals[b].left) return intervals[a].left < intervals[b].left;
    return intervals[a].right < intervals[b].right;
  });
  for (int p = 0; p + 1 < n; ++p) {
    if (intervals[order[p]] == intervals[order[p + 1]]) {
      throw Error(ErrorCode::kDuplicate, "intervals " + std::to_string(order[p] + 1) + " and " +
                                             std::to_string(order[p + 1] + 1) + " coincide");
    }
  }
  for (int p = 0; p + 1 < n; ++p) {
    const Interval& a = intervals[order[p]];
    const Interval& b = intervals[order[p + 1]];
    if (a.left == b.left || !(a.right < b.right)) {
      throw Error(ErrorCode::kNotProper, "intervals " + std::to_string(order[p] + 1) + " and " +
                                             std::to_string(order[p + 1] + 1) +
                                             " are nested");
    }
  }

  ProperIntervalModel model;
  model.has_costs_ = costs.has_value();
  model.sorted_.reserve(n);
  model.to_original_.resize(n);
  model.to_sorted_.resize(n);
  for (int p = 0; p < n; ++p) {
    model.sorted_.push_back(intervals[order[p]]);
    if (costs) model.costs_.push_back((*costs)[order[p]]);
    model.to_original_[p] = order[p] + 1;
    model.to_sorted_[order[p]] = p + 1;
  }

  // Proper models have consecutive neighborhoods, so two monotone sweeps
  // give every vertex's reach.
  model.right_reach_.resize(n);
  model.left_reach_.resize(n);
  int j = 0;
  for (int i = 0; i < n; ++i) {
    j = std::max(j, i);
    while (j + 1 < n && model.sorted_[j + 1].left <= model.sorted_[i].right) ++j;
    model.right_reach_[i] = j + 1;
  }
  j = n - 1;
  for (int i = n - 1; i >= 0; --i) {
    j = std::min(j, i);
    while (j - 1 >= 0 && model.sorted_[i].left <= model.sorted_[j - 1].right) --j;
    model.left_reach_[i] = j + 1;
  }
  return model;
}

const Interval& ProperIntervalModel::interval(int i) const {
  if (i < 1 || i > size()) throw Error(ErrorCode::kIndex, "interval index " + std::to_string(i));
  return sorted_[i - 1];
}

Cost ProperIntervalModel::cost(int i) const {
  if (i < 1 || i > size()) throw Error(ErrorCode::kIndex, "vertex index " + std::to_string(i));
  return has_costs_ ? costs_[i - 1] : Cost(1);
}

int ProperIntervalModel::original_index(int sorted) const {
  if (sorted < 1 || sorted > size()) {
    throw Error(ErrorCode::kIndex, "sorted index " + std::to_string(sorted));
  }
  return to_original_[sorted - 1];
}

int ProperIntervalModel::sorted_index(int original) const {
  if (original < 1 || original > size()) {
    throw Error(ErrorCode::kIndex, "vertex index " + std::to_string(original));
  }
  return to_sorted_[original - 1];
}

bool ProperIntervalModel::intersects(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j > size()) {
    throw Error(ErrorCode::kIndex,
                "interval pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (i > j) std::swap(i, j);
  return j <= right_reach_[i - 1];
}

int ProperIntervalModel::right_reach(int i) const {
  if (i < 1 || i > size()) throw Error(ErrorCode::kIndex, "interval index " + std::to_string(i));
  return right_reach_[i - 1];
}

int ProperIntervalModel::left_reach(int i) const {
  if (i < 1 || i > size()) throw Error(ErrorCode::kIndex, "interval index " + std::to_string(i));
  return left_reach_[i - 1];
}

ProperIntervalModel ProperIntervalModel::WithCosts(
    std::optional<std::vector<Cost>> costs_in_original_order) const {
  return FromIntervals(OriginalIntervals(), std::move(costs_in_original_order));
}

std::vector<Interval> ProperIntervalModel::OriginalIntervals() const {
  std::vector<Interval> out(sorted_.size());
  for (int p = 0; p < size(); ++p) out[to_original_[p] - 1] = sorted_[p];
  return out;
}

std::optional<std::vector<Cost>> ProperIntervalModel::OriginalCosts() const {
  if (!has_costs_) return std::nullopt;
  std::vector<Cost> out(costs_.size());
  for (int p = 0; p < size(); ++p) out[to_original_[p] - 1] = costs_[p];
  return out;
}

bool operator==(const ProperIntervalModel& a, const ProperIntervalModel& b) {
  return a.sorted_ == b.sorted_ && a.has_costs_ == b.has_costs_ && a.costs_ == b.costs_ &&
         a.to_original_ == b.to_original_;
}

bool DerivedGraph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void ParseFail(int line_no, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

ProperIntervalModel ParseModel(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = Tokenize(line);
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty instance");

  const auto& [header_line, header] = lines.front();
  if (header.size() > 2 || (header.size() == 2 && header[1] != "weighted")) {
    ParseFail(header_line, "expected 'n' or 'n weighted'");
  }
  const bool weighted = header.size() == 2;
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(header[0], &used);
    if (used != header[0].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    ParseFail(header_line, "bad vertex count '" + header[0] + "'");
  }
  if (n < 1) ParseFail(header_line, "vertex count must be positive");
  if (static_cast<int>(lines.size()) - 1 != n) {
    ParseFail(header_line, "expected " + std::to_string(n) + " interval lines, found " +
                               std::to_string(lines.size() - 1));
  }

  std::vector<Interval> intervals;
  std::vector<Cost> costs;
  for (int i = 1; i <= n; ++i) {
    const auto& [ln, tokens] = lines[i];
    const std::size_t expected = weighted ? 3 : 2;
    if (tokens.size() != expected) {
      ParseFail(ln, "expected " + std::to_string(expected) + " fields, found " +
                        std::to_string(tokens.size()));
    }
    Interval iv;
    try {
      iv.left = ParseRational(tokens[0]);
      iv.right = ParseRational(tokens[1]);
      if (weighted) costs.push_back(ParseRational(tokens[2]));
    } catch (const Error& e) {
      ParseFail(ln, e.what());
    }
    if (!(iv.left < iv.right)) ParseFail(ln, "interval must satisfy left < right");
    intervals.push_back(iv);
  }
  return ProperIntervalModel::FromIntervals(
      std::move(intervals), weighted ? std::optional<std::vector<Cost>>(std::move(costs))
                                     : std::nullopt);
}

ProperIntervalModel ReadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseModel(buffer.str());
}

std::string SerializeModel(const ProperIntervalModel& model) {
  std::string out = std::to_string(model.size());
  if (model.has_costs()) out += " weighted";
  out += '\n';
  const auto intervals = model.OriginalIntervals();
  const auto costs = model.OriginalCosts();
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    out += FormatRational(intervals[i].left);
    out += ' ';
    out += FormatRational(intervals[i].right);
    if (costs) {
      out += ' ';
      out += FormatRational((*costs)[i]);
    }
    out += '\n';
  }
  return out;
}

bool Intersects(const ProperIntervalModel& model, int i, int j) {
  return model.intersects(i, j);
}

DerivedGraph DeriveSortedGraph(const ProperIntervalModel& model) {
  DerivedGraph g;
  g.n = model.size();
  g.adjacency.resize(g.n);
  for (int i = 1; i <= g.n; ++i) {
    for (int j = model.left_reach(i); j <= model.right_reach(i); ++j) {
      if (j != i) g.adjacency[i - 1].push_back(j);
    }
  }
  return g;
}

DerivedGraph DeriveGraph(const ProperIntervalModel& model) {
  DerivedGraph g;
  g.n = model.size();
  g.adjacency.resize(g.n);
  for (int i = 1; i <= g.n; ++i) {
    auto& row = g.adjacency[model.original_index(i) - 1];
    for (int j = model.left_reach(i); j <= model.right_reach(i); ++j) {
      if (j != i) row.push_back(model.original_index(j));
    }
    std::sort(row.begin(), row.end());
  }
  return g;
}

int MinDegree(const DerivedGraph& graph) {
  if (graph.n == 0) throw Error(ErrorCode::kEmpty, "graph has no vertices");
  std::size_t best = graph.adjacency.front().size();
  for (const auto& row : graph.adjacency) best = std::min(best, row.size());
  return static_cast<int>(best);
}

ProperIntervalModel GenerateRandom(int n, std::uint64_t seed, const Rational& stretch) {
  if (n < 1) throw Error(ErrorCode::kParam, "n must be at least 1");
  if (stretch <= 0) throw Error(ErrorCode::kParam, "stretch must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Interval> intervals;
  intervals.reserve(n);
  std::int64_t left = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) left += 1 + static_cast<std::int64_t>(rng() % 3);
    intervals.push_back({Rational(left), Rational(left) + stretch});
  }
  return ProperIntervalModel::FromIntervals(std::move(intervals));
}

ProperIntervalModel WithRandomCosts(const ProperIntervalModel& model, std::uint64_t seed,
                                    int max_cost) {
  if (max_cost < 0) throw Error(ErrorCode::kParam, "max_cost must be non-negative");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Cost> costs(model.size());
  for (auto& c : costs) c = Cost(static_cast<std::int64_t>(rng() % (max_cost + 1)));
  return model.WithCosts(std::move(costs));
}

ProperIntervalModel CliqueModel(int n) {
  if (n < 1) throw Error(ErrorCode::kParam, "n must be at least 1");
  std::vector<Interval> intervals;
  for (int i = 0; i < n; ++i) intervals.push_back({Rational(i), Rational(i + n)});
  return ProperIntervalModel::FromIntervals(std::move(intervals));
}

}  // namespace pikdom
