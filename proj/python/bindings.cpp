#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pikdom/errors.hpp"
#include "pikdom/fast_solver.hpp"
#include "pikdom/oracle.hpp"
#include "pikdom/reduction.hpp"

namespace py = pybind11;
using namespace pikdom;

namespace {

Rational ToRational(const py::object& value) {
  if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
  return ParseRational(py::str(value).cast<std::string>());
}

std::optional<std::vector<Cost>> ToCosts(const std::optional<std::vector<py::object>>& costs) {
  if (!costs) return std::nullopt;
  std::vector<Cost> out;
  for (const auto& c : *costs) out.push_back(ToRational(c));
  return out;
}

py::dict SolutionDict(const Solution& s) {
  py::dict d;
  d["feasible"] = s.feasible;
  d["cost"] = s.cost ? py::object(py::str(FormatRational(*s.cost))) : py::object(py::none());
  d["set"] = s.set.members();
  d["engine"] = std::string(EngineName(s.engine));
  return d;
}

py::dict Solve(const ProperIntervalModel& model, int k, const std::string& variant,
               const std::string& engine, std::optional<bool> weighted,
               const std::string& e1_rule) {
  SolveOptions options;
  options.k = k;
  options.variant = ParseVariant(variant);
  options.weighted = weighted.value_or(model.has_costs());
  if (e1_rule == "head-min") {
    options.e1_rule = E1CostRule::kHeadMin;
  } else if (e1_rule != "head-max") {
    throw Error(ErrorCode::kParam, "unknown e1 rule '" + e1_rule + "'");
  }
  if (k < 1) throw Error(ErrorCode::kParam, "k must be at least 1");
  Solution s;
  {
    py::gil_scoped_release release;
    switch (ParseEngine(engine)) {
      case Engine::kBrute: s = BruteForceMin(model, k, options.variant, options.weighted); break;
      case Engine::kNaive: s = SolveNaive(model, options); break;
      case Engine::kFast: s = SolveFast(model, options); break;
    }
  }
  return SolutionDict(s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "PikdomError", PyExc_ValueError);

  py::class_<ProperIntervalModel>(m, "Model")
      .def(py::init([](const std::vector<std::pair<py::object, py::object>>& intervals,
                       std::optional<std::vector<py::object>> costs) {
             std::vector<Interval> iv;
             for (const auto& [l, r] : intervals) iv.push_back({ToRational(l), ToRational(r)});
             return ProperIntervalModel::FromIntervals(std::move(iv), ToCosts(costs));
           }),
           py::arg("intervals"), py::arg("costs") = py::none())
      .def("__len__", &ProperIntervalModel::size)
      .def_property_readonly("weighted", &ProperIntervalModel::has_costs)
      .def_property_readonly("intervals",
                             [](const ProperIntervalModel& m) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& iv : m.OriginalIntervals()) {
                                 out.emplace_back(FormatRational(iv.left),
                                                  FormatRational(iv.right));
                               }
                               return out;
                             })
      .def_property_readonly("costs",
                             [](const ProperIntervalModel& m) {
                               std::optional<std::vector<std::string>> out;
                               if (auto costs = m.OriginalCosts()) {
                                 out.emplace();
                                 for (const auto& c : *costs) out->push_back(FormatRational(c));
                               }
                               return out;
                             })
      .def("with_costs",
           [](const ProperIntervalModel& m, std::optional<std::vector<py::object>> costs) {
             return m.WithCosts(ToCosts(costs));
           },
           py::arg("costs"))
      .def("intersects", [](const ProperIntervalModel& m, int i, int j) {
        return Intersects(m, i, j);
      })
      .def("adjacency", [](const ProperIntervalModel& m) { return DeriveGraph(m).adjacency; })
      .def("min_degree", [](const ProperIntervalModel& m) { return MinDegree(DeriveGraph(m)); })
      .def("serialize", &SerializeModel)
      .def("__eq__", [](const ProperIntervalModel& a, const ProperIntervalModel& b) {
        return a == b;
      })
      .def("__repr__", [](const ProperIntervalModel& m) {
        return "<pikdom.Model n=" + std::to_string(m.size()) +
               (m.has_costs() ? " weighted>" : ">");
      });

  m.def("parse_model", [](const std::string& text) { return ParseModel(text); });
  m.def("read_model", &ReadModelFile);
  m.def("generate_random",
        [](int n, std::uint64_t seed, const py::object& stretch) {
          return GenerateRandom(n, seed, ToRational(stretch));
        },
        py::arg("n"), py::arg("seed"), py::arg("stretch") = 2);
  m.def("with_random_costs", &WithRandomCosts, py::arg("model"), py::arg("seed"),
        py::arg("max_cost") = 10);
  m.def("clique_model", &CliqueModel);

  m.def("solve", &Solve, py::arg("model"), py::arg("k") = 1, py::arg("variant") = "total",
        py::arg("engine") = "fast", py::arg("weighted") = py::none(),
        py::arg("e1_rule") = "head-max");

  m.def("first_violation",
        [](const ProperIntervalModel& model, std::vector<int> set, int k,
           const std::string& variant) {
          return FirstViolation(DeriveGraph(model), VertexSet(std::move(set)), k,
                                ParseVariant(variant));
        },
        py::arg("model"), py::arg("set"), py::arg("k") = 1, py::arg("variant") = "total");

  m.def("dump_digraph",
        [](const ProperIntervalModel& model, int k, const std::string& variant,
           std::optional<bool> weighted) {
          SolveOptions options;
          options.k = k;
          options.variant = ParseVariant(variant);
          options.weighted = weighted.value_or(model.has_costs());
          return DumpDigraph(BuildDigraph(model, options));
        },
        py::arg("model"), py::arg("k") = 1, py::arg("variant") = "total",
        py::arg("weighted") = py::none());

  m.def("representative_check",
        [](const ProperIntervalModel& model, int k, const std::string& variant, int max_n) {
          return RepresentativeIndependenceCheck(model, k, ParseVariant(variant), max_n);
        },
        py::arg("model"), py::arg("k") = 1, py::arg("variant") = "total", py::arg("max_n") = 12);
  m.attr("__doc__") = "Minimum (total) k-domination on proper interval graphs.";
}
