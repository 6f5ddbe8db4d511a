// Copyright 2026 The Restarts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Values cross the boundary in the same JSON shapes the CLI
// reads and writes, as plain dicts and lists.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "restarts/existence.h"
#include "restarts/genhaze.h"
#include "restarts/io.h"
#include "restarts/oracle.h"
#include "restarts/rational.h"
#include "restarts/reductions.h"
#include "restarts/solver.h"
#include "restarts/stability.h"

namespace py = pybind11;

namespace restarts {
namespace {

Json FromPython(const py::handle& obj) {
  const std::string text =
      py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return ParseJson(text);
}

py::object ToPython(const Json& json) {
  return py::module_::import("json").attr("loads")(json.dump());
}

ScaledRational ToScaled(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (abs(num) > BigInt(INT64_MAX) || den > BigInt(INT64_MAX)) {
    throw std::invalid_argument("bound out of range");
  }
  return ScaledRational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

void CheckPlanPairs(const Game& game, const SequencePlan& plan) {
  for (std::int64_t k = 0; k < plan.prefix_length() + plan.goal().length(); ++k) {
    game.CheckPair(plan.At(k));
  }
}

Variant ParseVariant(const std::string& name) {
  if (name == "fixed") return Variant::kFixedRole;
  if (name == "reassign") return Variant::kRandomReassignment;
  throw std::invalid_argument("variant must be 'fixed' or 'reassign'");
}

}  // namespace
}  // namespace restarts

PYBIND11_MODULE(_restarts, m) {
  using namespace restarts;
  m.doc() = "Stable sequences in repeated two-player games with restarts";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<OracleBudgetExceeded>(m, "OracleBudgetExceeded",
                                               PyExc_RuntimeError);
  py::register_exception<NoTrivialBoundError>(m, "NoTrivialBoundError",
                                               PyExc_ValueError);

  m.def("deviation_payoffs",
        [](py::object game, int row, int col) {
          const Game g = GameFromJson(FromPython(game));
          return DeviationPayoffs(g, {row, col});
        },
        py::arg("game"), py::arg("row"), py::arg("col"));

  m.def("goal_value",
        [](py::object game, py::object goal) {
          const Game g = GameFromJson(FromPython(game));
          const auto [v1, v2] = GoalValue(g, GoalFromJson(FromPython(goal)));
          return std::make_pair(v1.ToString(), v2.ToString());
        },
        py::arg("game"), py::arg("goal"),
        "Per-round goal values as exact fraction strings.");

  m.def("pure_nash_pairs", [](py::object game) {
    std::vector<std::pair<int, int>> out;
    for (ActionPair p : PureNashPairs(GameFromJson(FromPython(game)))) {
      out.emplace_back(p.row, p.col);
    }
    return out;
  });

  m.def("max_welfare_pairs", [](py::object game) {
    std::vector<std::pair<int, int>> out;
    for (ActionPair p : MaxWelfarePairs(GameFromJson(FromPython(game)))) {
      out.emplace_back(p.row, p.col);
    }
    return out;
  });

  m.def("check_limit",
        [](py::object game, py::object plan, bool diagnostics) {
          const Game g = GameFromJson(FromPython(game));
          const SequencePlan p = PlanFromJson(FromPython(plan));
          CheckPlanPairs(g, p);
          return ToPython(ToJson(CheckLimit(g, p), g, diagnostics));
        },
        py::arg("game"), py::arg("plan"), py::arg("diagnostics") = false);

  m.def("check_finite",
        [](py::object game, py::object plan, const std::string& beta,
           const std::string& variant, bool diagnostics) {
          const Game g = GameFromJson(FromPython(game));
          const SequencePlan p = PlanFromJson(FromPython(plan));
          CheckPlanPairs(g, p);
          return ToPython(ToJson(
              CheckFinite(g, p, ParseRational(beta), ParseVariant(variant)), g,
              diagnostics));
        },
        py::arg("game"), py::arg("plan"), py::arg("beta"),
        py::arg("variant") = "fixed", py::arg("diagnostics") = false,
        "beta is an exact fraction string such as '99/100'.");

  m.def("goal_feasibility",
        [](py::object game, py::object goal, bool witness) {
          const Game g = GameFromJson(FromPython(game));
          const GoalSequence gs = GoalFromJson(FromPython(goal));
          const FeasibilityVerdict verdict = GoalFeasibility(g, gs);
          Json out = ToJson(verdict, g);
          if (witness && verdict.witness) {
            out["plan"] = ToJson(ConstructWitnessPlan(g, gs, *verdict.witness));
          }
          return ToPython(out);
        },
        py::arg("game"), py::arg("goal"), py::arg("witness") = false);

  m.def("derive_instance",
        [](py::object game, py::object goal, std::optional<std::string> bound) {
          const Game g = GameFromJson(FromPython(game));
          std::optional<ScaledRational> b;
          if (bound) b = ToScaled(ParseRational(*bound));
          return ToPython(ToJson(DeriveInstance(g, GoalFromJson(FromPython(goal)), b)));
        },
        py::arg("game"), py::arg("goal"), py::arg("bound") = py::none());

  m.def("solve_dp", [](py::object instance) {
    const GenhazeInstance inst = InstanceFromJson(FromPython(instance));
    return ToPython(ToJson(SolveDp(inst), inst));
  });

  m.def("brute_min_hazing",
        [](py::object instance, int max_len, std::int64_t node_budget) {
          const GenhazeInstance inst = InstanceFromJson(FromPython(instance));
          return ToPython(ToJson(BruteMinHazing(inst, max_len, node_budget), inst));
        },
        py::arg("instance"), py::arg("max_len"),
        py::arg("node_budget") = kDefaultNodeBudget);

  m.def("cross_check",
        [](py::object instance, int max_len, std::int64_t node_budget) {
          const GenhazeInstance inst = InstanceFromJson(FromPython(instance));
          return ToPython(ToJson(CrossCheck(inst, max_len, node_budget), inst));
        },
        py::arg("instance"), py::arg("max_len"),
        py::arg("node_budget") = kDefaultNodeBudget);

  m.def("ussp_to_game", [](py::object ussp) {
    const ReducedInstance reduced = UsspToGame(UsspFromJson(FromPython(ussp)));
    return ToPython(Json{{"game", ToJson(reduced.game)},
                         {"goal", ToJson(reduced.goal)},
                         {"instance", ToJson(reduced.instance)}});
  });

  m.def("ussp_brute",
        [](std::vector<std::int64_t> values, std::int64_t target) {
          return UsspBrute({std::move(values), target});
        },
        py::arg("values"), py::arg("target"));
}
