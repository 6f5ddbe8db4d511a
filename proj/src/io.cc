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

#include "restarts/io.h"

#include <fstream>
#include <sstream>

namespace restarts {
namespace {

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object()) throw FormatError("expected a JSON object");
  auto it = json.find(key);
  if (it == json.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t Integer(const Json& json, const std::string& what) {
  if (!json.is_number_integer()) throw FormatError(what + " must be an integer");
  return json.get<std::int64_t>();
}

std::vector<std::string> Labels(const Json& json, const std::string& what) {
  if (!json.is_array()) throw FormatError(what + " must be an array of strings");
  std::vector<std::string> labels;
  for (const Json& item : json) {
    if (!item.is_string()) throw FormatError(what + " must be an array of strings");
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

PayoffMatrix Matrix(const Json& json, const std::string& what) {
  if (!json.is_array()) throw FormatError(what + " must be an array of rows");
  std::vector<std::vector<Payoff>> rows;
  for (const Json& row : json) {
    if (!row.is_array()) throw FormatError(what + " rows must be arrays");
    std::vector<Payoff> values;
    for (const Json& v : row) values.push_back(Integer(v, what + " entries"));
    rows.push_back(std::move(values));
  }
  return PayoffMatrix::FromRows(rows);
}

Json PairJson(ActionPair pair) { return Json::array({pair.row, pair.col}); }

ActionPair PairFromJson(const Json& json) {
  if (!json.is_array() || json.size() != 2) {
    throw FormatError("an action pair must be a [row, col] array");
  }
  return {static_cast<int>(Integer(json[0], "row index")),
          static_cast<int>(Integer(json[1], "column index"))};
}

Json NumeratorPair(const PerPlayer<ScaledRational>& values) {
  return Json::array({values.first.num(), values.second.num()});
}

PerPlayer<ScaledRational> NumeratorPairFromJson(const Json& json,
                                                std::int64_t scale,
                                                const std::string& what) {
  if (!json.is_array() || json.size() != 2) {
    throw FormatError(what + " must be a two-element array");
  }
  return {ScaledRational(Integer(json[0], what), scale),
          ScaledRational(Integer(json[1], what), scale)};
}

Json ValueJson(const ScaledRational& value) {
  return {{"num", value.num()}, {"scale", value.scale()}, {"text", value.ToString()}};
}

int PlayerNumber(Player player) { return PlayerIndex(player) + 1; }

// Wraps parse-time exceptions from the model constructors.
template <typename F>
auto Parsing(const std::string& what, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(what + ": " + e.what());
  }
}

}  // namespace

Json ToJson(const Game& game) {
  auto rows = [](const PayoffMatrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      out.push_back(row);
    }
    return out;
  };
  return {{"actions1", game.actions1()},
          {"actions2", game.actions2()},
          {"payoff1", rows(game.payoff1())},
          {"payoff2", rows(game.payoff2())}};
}

Json ToJson(const GoalSequence& goal) {
  Json out = Json::array();
  for (ActionPair pair : goal.pairs()) out.push_back(PairJson(pair));
  return out;
}

Json ToJson(const SequencePlan& plan) {
  Json prefix = Json::array();
  for (const PrefixRun& run : plan.prefix()) {
    prefix.push_back({{"count", run.count}, {"pair", PairJson(run.pair)}});
  }
  return {{"goal", ToJson(plan.goal())}, {"prefix", prefix}};
}

Json ToJson(const GenhazeInstance& instance) {
  Json costs = Json::array();
  for (const PairCost& cost : instance.costs()) {
    costs.push_back({{"pair", PairJson(cost.pair)},
                     {"h", NumeratorPair(cost.hazing)},
                     {"t", NumeratorPair(cost.threshold)}});
  }
  return {{"actions1", instance.actions1()},
          {"actions2", instance.actions2()},
          {"bound", instance.bound().num()},
          {"costs", costs},
          {"max_sw", instance.max_sw()},
          {"scale", instance.scale()},
          {"theta", NumeratorPair(instance.theta())}};
}

Json ToJson(const UsspInstance& ussp) {
  return {{"target", ussp.target}, {"values", ussp.values}};
}

Game GameFromJson(const Json& json) {
  return Parsing("game", [&] {
    return Game(Labels(Field(json, "actions1"), "actions1"),
                Labels(Field(json, "actions2"), "actions2"),
                Matrix(Field(json, "payoff1"), "payoff1"),
                Matrix(Field(json, "payoff2"), "payoff2"));
  });
}

GoalSequence GoalFromJson(const Json& json) {
  return Parsing("goal", [&] {
    if (!json.is_array()) throw FormatError("goal must be an array of pairs");
    std::vector<ActionPair> pairs;
    for (const Json& item : json) pairs.push_back(PairFromJson(item));
    return GoalSequence(std::move(pairs));
  });
}

SequencePlan PlanFromJson(const Json& json) {
  return Parsing("plan", [&] {
    const Json& prefix_json = Field(json, "prefix");
    if (!prefix_json.is_array()) throw FormatError("prefix must be an array");
    std::vector<PrefixRun> prefix;
    for (const Json& run : prefix_json) {
      prefix.push_back({PairFromJson(Field(run, "pair")),
                        Integer(Field(run, "count"), "count")});
    }
    return SequencePlan(std::move(prefix), GoalFromJson(Field(json, "goal")));
  });
}

GenhazeInstance InstanceFromJson(const Json& json) {
  return Parsing("instance", [&] {
    const std::int64_t scale = Integer(Field(json, "scale"), "scale");
    if (scale < 1) throw FormatError("scale must be >= 1");
    std::vector<std::string> actions1 = Labels(Field(json, "actions1"), "actions1");
    std::vector<std::string> actions2 = Labels(Field(json, "actions2"), "actions2");
    const Json& costs_json = Field(json, "costs");
    if (!costs_json.is_array()) throw FormatError("costs must be an array");
    std::vector<PairCost> costs;
    for (const Json& item : costs_json) {
      costs.push_back({PairFromJson(Field(item, "pair")),
                       NumeratorPairFromJson(Field(item, "h"), scale, "h"),
                       NumeratorPairFromJson(Field(item, "t"), scale, "t")});
    }
    const Json& max_sw = Field(json, "max_sw");
    if (!max_sw.is_boolean()) throw FormatError("max_sw must be a boolean");
    const int rows = static_cast<int>(actions1.size());
    const int cols = static_cast<int>(actions2.size());
    return GenhazeInstance(
        rows, cols, std::move(costs),
        NumeratorPairFromJson(Field(json, "theta"), scale, "theta"),
        ScaledRational(Integer(Field(json, "bound"), "bound"), scale), scale,
        max_sw.get<bool>(), std::move(actions1), std::move(actions2));
  });
}

UsspInstance UsspFromJson(const Json& json) {
  return Parsing("ussp", [&] {
    UsspInstance ussp;
    const Json& values = Field(json, "values");
    if (!values.is_array()) throw FormatError("values must be an array");
    for (const Json& v : values) ussp.values.push_back(Integer(v, "values"));
    ussp.target = Integer(Field(json, "target"), "target");
    ussp.Validate();
    return ussp;
  });
}

Json ToJson(const Rational& value) {
  return {{"num", boost::multiprecision::numerator(value).str()},
          {"den", boost::multiprecision::denominator(value).str()},
          {"text", RationalToString(value)}};
}

Json ToJson(const StabilityVerdict& verdict, const Game& game,
            bool with_diagnostics) {
  Json out = {{"status", StatusName(verdict.status)}};
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    out["witness"] = {
        {"step", w.step},
        {"player", PlayerNumber(w.player)},
        {"deviation", game.ActionLabel(w.player, w.deviation_action)},
        {"deviation_index", w.deviation_action},
        {"margin", ToJson(w.margin)}};
  }
  if (with_diagnostics) {
    Json diagnostics = Json::array();
    for (const StepDiagnostic& d : verdict.diagnostics) {
      diagnostics.push_back({{"step", d.step},
                             {"player", PlayerNumber(d.player)},
                             {"deviation_payoff", d.deviation_payoff},
                             {"restart_cycle_average", ToJson(d.restart_cycle_average)},
                             {"stay_value", ToJson(d.stay_value)},
                             {"deviate_value", ToJson(d.deviate_value)}});
    }
    out["diagnostics"] = diagnostics;
    if (!verdict.limit_checks.empty()) {
      Json checks = Json::array();
      for (const LimitCheck& c : verdict.limit_checks) {
        checks.push_back({{"step", c.step},
                          {"player", PlayerNumber(c.player)},
                          {"goal_entry", c.goal_entry},
                          {"accumulated", ToJson(c.accumulated)},
                          {"required", ToJson(c.required)}});
      }
      out["limit_checks"] = checks;
    }
  }
  return out;
}

Json ToJson(const FeasibilityVerdict& verdict, const Game& game) {
  Json detail = Json::array();
  for (const PairMargin& m : verdict.detail) {
    detail.push_back({{"pair", PairJson(m.pair)},
                      {"label", game.PairLabel(m.pair)},
                      {"slack", {ValueJson(m.slack.first), ValueJson(m.slack.second)}}});
  }
  Json out = {{"status", FeasibilityName(verdict.status)}, {"detail", detail}};
  if (verdict.witness) {
    out["witness"] = {{"pair", PairJson(*verdict.witness)},
                      {"label", game.PairLabel(*verdict.witness)}};
  }
  return out;
}

Json ToJson(const SolveResult& result, const GenhazeInstance& instance) {
  Json prefix = Json::array();
  Json labels = Json::array();
  for (ActionPair pair : result.prefix) {
    prefix.push_back(PairJson(pair));
    labels.push_back(instance.PairLabel(pair));
  }
  return {{"status", SolveStatusName(result.status)},
          {"prefix", prefix},
          {"prefix_labels", labels},
          {"totals", {ValueJson(result.totals.first), ValueJson(result.totals.second)}},
          {"total_sum", ValueJson(result.total_sum)},
          {"states_explored", result.states_explored}};
}

Json ToJson(const OracleResult& result, const GenhazeInstance& instance) {
  Json prefix = Json::array();
  Json labels = Json::array();
  for (ActionPair pair : result.best_prefix) {
    prefix.push_back(PairJson(pair));
    labels.push_back(instance.PairLabel(pair));
  }
  Json out = {{"status", OracleStatusName(result.status)},
              {"best_prefix", prefix},
              {"best_prefix_labels", labels},
              {"nodes_visited", result.nodes_visited}};
  if (result.status == OracleStatus::kOptimal) {
    out["total_sum"] = ValueJson(result.total_sum);
  }
  return out;
}

Json ToJson(const CrossCheckReport& report, const GenhazeInstance& instance) {
  return {{"solver", ToJson(report.solver, instance)},
          {"oracle", ToJson(report.oracle, instance)},
          {"max_len", report.max_len},
          {"depth_sufficient", report.depth_sufficient},
          {"match", report.match},
          {"message", report.message}};
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseJson(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

}  // namespace restarts
