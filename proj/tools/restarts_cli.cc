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

// Command-line front end: files in, reports out.
//
// Exit status: 0 on success (including boundary verdicts), 1 on a negative
// verdict (unstable, infeasible, no solution within the bound, cross-check
// mismatch), 2 on malformed input or usage errors.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "restarts/existence.h"
#include "restarts/genhaze.h"
#include "restarts/io.h"
#include "restarts/oracle.h"
#include "restarts/rational.h"
#include "restarts/reductions.h"
#include "restarts/solver.h"
#include "restarts/stability.h"

namespace restarts {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string game, goal, plan, instance, ussp;
  std::string bound, beta, variant = "fixed";
  std::string out, out_prefix;
  bool limit = false;
  bool witness = false;
  bool cross_check = false;
  bool diagnostics = false;
  int max_len = -1;
  std::int64_t node_budget = kDefaultNodeBudget;
};

bool WantsJson(const Options& o) { return o.format == "json"; }

void Emit(const Options& o, const Json& json, const std::string& text) {
  if (WantsJson(o)) {
    std::cout << Dump(json);
  } else {
    std::cout << text;
  }
}

std::string Join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string PairList(const Game& game, const std::vector<ActionPair>& pairs) {
  std::vector<std::string> labels;
  for (ActionPair pair : pairs) labels.push_back(game.PairLabel(pair));
  return pairs.empty() ? "(none)" : Join(labels, " ");
}

std::string Fraction(const Rational& value) { return RationalToString(value); }

// --- analyze ---------------------------------------------------------------

int Analyze(const Options& o) {
  const Game game = GameFromJson(ReadJsonFile(o.game));
  const auto nash = PureNashPairs(game);
  const auto best = MaxWelfarePairs(game);
  Json deviations = Json::array();
  std::ostringstream text;
  text << "actions: " << game.num_rows() << " x " << game.num_cols()
       << (game.IsSymmetric() ? " (symmetric)" : "") << "\n"
       << "payoff spread: " << game.PayoffSpread() << "\n"
       << "pairs:\n";
  for (ActionPair pair : game.Pairs()) {
    const auto p = game.payoffs(pair);
    const auto d = DeviationPayoffs(game, pair);
    deviations.push_back({{"pair", {pair.row, pair.col}},
                          {"label", game.PairLabel(pair)},
                          {"payoffs", {p.first, p.second}},
                          {"deviation", {d.first, d.second}}});
    text << "  " << game.PairLabel(pair) << ": payoffs (" << p.first << ", "
         << p.second << "), deviation (" << d.first << ", " << d.second << ")\n";
  }
  auto pairs_json = [](const std::vector<ActionPair>& pairs) {
    Json out = Json::array();
    for (ActionPair pair : pairs) out.push_back({pair.row, pair.col});
    return out;
  };
  text << "pure Nash pairs: " << PairList(game, nash) << "\n"
       << "max-welfare pairs: " << PairList(game, best) << " (welfare "
       << game.Welfare(best.front()) << ")\n";
  Json json = {{"symmetric", game.IsSymmetric()},
               {"payoff_spread", game.PayoffSpread()},
               {"pairs", deviations},
               {"pure_nash", pairs_json(nash)},
               {"max_welfare", pairs_json(best)},
               {"max_welfare_value", game.Welfare(best.front())}};
  Emit(o, json, text.str());
  return kOk;
}

// --- feasible --------------------------------------------------------------

int Feasible(const Options& o) {
  const Game game = GameFromJson(ReadJsonFile(o.game));
  const GoalSequence goal = GoalFromJson(ReadJsonFile(o.goal));
  for (ActionPair pair : goal.pairs()) game.CheckPair(pair);
  const FeasibilityVerdict verdict = GoalFeasibility(game, goal);
  Json json = ToJson(verdict, game);
  std::ostringstream text;
  text << "status: " << FeasibilityName(verdict.status) << "\n";
  if (verdict.witness) text << "witness pair: " << game.PairLabel(*verdict.witness) << "\n";
  if (o.witness && verdict.witness) {
    const SequencePlan plan = ConstructWitnessPlan(game, goal, *verdict.witness);
    json["plan"] = ToJson(plan);
    text << "witness plan: " << game.PairLabel(*verdict.witness) << " x "
         << plan.prefix_length() << ", then goal\n";
    if (!o.out.empty()) WriteTextFile(o.out, Dump(ToJson(plan)));
  }
  Emit(o, json, text.str());
  return verdict.status == Feasibility::kInfeasible ? kNegative : kOk;
}

// --- derive ----------------------------------------------------------------

int Derive(const Options& o) {
  const Game game = GameFromJson(ReadJsonFile(o.game));
  const GoalSequence goal = GoalFromJson(ReadJsonFile(o.goal));
  for (ActionPair pair : goal.pairs()) game.CheckPair(pair);
  std::optional<ScaledRational> bound;
  if (!o.bound.empty()) {
    const Rational q = ParseRational(o.bound);
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den > 1'000'000'000 || abs(num) > BigInt(1) << 62) {
      throw UsageError("--bound out of range");
    }
    bound = ScaledRational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
  }
  const GenhazeInstance instance = DeriveInstance(game, goal, bound);
  const std::string dumped = Dump(ToJson(instance));
  if (!o.out.empty()) WriteTextFile(o.out, dumped);
  if (WantsJson(o) || o.out.empty()) {
    std::cout << dumped;
  } else {
    std::cout << "theta: (" << instance.theta().first << ", " << instance.theta().second
              << ")\nbound: " << instance.bound() << "\nmax_sw: "
              << (instance.max_sw() ? "true" : "false") << "\nwrote " << o.out << "\n";
  }
  return kOk;
}

// --- solve -----------------------------------------------------------------

int Solve(const Options& o) {
  const GenhazeInstance instance = InstanceFromJson(ReadJsonFile(o.instance));
  if (o.game.empty() != o.goal.empty()) {
    throw UsageError("--game and --goal must be given together");
  }
  const SolveResult result = SolveDp(instance);
  Json json = ToJson(result, instance);
  std::ostringstream text;
  text << "status: " << SolveStatusName(result.status) << "\n";
  if (result.status == SolveStatus::kOptimal) {
    std::vector<std::string> labels;
    for (ActionPair pair : result.prefix) labels.push_back(instance.PairLabel(pair));
    text << "prefix: " << (labels.empty() ? "(empty)" : Join(labels, " ")) << "\n"
         << "totals: (" << result.totals.first << ", " << result.totals.second << ")\n"
         << "total_sum: " << result.total_sum << "\n";
  }
  text << "states_explored: " << result.states_explored << "\n";
  if (!o.game.empty() && result.status == SolveStatus::kOptimal) {
    const Game game = GameFromJson(ReadJsonFile(o.game));
    const GoalSequence goal = GoalFromJson(ReadJsonFile(o.goal));
    const SequencePlan plan = AssembleAndVerify(game, goal, result);
    json["plan"] = ToJson(plan);
    text << "plan verified stable in the limit\n";
    if (!o.out.empty()) WriteTextFile(o.out, Dump(ToJson(plan)));
  }
  Emit(o, json, text.str());
  return result.status == SolveStatus::kOptimal ? kOk : kNegative;
}

// --- check -----------------------------------------------------------------

int Check(const Options& o) {
  if (o.limit == !o.beta.empty()) {
    throw UsageError("check needs exactly one of --limit or --beta P/Q");
  }
  const Game game = GameFromJson(ReadJsonFile(o.game));
  const SequencePlan plan = PlanFromJson(ReadJsonFile(o.plan));
  for (std::int64_t k = 0; k < plan.prefix_length() + plan.goal().length(); ++k) {
    game.CheckPair(plan.At(k));
  }
  Variant variant = Variant::kFixedRole;
  if (o.variant == "reassign") {
    variant = Variant::kRandomReassignment;
  } else if (o.variant != "fixed") {
    throw UsageError("--variant must be fixed or reassign");
  }
  StabilityVerdict verdict;
  Json json;
  if (o.limit) {
    if (variant != Variant::kFixedRole) {
      throw UsageError("--limit is only defined for the fixed-role variant");
    }
    verdict = CheckLimit(game, plan);
  } else {
    const Rational beta = ParseRational(o.beta);
    verdict = CheckFinite(game, plan, beta, variant);
  }
  json = ToJson(verdict, game, o.diagnostics);
  std::ostringstream text;
  text << "status: " << StatusName(verdict.status) << "\n";
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    text << "witness: round " << w.step << ", player "
         << (w.player == Player::kRow ? 1 : 2) << " plays "
         << game.ActionLabel(w.player, w.deviation_action) << " and restarts, margin "
         << Fraction(w.margin) << "\n";
  }
  if (o.diagnostics) {
    for (const StepDiagnostic& d : verdict.diagnostics) {
      text << "  round " << d.step << " player " << (d.player == Player::kRow ? 1 : 2)
           << ": deviate " << Fraction(d.deviate_value) << " vs stay "
           << Fraction(d.stay_value) << ", restart-cycle average "
           << Fraction(d.restart_cycle_average) << "\n";
    }
    for (const LimitCheck& c : verdict.limit_checks) {
      text << "  round " << c.step << " player " << (c.player == Player::kRow ? 1 : 2)
           << (c.goal_entry ? " (goal)" : "") << ": " << Fraction(c.accumulated)
           << " > " << Fraction(c.required) << "\n";
    }
  }
  Emit(o, json, text.str());
  return verdict.status == StabilityStatus::kUnstable ? kNegative : kOk;
}

// --- oracle ----------------------------------------------------------------

int Oracle(const Options& o) {
  const GenhazeInstance instance = InstanceFromJson(ReadJsonFile(o.instance));
  if (o.max_len < 0) throw UsageError("--max-len must be >= 0");
  std::ostringstream text;
  if (o.cross_check) {
    const CrossCheckReport report = CrossCheck(instance, o.max_len, o.node_budget);
    text << (report.match ? "match" : "MISMATCH") << ": " << report.message << "\n"
         << "solver: " << SolveStatusName(report.solver.status)
         << (report.solver.status == SolveStatus::kOptimal
                 ? " " + report.solver.total_sum.ToString()
                 : "")
         << "\noracle: " << OracleStatusName(report.oracle.status)
         << (report.oracle.status == OracleStatus::kOptimal
                 ? " " + report.oracle.total_sum.ToString()
                 : "")
         << " (" << report.oracle.nodes_visited << " nodes, depth " << o.max_len << ")\n";
    Emit(o, ToJson(report, instance), text.str());
    return report.match ? kOk : kNegative;
  }
  const OracleResult result = BruteMinHazing(instance, o.max_len, o.node_budget);
  text << "status: " << OracleStatusName(result.status) << "\n";
  if (result.status == OracleStatus::kOptimal) {
    std::vector<std::string> labels;
    for (ActionPair pair : result.best_prefix) labels.push_back(instance.PairLabel(pair));
    text << "prefix: " << (labels.empty() ? "(empty)" : Join(labels, " ")) << "\n"
         << "total_sum: " << result.total_sum << "\n";
  }
  text << "nodes_visited: " << result.nodes_visited << "\n";
  Emit(o, ToJson(result, instance), text.str());
  return kOk;
}

// --- reduce ----------------------------------------------------------------

int Reduce(const Options& o) {
  const UsspInstance ussp = UsspFromJson(ReadJsonFile(o.ussp));
  const ReducedInstance reduced = UsspToGame(ussp);
  const Json json = {{"game", ToJson(reduced.game)},
                     {"goal", ToJson(reduced.goal)},
                     {"instance", ToJson(reduced.instance)}};
  if (!o.out_prefix.empty()) {
    WriteTextFile(o.out_prefix + ".game.json", Dump(json["game"]));
    WriteTextFile(o.out_prefix + ".goal.json", Dump(json["goal"]));
    WriteTextFile(o.out_prefix + ".instance.json", Dump(json["instance"]));
  }
  std::ostringstream text;
  text << "game: " << reduced.game.num_rows() << " x " << reduced.game.num_cols()
       << ", sentinel " << ReductionSentinel(ussp) << "\n"
       << "goal: " << reduced.game.PairLabel(reduced.goal[0]) << "\n"
       << "summed hazing budget: " << reduced.delta << "\n"
       << "solvable iff the minimum summed hazing equals " << reduced.delta << "\n";
  if (!o.out_prefix.empty()) text << "wrote " << o.out_prefix << ".{game,goal,instance}.json\n";
  Emit(o, json, text.str());
  return kOk;
}

int Main(int argc, char** argv) {
  Options o;
  CLI::App app{"Stable sequences in repeated two-player games with restarts"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Summarize a game");
  analyze->add_option("game", o.game, "Game file")->required();
  format(analyze);

  CLI::App* feasible = app.add_subcommand("feasible", "Decide goal feasibility");
  feasible->add_option("game", o.game, "Game file")->required();
  feasible->add_option("goal", o.goal, "Goal file")->required();
  feasible->add_flag("--witness", o.witness, "Construct a witness plan");
  feasible->add_option("--out", o.out, "Write the witness plan here");
  format(feasible);

  CLI::App* derive = app.add_subcommand("derive", "Build a hazing instance");
  derive->add_option("game", o.game, "Game file")->required();
  derive->add_option("goal", o.goal, "Goal file")->required();
  derive->add_option("--bound", o.bound, "Summed hazing bound P/Q (default: trivial bound)");
  derive->add_option("--out", o.out, "Write the instance here");
  format(derive);

  CLI::App* solve = app.add_subcommand("solve", "Minimum hazing by dynamic programming");
  solve->add_option("instance", o.instance, "Instance file")->required();
  solve->add_option("--game", o.game, "Game file, to assemble and verify the plan");
  solve->add_option("--goal", o.goal, "Goal file, to assemble and verify the plan");
  solve->add_option("--out", o.out, "Write the verified plan here");
  format(solve);

  CLI::App* check = app.add_subcommand("check", "Check a plan's stability");
  check->add_option("game", o.game, "Game file")->required();
  check->add_option("plan", o.plan, "Plan file")->required();
  check->add_flag("--limit", o.limit, "Limit (beta -> 1) check");
  check->add_option("--beta", o.beta, "Discount factor as an exact fraction P/Q");
  check->add_option("--variant", o.variant, "fixed or reassign");
  check->add_flag("--diagnostics", o.diagnostics, "Include per-round quantities");
  format(check);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive minimum hazing search");
  oracle->add_option("instance", o.instance, "Instance file")->required();
  oracle->add_option("--max-len", o.max_len, "Maximum prefix length")->required();
  oracle->add_flag("--cross-check", o.cross_check, "Compare against the solver");
  oracle->add_option("--node-budget", o.node_budget, "Abort after this many nodes");
  format(oracle);

  CLI::App* reduce = app.add_subcommand("reduce", "Reduce unbounded subset sum to a game");
  reduce->add_option("ussp", o.ussp, "USSP file")->required();
  reduce->add_option("--out-prefix", o.out_prefix, "Write PREFIX.{game,goal,instance}.json");
  format(reduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (analyze->parsed()) return Analyze(o);
    if (feasible->parsed()) return Feasible(o);
    if (derive->parsed()) return Derive(o);
    if (solve->parsed()) return Solve(o);
    if (check->parsed()) return Check(o);
    if (oracle->parsed()) return Oracle(o);
    if (reduce->parsed()) return Reduce(o);
  } catch (const OracleBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NoTrivialBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace
}  // namespace restarts

int main(int argc, char** argv) { return restarts::Main(argc, argv); }
