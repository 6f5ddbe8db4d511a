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

#include "restarts/existence.h"

#include <algorithm>
#include <stdexcept>

namespace restarts {

std::string FeasibilityName(Feasibility status) {
  switch (status) {
    case Feasibility::kFeasible:
      return "feasible";
    case Feasibility::kInfeasible:
      return "infeasible";
    case Feasibility::kUnknown:
      return "unknown";
  }
  return "unknown";
}

FeasibilityVerdict GoalFeasibility(const Game& game, const GoalSequence& goal) {
  const auto [v1, v2] = GoalValue(game, goal);
  const ScaledRational zero(0);
  FeasibilityVerdict verdict;
  bool every_pair_exceeded = true;
  for (ActionPair pair : game.Pairs()) {
    const auto [d1, d2] = DeviationPayoffs(game, pair);
    PairMargin margin{pair, {v1 - ScaledRational(d1), v2 - ScaledRational(d2)}};
    if (!verdict.witness && margin.slack.first > zero &&
        margin.slack.second > zero) {
      verdict.witness = pair;
    }
    if (!(margin.slack.first < zero || margin.slack.second < zero)) {
      every_pair_exceeded = false;
    }
    verdict.detail.push_back(margin);
  }
  if (verdict.witness) {
    verdict.status = Feasibility::kFeasible;
  } else if (every_pair_exceeded) {
    verdict.status = Feasibility::kInfeasible;
  } else {
    verdict.status = Feasibility::kUnknown;
  }
  return verdict;
}

SequencePlan ConstructWitnessPlan(const Game& game, const GoalSequence& goal,
                                  ActionPair pair) {
  game.CheckPair(pair);
  const auto [v1, v2] = GoalValue(game, goal);
  const auto [d1, d2] = DeviationPayoffs(game, pair);
  const ScaledRational delta =
      std::min(v1 - ScaledRational(d1), v2 - ScaledRational(d2));
  if (delta <= ScaledRational(0)) {
    throw std::invalid_argument(
        "witness pair " + game.PairLabel(pair) +
        " must have deviation payoffs strictly below both goal values");
  }
  // T * delta > r * kappa with delta = num / scale, so
  // T = floor(r * kappa * scale / num) + 1.
  const std::int64_t r = goal.length();
  const std::int64_t kappa = game.PayoffSpread();
  const std::int64_t T = (r * kappa * delta.scale()) / delta.num() + 1;
  return SequencePlan({PrefixRun{pair, T}}, goal);
}

std::optional<GoalSequence> FairAlternatingGoal(const Game& game) {
  if (!game.IsSymmetric()) return std::nullopt;
  const ActionPair best = MaxWelfarePairs(game).front();
  // d_i < welfare / 2  <=>  2 * d_i < welfare.
  const Payoff welfare = game.Welfare(best);
  for (ActionPair pair : game.Pairs()) {
    const auto [d1, d2] = DeviationPayoffs(game, pair);
    if (2 * d1 < welfare && 2 * d2 < welfare) {
      return GoalSequence({best, ActionPair{best.col, best.row}});
    }
  }
  return std::nullopt;
}

std::optional<SequencePlan> NashPlan(const Game& game) {
  const std::vector<ActionPair> nash = PureNashPairs(game);
  if (nash.empty()) return std::nullopt;
  return SequencePlan({}, GoalSequence({nash.front()}));
}

}  // namespace restarts
