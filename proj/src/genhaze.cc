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

#include "restarts/genhaze.h"

#include <utility>

namespace restarts {
namespace {

PerPlayer<ScaledRational> Rescale(const PerPlayer<ScaledRational>& values,
                                  std::int64_t scale) {
  return {values.first.Rescaled(scale), values.second.Rescaled(scale)};
}

ScaledRational PhaseThreshold(const std::vector<PairCost>& table,
                              const Game& game, const GoalSequence& goal,
                              Player player, int phase) {
  auto cost = [&](int k) -> const PairCost& {
    ActionPair pair = goal[k];
    return table[pair.row * game.num_cols() + pair.col];
  };
  ScaledRational value = Get(cost(phase).threshold, player);
  for (int j = 0; j < phase; ++j) value -= Get(cost(j).hazing, player);
  return value;
}

}  // namespace

GenhazeInstance::GenhazeInstance(int num_rows, int num_cols,
                                 std::vector<PairCost> costs,
                                 PerPlayer<ScaledRational> theta,
                                 ScaledRational bound, std::int64_t scale,
                                 bool max_sw, std::vector<std::string> actions1,
                                 std::vector<std::string> actions2)
    : num_rows_(num_rows),
      num_cols_(num_cols),
      costs_(std::move(costs)),
      theta_(Rescale(theta, scale)),
      bound_(bound.Rescaled(scale)),
      scale_(scale),
      max_sw_(max_sw),
      actions1_(std::move(actions1)),
      actions2_(std::move(actions2)) {
  if (num_rows < 1 || num_cols < 1) {
    throw std::invalid_argument("GenhazeInstance: empty action grid");
  }
  if (costs_.size() != static_cast<std::size_t>(num_rows) * num_cols) {
    throw std::invalid_argument("GenhazeInstance: cost table size mismatch");
  }
  for (int r = 0; r < num_rows; ++r) {
    for (int c = 0; c < num_cols; ++c) {
      PairCost& cost = costs_[r * num_cols + c];
      if (cost.pair != ActionPair{r, c}) {
        throw std::invalid_argument(
            "GenhazeInstance: cost table must list pairs in (row, col) order");
      }
      cost.hazing = Rescale(cost.hazing, scale);
      cost.threshold = Rescale(cost.threshold, scale);
      if (max_sw && cost.hazing.first + cost.hazing.second < ScaledRational(0)) {
        throw std::invalid_argument(
            "GenhazeInstance: max_sw instance has a pair with negative summed "
            "hazing");
      }
    }
  }
  if (actions1_.empty()) {
    for (int r = 0; r < num_rows; ++r) actions1_.push_back("r" + std::to_string(r));
  }
  if (actions2_.empty()) {
    for (int c = 0; c < num_cols; ++c) actions2_.push_back("c" + std::to_string(c));
  }
  if (static_cast<int>(actions1_.size()) != num_rows ||
      static_cast<int>(actions2_.size()) != num_cols) {
    throw std::invalid_argument("GenhazeInstance: label count mismatch");
  }
}

std::string GenhazeInstance::PairLabel(ActionPair pair) const {
  return "(" + actions1_.at(pair.row) + "," + actions2_.at(pair.col) + ")";
}

GenhazeInstance GenhazeInstance::WithBound(ScaledRational bound) const {
  GenhazeInstance copy = *this;
  copy.bound_ = bound.Rescaled(scale_);
  return copy;
}

bool operator==(const GenhazeInstance& a, const GenhazeInstance& b) {
  return a.num_rows_ == b.num_rows_ && a.num_cols_ == b.num_cols_ &&
         a.costs_ == b.costs_ && a.theta_ == b.theta_ &&
         a.bound_ == b.bound_ && a.scale_ == b.scale_ &&
         a.max_sw_ == b.max_sw_ && a.actions1_ == b.actions1_ &&
         a.actions2_ == b.actions2_;
}

std::vector<PairCost> HazingThresholdTable(const Game& game,
                                           const GoalSequence& goal) {
  const auto [v1, v2] = GoalValue(game, goal);
  const std::int64_t r = goal.length();
  std::vector<PairCost> table;
  table.reserve(game.num_pairs());
  for (ActionPair pair : game.Pairs()) {
    const auto [p1, p2] = game.payoffs(pair);
    const auto [d1, d2] = DeviationPayoffs(game, pair);
    PairCost cost;
    cost.pair = pair;
    cost.hazing = {v1 - ScaledRational(p1).Rescaled(r),
                   v2 - ScaledRational(p2).Rescaled(r)};
    cost.threshold = {ScaledRational(d1).Rescaled(r) - v1,
                      ScaledRational(d2).Rescaled(r) - v2};
    table.push_back(cost);
  }
  return table;
}

int GoalThresholdPhase(const Game& game, const GoalSequence& goal,
                       Player player) {
  const std::vector<PairCost> table = HazingThresholdTable(game, goal);
  int best = 0;
  ScaledRational best_value = PhaseThreshold(table, game, goal, player, 0);
  for (int k = 1; k < goal.length(); ++k) {
    ScaledRational value = PhaseThreshold(table, game, goal, player, k);
    if (value > best_value) {
      best = k;
      best_value = value;
    }
  }
  return best;
}

PerPlayer<ScaledRational> GoalThreshold(const Game& game,
                                        const GoalSequence& goal) {
  const std::vector<PairCost> table = HazingThresholdTable(game, goal);
  PerPlayer<ScaledRational> theta;
  for (Player player : kPlayers) {
    const int phase = GoalThresholdPhase(game, goal, player);
    ScaledRational value = PhaseThreshold(table, game, goal, player, phase);
    (player == Player::kRow ? theta.first : theta.second) = value;
  }
  return theta;
}

std::optional<TrivialBound> ComputeTrivialBound(const Game& game,
                                                const GoalSequence& goal) {
  const auto [v1, v2] = GoalValue(game, goal);
  const auto [theta1, theta2] = GoalThreshold(game, goal);
  const std::vector<PairCost> table = HazingThresholdTable(game, goal);
  std::optional<TrivialBound> best;
  for (const PairCost& cost : table) {
    const auto [d1, d2] = DeviationPayoffs(game, cost.pair);
    if (!(ScaledRational(d1) < v1 && ScaledRational(d2) < v2)) continue;
    ScaledRational value =
        theta1 + theta2 + cost.hazing.first + cost.hazing.second;
    if (!best || value < best->value) best = TrivialBound{value, cost.pair};
  }
  return best;
}

GenhazeInstance DeriveInstance(const Game& game, const GoalSequence& goal,
                               std::optional<ScaledRational> bound) {
  if (!bound) {
    std::optional<TrivialBound> trivial = ComputeTrivialBound(game, goal);
    if (!trivial) {
      throw NoTrivialBoundError(
          "no action pair has both deviation payoffs strictly below the goal "
          "value; pass an explicit bound");
    }
    bound = trivial->value;
  }
  const std::int64_t r = goal.length();
  // A budget off the 1/r grid is equivalent to its floor on the grid, since
  // every reachable hazing total lies on it.
  ScaledRational budget(bound->FloorAt(r), r);
  return GenhazeInstance(game.num_rows(), game.num_cols(),
                         HazingThresholdTable(game, goal),
                         GoalThreshold(game, goal), budget, r,
                         IsMaxWelfareGoal(game, goal), game.actions1(),
                         game.actions2());
}

}  // namespace restarts
