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

#include "test_support.h"

#include <algorithm>
#include <stdexcept>

namespace restarts::testing {
namespace {

Game Labeled(std::vector<std::string> rows, std::vector<std::string> cols,
             const std::vector<std::vector<Payoff>>& p1,
             const std::vector<std::vector<Payoff>>& p2) {
  return Game(std::move(rows), std::move(cols), PayoffMatrix::FromRows(p1),
              PayoffMatrix::FromRows(p2));
}

Game Symmetric(std::vector<std::string> actions,
               const std::vector<std::vector<Payoff>>& p1) {
  PayoffMatrix m = PayoffMatrix::FromRows(p1);
  return Game(actions, actions, m, m.Transposed());
}

// Payoff to `player` when it plays `own` against the opponent's action in
// `pair`.
Payoff PayoffWithOwnAction(const Game& game, Player player, ActionPair pair,
                           int own) {
  ActionPair changed = pair;
  (player == Player::kRow ? changed.row : changed.col) = own;
  return game.payoff(player, changed);
}

int NumOwnActions(const Game& game, Player player) {
  return player == Player::kRow ? game.num_rows() : game.num_cols();
}

Rational Power(const Rational& base, std::int64_t exponent) {
  Rational result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

// sum_{t<k} beta^t p(sigma_t) + beta^k p(own action a against sigma_k), for
// every k < horizon and every own action a.
std::vector<std::vector<Rational>> OneRoundDeviationValues(
    const Game& game, const SequencePlan& plan, const Rational& beta,
    Player player, std::int64_t horizon) {
  std::vector<std::vector<Rational>> values(horizon);
  Rational followed = 0;
  Rational power = 1;
  for (std::int64_t k = 0; k < horizon; ++k) {
    const ActionPair pair = plan.At(k);
    for (int a = 0; a < NumOwnActions(game, player); ++a) {
      values[k].push_back(followed +
                          power * PayoffWithOwnAction(game, player, pair, a));
    }
    followed += power * game.payoff(player, pair);
    power *= beta;
  }
  return values;
}

}  // namespace

Game CooperationGame() {
  return Symmetric({"C1", "C2", "D"}, {{8, 0, 0}, {8, 2, 0}, {17, 11, 1}});
}

Game GroupProject() { return Symmetric({"T1", "T2"}, {{0, 1}, {1, 0}}); }

Game NoseGoes() {
  return Labeled({"C", "D", "H1", "H2"}, {"C", "D", "H1", "H2"},
                 {{99, 0, 0, 0}, {100, 0, 0, 0}, {0, 0, 0, 5}, {0, 0, 50, 0}},
                 {{99, 100, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 50}, {0, 0, 5, 0}});
}

Game Tightrope() {
  return Labeled({"r", "c"}, {"R", "C"}, {{1, -100}, {-100, 0}},
                 {{0, -100}, {-100, 1}});
}

Game DoomedToSuffer() {
  return Labeled({"P", "S"}, {"P", "S"}, {{1, 0}, {0, 0}}, {{0, 1}, {1, 1}});
}

Game RockPaperScissors() {
  return Labeled({"R", "P", "S"}, {"R", "P", "S"},
                 {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
                 {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

Game MatchingPennies() {
  return Labeled({"H", "T"}, {"H", "T"}, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}});
}

ActionPair Pair(const Game& game, const std::string& row,
                const std::string& col) {
  auto index = [](const std::vector<std::string>& labels,
                  const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("no action " + label);
    return static_cast<int>(it - labels.begin());
  };
  return {index(game.actions1(), row), index(game.actions2(), col)};
}

Rational DiscountedStream(const std::vector<Rational>& prefix,
                          const std::vector<Rational>& cycle,
                          const Rational& beta) {
  Rational total = 0;
  Rational power = 1;
  for (const Rational& value : prefix) {
    total += power * value;
    power *= beta;
  }
  Rational cycle_sum = 0;
  Rational cycle_power = 1;
  for (const Rational& value : cycle) {
    cycle_sum += cycle_power * value;
    cycle_power *= beta;
  }
  return total + power * cycle_sum / (1 - cycle_power);
}

Rational FollowValue(const Game& game, const SequencePlan& plan,
                     const Rational& beta, Player player) {
  std::vector<Rational> prefix, cycle;
  for (ActionPair pair : plan.ExpandedPrefix()) {
    prefix.emplace_back(game.payoff(player, pair));
  }
  for (ActionPair pair : plan.goal().pairs()) {
    cycle.emplace_back(game.payoff(player, pair));
  }
  return DiscountedStream(prefix, cycle, beta);
}

bool LiteralFixedRoleStable(const Game& game, const SequencePlan& plan,
                            const Rational& beta, std::int64_t horizon) {
  for (Player player : kPlayers) {
    const Rational follow = FollowValue(game, plan, beta, player);
    const auto deviations =
        OneRoundDeviationValues(game, plan, beta, player, horizon);
    Rational power = beta;  // beta^{k+1}
    for (std::int64_t k = 0; k < horizon; ++k) {
      for (const Rational& value : deviations[k]) {
        if (value + power * follow > follow) return false;
      }
      power *= beta;
    }
  }
  return true;
}

bool LiteralReassignmentStable(const Game& game, const SequencePlan& plan,
                               const Rational& beta, std::int64_t horizon) {
  std::vector<Rational> prefix, cycle;
  for (ActionPair pair : plan.ExpandedPrefix()) {
    prefix.emplace_back(game.Welfare(pair), 2);
  }
  for (ActionPair pair : plan.goal().pairs()) {
    cycle.emplace_back(game.Welfare(pair), 2);
  }
  const Rational averaged = DiscountedStream(prefix, cycle, beta);
  for (Player player : kPlayers) {
    const Rational follow = FollowValue(game, plan, beta, player);
    Rational followed = 0;
    for (std::int64_t k = 0; k < horizon; ++k) {
      const ActionPair pair = plan.At(k);
      Payoff best = game.payoff(player, pair);
      for (int a = 0; a < NumOwnActions(game, player); ++a) {
        best = std::max(best, PayoffWithOwnAction(game, player, pair, a));
      }
      const Rational lhs =
          followed + Power(beta, k) * best + Power(beta, k + 1) * averaged;
      if (lhs > follow) return false;
      followed += Power(beta, k) * game.payoff(player, pair);
    }
  }
  return true;
}

Rational BestTwoDeviationValue(const Game& game, const SequencePlan& plan,
                               const Rational& beta, Player player,
                               std::int64_t horizon) {
  const Rational follow = FollowValue(game, plan, beta, player);
  const auto once = OneRoundDeviationValues(game, plan, beta, player, horizon);
  bool first = true;
  Rational best;
  Rational power1 = beta;
  for (std::int64_t k1 = 0; k1 < horizon; ++k1, power1 *= beta) {
    for (const Rational& first_leg : once[k1]) {
      Rational power2 = beta;
      for (std::int64_t k2 = 0; k2 < horizon; ++k2, power2 *= beta) {
        for (const Rational& second_leg : once[k2]) {
          Rational value = first_leg + power1 * (second_leg + power2 * follow);
          if (first || value > best) {
            best = value;
            first = false;
          }
        }
      }
    }
  }
  return best;
}

Game RandomGame(std::mt19937_64& rng, int max_actions, Payoff lo, Payoff hi) {
  std::uniform_int_distribution<int> size(1, max_actions);
  std::uniform_int_distribution<Payoff> payoff(lo, hi);
  const int n1 = size(rng);
  const int n2 = size(rng);
  std::vector<std::vector<Payoff>> p1(n1, std::vector<Payoff>(n2));
  std::vector<std::vector<Payoff>> p2(n1, std::vector<Payoff>(n2));
  for (int r = 0; r < n1; ++r) {
    for (int c = 0; c < n2; ++c) {
      p1[r][c] = payoff(rng);
      p2[r][c] = payoff(rng);
    }
  }
  return Game::FromMatrices(p1, p2);
}

GoalSequence RandomMaxWelfareGoal(std::mt19937_64& rng, const Game& game,
                                  int max_len) {
  const std::vector<ActionPair> best = MaxWelfarePairs(game);
  std::uniform_int_distribution<int> length(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
  std::vector<ActionPair> pairs(length(rng));
  for (ActionPair& pair : pairs) pair = best[pick(rng)];
  return GoalSequence(std::move(pairs));
}

SequencePlan RandomPlan(std::mt19937_64& rng, const Game& game, int max_prefix,
                        int max_goal) {
  std::uniform_int_distribution<int> prefix_len(0, max_prefix);
  std::uniform_int_distribution<int> goal_len(1, max_goal);
  std::uniform_int_distribution<int> row(0, game.num_rows() - 1);
  std::uniform_int_distribution<int> col(0, game.num_cols() - 1);
  std::vector<ActionPair> prefix(prefix_len(rng));
  for (ActionPair& pair : prefix) pair = {row(rng), col(rng)};
  std::vector<ActionPair> goal(goal_len(rng));
  for (ActionPair& pair : goal) pair = {row(rng), col(rng)};
  return SequencePlan::FromPairs(prefix, GoalSequence(std::move(goal)));
}

std::optional<RandomInstance> RandomMaxSwInstance(std::mt19937_64& rng,
                                                  int max_actions, Payoff lo,
                                                  Payoff hi, int max_goal,
                                                  std::int64_t max_scaled_bound) {
  Game game = RandomGame(rng, max_actions, lo, hi);
  GoalSequence goal = RandomMaxWelfareGoal(rng, game, max_goal);
  const auto trivial = ComputeTrivialBound(game, goal);
  if (!trivial) return std::nullopt;
  const std::int64_t r = goal.length();
  const std::int64_t scaled = std::min(trivial->value.FloorAt(r), max_scaled_bound);
  if (scaled < 0) return std::nullopt;
  GenhazeInstance instance = DeriveInstance(game, goal, ScaledRational(scaled, r));
  return RandomInstance{std::move(game), std::move(goal), std::move(instance)};
}

}  // namespace restarts::testing
