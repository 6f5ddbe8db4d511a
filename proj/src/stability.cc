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

#include "restarts/stability.h"

#include <stdexcept>
#include <utility>

#include "restarts/genhaze.h"

namespace restarts {
namespace {

// Discounted values of one player's payoff stream under a fixed beta.
struct StreamValues {
  Rational whole;                     // U = value from round 0
  std::vector<Rational> prefix_tail;  // R_k for k < T
  std::vector<Rational> goal_tail;    // R at each goal phase
};

// p_i along the sequence, or the role-averaged payoff (p1 + p2) / 2.
using PayoffFn = Rational (*)(const Game&, Player, ActionPair);

Rational OwnPayoff(const Game& game, Player player, ActionPair pair) {
  return Rational(game.payoff(player, pair));
}

Rational AveragedPayoff(const Game& game, Player, ActionPair pair) {
  return Rational(game.Welfare(pair), 2);
}

StreamValues Evaluate(const Game& game, const std::vector<ActionPair>& prefix,
                      const GoalSequence& goal, const Rational& beta,
                      Player player, PayoffFn payoff) {
  const int r = goal.length();
  Rational beta_r = 1;
  for (int j = 0; j < r; ++j) beta_r *= beta;
  const Rational cycle_norm = 1 / (1 - beta_r);

  StreamValues values;
  values.goal_tail.resize(r);
  for (int phase = 0; phase < r; ++phase) {
    Rational sum = 0;
    Rational power = 1;
    for (int m = 0; m < r; ++m) {
      sum += power * payoff(game, player, goal[(phase + m) % r]);
      power *= beta;
    }
    values.goal_tail[phase] = sum * cycle_norm;
  }

  const std::size_t T = prefix.size();
  values.prefix_tail.resize(T);
  Rational tail = values.goal_tail[0];
  for (std::size_t k = T; k-- > 0;) {
    tail = payoff(game, player, prefix[k]) + beta * tail;
    values.prefix_tail[k] = tail;
  }
  values.whole = T > 0 ? values.prefix_tail[0] : values.goal_tail[0];
  return values;
}

void CheckBeta(const Rational& beta) {
  if (beta <= 0 || beta >= 1) {
    throw std::invalid_argument("discount factor must lie strictly in (0, 1), got " +
                                RationalToString(beta));
  }
}

}  // namespace

SequencePlan::SequencePlan(std::vector<PrefixRun> prefix, GoalSequence goal)
    : prefix_(std::move(prefix)), goal_(std::move(goal)) {
  for (const PrefixRun& run : prefix_) {
    if (run.count < 1) {
      throw std::invalid_argument("SequencePlan: repeat counts must be >= 1");
    }
  }
}

SequencePlan SequencePlan::FromPairs(const std::vector<ActionPair>& prefix,
                                     GoalSequence goal) {
  std::vector<PrefixRun> runs;
  for (ActionPair pair : prefix) {
    if (!runs.empty() && runs.back().pair == pair) {
      ++runs.back().count;
    } else {
      runs.push_back({pair, 1});
    }
  }
  return SequencePlan(std::move(runs), std::move(goal));
}

std::int64_t SequencePlan::prefix_length() const {
  std::int64_t total = 0;
  for (const PrefixRun& run : prefix_) total += run.count;
  return total;
}

std::vector<ActionPair> SequencePlan::ExpandedPrefix() const {
  std::vector<ActionPair> pairs;
  pairs.reserve(prefix_length());
  for (const PrefixRun& run : prefix_) pairs.insert(pairs.end(), run.count, run.pair);
  return pairs;
}

ActionPair SequencePlan::At(std::int64_t k) const {
  for (const PrefixRun& run : prefix_) {
    if (k < run.count) return run.pair;
    k -= run.count;
  }
  return goal_[static_cast<int>(k % goal_.length())];
}

std::string StatusName(StabilityStatus status) {
  switch (status) {
    case StabilityStatus::kStable:
      return "stable";
    case StabilityStatus::kUnstable:
      return "unstable";
    case StabilityStatus::kBoundary:
      return "boundary";
  }
  return "unknown";
}

StabilityVerdict CheckFinite(const Game& game, const SequencePlan& plan,
                             const Rational& beta, Variant variant) {
  CheckBeta(beta);
  const std::vector<ActionPair> prefix = plan.ExpandedPrefix();
  const GoalSequence& goal = plan.goal();
  for (ActionPair pair : prefix) game.CheckPair(pair);
  for (ActionPair pair : goal.pairs()) game.CheckPair(pair);

  const std::int64_t T = static_cast<std::int64_t>(prefix.size());
  const int r = goal.length();

  PerPlayer<StreamValues> own = {
      Evaluate(game, prefix, goal, beta, Player::kRow, OwnPayoff),
      Evaluate(game, prefix, goal, beta, Player::kColumn, OwnPayoff)};
  Rational averaged_restart;
  if (variant == Variant::kRandomReassignment) {
    averaged_restart =
        Evaluate(game, prefix, goal, beta, Player::kRow, AveragedPayoff).whole;
  }

  StabilityVerdict verdict;
  PerPlayer<Payoff> followed = {0, 0};
  for (std::int64_t k = 0; k < T + r; ++k) {
    const ActionPair pair = k < T ? prefix[k] : goal[static_cast<int>(k - T)];
    const PerPlayer<Payoff> deviation = DeviationPayoffs(game, pair);
    for (Player player : kPlayers) {
      const StreamValues& values = Get(own, player);
      const Rational& stay =
          k < T ? values.prefix_tail[k] : values.goal_tail[k - T];
      const Rational& restart = variant == Variant::kRandomReassignment
                                    ? averaged_restart
                                    : values.whole;
      const Payoff d = Get(deviation, player);

      StepDiagnostic diag;
      diag.step = k;
      diag.player = player;
      diag.deviation_payoff = d;
      diag.restart_cycle_average = Rational(Get(followed, player) + d, k + 1);
      diag.stay_value = stay;
      diag.deviate_value = d + beta * restart;
      const Rational margin = diag.deviate_value - diag.stay_value;
      if (margin > 0 && !verdict.witness) {
        verdict.status = StabilityStatus::kUnstable;
        verdict.witness =
            Witness{k, player, BestDeviation(game, player, pair), margin};
      }
      verdict.diagnostics.push_back(std::move(diag));
    }
    followed.first += game.payoff1()(pair.row, pair.col);
    followed.second += game.payoff2()(pair.row, pair.col);
  }
  return verdict;
}

StabilityVerdict CheckLimit(const Game& game, const SequencePlan& plan) {
  const GoalSequence& goal = plan.goal();
  const std::vector<PairCost> table = HazingThresholdTable(game, goal);
  const PerPlayer<ScaledRational> theta = GoalThreshold(game, goal);
  const std::int64_t r = goal.length();
  auto cost = [&](ActionPair pair) -> const PairCost& {
    game.CheckPair(pair);
    return table[pair.row * game.num_cols() + pair.col];
  };

  StabilityVerdict verdict;
  std::optional<Witness> violation;
  std::optional<Witness> tie;
  auto record = [&](std::int64_t step, Player player, ActionPair pair,
                    const ScaledRational& required,
                    const ScaledRational& accumulated, bool goal_entry) {
    verdict.limit_checks.push_back({step, player, goal_entry,
                                    ToRational(accumulated),
                                    ToRational(required)});
    // Deviation is profitable in the limit unless accumulated > required.
    const ScaledRational margin = required - accumulated;
    if (margin < ScaledRational(0)) return;
    Witness witness{step, player, BestDeviation(game, player, pair),
                    ToRational(margin)};
    if (margin > ScaledRational(0)) {
      if (!violation) violation = witness;
    } else if (!tie) {
      tie = witness;
    }
  };

  PerPlayer<ScaledRational> running = {ScaledRational(0, r), ScaledRational(0, r)};
  std::int64_t step = 0;
  for (const PrefixRun& run : plan.prefix()) {
    const PairCost& c = cost(run.pair);
    // Every occurrence is checked; a pair with negative hazing can fall back
    // below its own threshold later in the run.
    for (std::int64_t i = 0; i < run.count; ++i, ++step) {
      for (Player player : kPlayers) {
        record(step, player, run.pair, Get(c.threshold, player),
               Get(running, player), false);
      }
      running.first += c.hazing.first;
      running.second += c.hazing.second;
    }
  }
  for (Player player : kPlayers) {
    const int phase = GoalThresholdPhase(game, goal, player);
    record(step + phase, player, goal[phase], Get(theta, player),
           Get(running, player), true);
  }

  if (violation) {
    verdict.status = StabilityStatus::kUnstable;
    verdict.witness = violation;
  } else if (tie) {
    verdict.status = StabilityStatus::kBoundary;
    verdict.witness = tie;
  }
  return verdict;
}

std::vector<BetaVerdict> SweepBeta(const Game& game, const SequencePlan& plan,
                                   const std::vector<Rational>& betas,
                                   Variant variant) {
  for (const Rational& beta : betas) CheckBeta(beta);
  std::vector<BetaVerdict> results;
  results.reserve(betas.size());
  for (const Rational& beta : betas) {
    results.push_back({beta, CheckFinite(game, plan, beta, variant)});
  }
  return results;
}

std::vector<Rational> DyadicTailGrid(int first, int last) {
  std::vector<Rational> grid;
  for (int k = first; k <= last; ++k) {
    grid.push_back(1 - Rational(1, BigInt(1) << k));
  }
  return grid;
}

}  // namespace restarts
