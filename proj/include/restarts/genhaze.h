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

#ifndef RESTARTS_GENHAZE_H_
#define RESTARTS_GENHAZE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "restarts/game.h"
#include "restarts/scaled_rational.h"

// The minimum-hazing optimization instance induced by a game and a goal
// sequence: per-pair hazing costs h and thresholds t, the goal thresholds
// theta and a budget on the summed total hazing.
//
// For a goal gamma of length r with goal value v:
//   h_a = v - p(a)         what a round of `a` costs relative to the goal
//   t_a = d_a - v          hazing that must be strictly exceeded before `a`
//   theta = max_k ( t_{gamma_k} - sum_{j<k} h_{gamma_j} )
// All of these lie on the grid (1/r) * Z.

namespace restarts {

struct PairCost {
  ActionPair pair;
  PerPlayer<ScaledRational> hazing;
  PerPlayer<ScaledRational> threshold;

  friend bool operator==(const PairCost&, const PairCost&) = default;
};

class NoTrivialBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenhazeInstance {
 public:
  // Validates and rescales every value to `scale`. Throws
  // std::invalid_argument if a value is off the (1/scale) grid, the cost
  // table does not cover a full n1 x n2 grid in (row, col) order, or
  // max_sw is set while some pair has h1 + h2 < 0.
  GenhazeInstance(int num_rows, int num_cols, std::vector<PairCost> costs,
                  PerPlayer<ScaledRational> theta, ScaledRational bound,
                  std::int64_t scale, bool max_sw,
                  std::vector<std::string> actions1 = {},
                  std::vector<std::string> actions2 = {});

  int num_rows() const { return num_rows_; }
  int num_cols() const { return num_cols_; }
  const std::vector<PairCost>& costs() const { return costs_; }
  const PairCost& cost(ActionPair pair) const {
    return costs_[pair.row * num_cols_ + pair.col];
  }
  const PerPlayer<ScaledRational>& theta() const { return theta_; }
  const ScaledRational& bound() const { return bound_; }
  std::int64_t scale() const { return scale_; }
  bool max_sw() const { return max_sw_; }
  const std::vector<std::string>& actions1() const { return actions1_; }
  const std::vector<std::string>& actions2() const { return actions2_; }

  std::string PairLabel(ActionPair pair) const;

  // Same instance with a different budget.
  GenhazeInstance WithBound(ScaledRational bound) const;

  friend bool operator==(const GenhazeInstance& a, const GenhazeInstance& b);

 private:
  int num_rows_;
  int num_cols_;
  std::vector<PairCost> costs_;
  PerPlayer<ScaledRational> theta_;
  ScaledRational bound_;
  std::int64_t scale_;
  bool max_sw_;
  std::vector<std::string> actions1_;
  std::vector<std::string> actions2_;
};

// (h, t) for every pair in (row, col) order, at scale r.
std::vector<PairCost> HazingThresholdTable(const Game& game,
                                           const GoalSequence& goal);

PerPlayer<ScaledRational> GoalThreshold(const Game& game,
                                        const GoalSequence& goal);

// Index of the goal phase attaining theta for `player` (first on ties).
int GoalThresholdPhase(const Game& game, const GoalSequence& goal,
                       Player player);

struct TrivialBound {
  ScaledRational value;
  ActionPair pair;
};

// Budget reached by hazing with a single pair `a` whose deviation payoffs are
// strictly below the goal value for both players:
//   theta1 + theta2 + h_a1 + h_a2,
// minimized over such pairs with ties to the lowest (row, col).
// nullopt when no pair qualifies.
std::optional<TrivialBound> ComputeTrivialBound(const Game& game,
                                                const GoalSequence& goal);

// Assembles the instance. With no bound given the trivial bound is used, and
// NoTrivialBoundError is thrown if none exists. Non-max-welfare goals are
// accepted and flagged with max_sw = false.
GenhazeInstance DeriveInstance(const Game& game, const GoalSequence& goal,
                               std::optional<ScaledRational> bound = {});

}  // namespace restarts

#endif  // RESTARTS_GENHAZE_H_
