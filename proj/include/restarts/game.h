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

#ifndef RESTARTS_GAME_H_
#define RESTARTS_GAME_H_

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "restarts/scaled_rational.h"

// Two-player normal-form games with integer payoffs, and the elementary
// per-pair quantities (deviation payoffs, goal values, welfare) that the
// stability, hazing and solver code is built on.

namespace restarts {

using Payoff = std::int64_t;

enum class Player { kRow = 0, kColumn = 1 };

inline int PlayerIndex(Player player) { return static_cast<int>(player); }
inline constexpr Player kPlayers[] = {Player::kRow, Player::kColumn};

struct ActionPair {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const ActionPair&, const ActionPair&) = default;
};

template <typename T>
using PerPlayer = std::pair<T, T>;

template <typename T>
const T& Get(const PerPlayer<T>& values, Player player) {
  return player == Player::kRow ? values.first : values.second;
}

// A row-major n1 x n2 matrix of payoffs.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(int rows, int cols, std::vector<Payoff> values);
  static PayoffMatrix FromRows(const std::vector<std::vector<Payoff>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Payoff operator()(int row, int col) const { return values_[row * cols_ + col]; }
  const std::vector<Payoff>& values() const { return values_; }

  PayoffMatrix Transposed() const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Payoff> values_;
};

// The game (p1, p2, A). Labels are decorative; identity is by index.
class Game {
 public:
  // Throws std::invalid_argument when dimensions are empty or inconsistent.
  Game(std::vector<std::string> actions1, std::vector<std::string> actions2,
       PayoffMatrix payoff1, PayoffMatrix payoff2);

  // Convenience constructor with generated labels ("r0", "c0", ...).
  static Game FromMatrices(const std::vector<std::vector<Payoff>>& payoff1,
                           const std::vector<std::vector<Payoff>>& payoff2);

  int num_rows() const { return payoff1_.rows(); }
  int num_cols() const { return payoff1_.cols(); }
  int num_pairs() const { return num_rows() * num_cols(); }

  const std::vector<std::string>& actions1() const { return actions1_; }
  const std::vector<std::string>& actions2() const { return actions2_; }
  const PayoffMatrix& payoff1() const { return payoff1_; }
  const PayoffMatrix& payoff2() const { return payoff2_; }

  bool Contains(ActionPair pair) const;
  void CheckPair(ActionPair pair) const;

  Payoff payoff(Player player, ActionPair pair) const;
  PerPlayer<Payoff> payoffs(ActionPair pair) const;
  Payoff Welfare(ActionPair pair) const;

  // All pairs in (row, col) index order.
  std::vector<ActionPair> Pairs() const;

  // The action player `player` would take in `pair` (row index for the row
  // player, column index for the column player).
  int OwnAction(Player player, ActionPair pair) const;
  const std::string& ActionLabel(Player player, int action) const;
  std::string PairLabel(ActionPair pair) const;

  // Largest minus smallest payoff over both matrices.
  Payoff PayoffSpread() const;

  // payoff2 is the transpose of payoff1 (requires a square game).
  bool IsSymmetric() const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<std::string> actions1_;
  std::vector<std::string> actions2_;
  PayoffMatrix payoff1_;
  PayoffMatrix payoff2_;
};

// gamma in A^r, repeated forever once the hazing period ends.
class GoalSequence {
 public:
  // Throws std::invalid_argument on an empty list.
  explicit GoalSequence(std::vector<ActionPair> pairs);

  int length() const { return static_cast<int>(pairs_.size()); }
  const std::vector<ActionPair>& pairs() const { return pairs_; }
  ActionPair operator[](int i) const { return pairs_[i]; }

  friend bool operator==(const GoalSequence&, const GoalSequence&) = default;

 private:
  std::vector<ActionPair> pairs_;
};

// d_a: the best payoff each player can get by a unilateral change of action
// against the opponent's action in `pair`. The maximum includes the current
// action, so d_i >= p_i(pair).
PerPlayer<Payoff> DeviationPayoffs(const Game& game, ActionPair pair);

// Own action attaining the deviation payoff; ties go to the lowest index.
int BestDeviation(const Game& game, Player player, ActionPair pair);

// Per-round average payoff of the goal sequence, exact at scale r.
PerPlayer<ScaledRational> GoalValue(const Game& game, const GoalSequence& goal);

std::vector<ActionPair> MaxWelfarePairs(const Game& game);
std::vector<ActionPair> PureNashPairs(const Game& game);

bool IsMaxWelfareGoal(const Game& game, const GoalSequence& goal);

}  // namespace restarts

#endif  // RESTARTS_GAME_H_
