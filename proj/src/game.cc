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

#include "restarts/game.h"

#include <algorithm>
#include <stdexcept>

namespace restarts {

PayoffMatrix::PayoffMatrix(int rows, int cols, std::vector<Payoff> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("PayoffMatrix: dimensions must be positive");
  }
  if (values_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("PayoffMatrix: value count does not match shape");
  }
}

PayoffMatrix PayoffMatrix::FromRows(
    const std::vector<std::vector<Payoff>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("PayoffMatrix: empty matrix");
  }
  const int cols = static_cast<int>(rows.front().size());
  std::vector<Payoff> values;
  values.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("PayoffMatrix: ragged rows");
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return PayoffMatrix(static_cast<int>(rows.size()), cols, std::move(values));
}

PayoffMatrix PayoffMatrix::Transposed() const {
  std::vector<Payoff> values(values_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) values[c * rows_ + r] = (*this)(r, c);
  }
  return PayoffMatrix(cols_, rows_, std::move(values));
}

Game::Game(std::vector<std::string> actions1,
           std::vector<std::string> actions2, PayoffMatrix payoff1,
           PayoffMatrix payoff2)
    : actions1_(std::move(actions1)),
      actions2_(std::move(actions2)),
      payoff1_(std::move(payoff1)),
      payoff2_(std::move(payoff2)) {
  if (actions1_.empty() || actions2_.empty()) {
    throw std::invalid_argument("Game: each player needs at least one action");
  }
  const int n1 = static_cast<int>(actions1_.size());
  const int n2 = static_cast<int>(actions2_.size());
  if (payoff1_.rows() != n1 || payoff1_.cols() != n2 ||
      payoff2_.rows() != n1 || payoff2_.cols() != n2) {
    throw std::invalid_argument(
        "Game: payoff matrices must both be |actions1| x |actions2|");
  }
}

Game Game::FromMatrices(const std::vector<std::vector<Payoff>>& payoff1,
                        const std::vector<std::vector<Payoff>>& payoff2) {
  PayoffMatrix m1 = PayoffMatrix::FromRows(payoff1);
  PayoffMatrix m2 = PayoffMatrix::FromRows(payoff2);
  std::vector<std::string> a1, a2;
  for (int r = 0; r < m1.rows(); ++r) a1.push_back("r" + std::to_string(r));
  for (int c = 0; c < m1.cols(); ++c) a2.push_back("c" + std::to_string(c));
  return Game(std::move(a1), std::move(a2), std::move(m1), std::move(m2));
}

bool Game::Contains(ActionPair pair) const {
  return pair.row >= 0 && pair.row < num_rows() && pair.col >= 0 &&
         pair.col < num_cols();
}

void Game::CheckPair(ActionPair pair) const {
  if (!Contains(pair)) {
    throw std::out_of_range("action pair (" + std::to_string(pair.row) + "," +
                            std::to_string(pair.col) + ") outside " +
                            std::to_string(num_rows()) + "x" +
                            std::to_string(num_cols()) + " game");
  }
}

Payoff Game::payoff(Player player, ActionPair pair) const {
  return player == Player::kRow ? payoff1_(pair.row, pair.col)
                                : payoff2_(pair.row, pair.col);
}

PerPlayer<Payoff> Game::payoffs(ActionPair pair) const {
  return {payoff1_(pair.row, pair.col), payoff2_(pair.row, pair.col)};
}

Payoff Game::Welfare(ActionPair pair) const {
  return payoff1_(pair.row, pair.col) + payoff2_(pair.row, pair.col);
}

std::vector<ActionPair> Game::Pairs() const {
  std::vector<ActionPair> pairs;
  pairs.reserve(num_pairs());
  for (int r = 0; r < num_rows(); ++r) {
    for (int c = 0; c < num_cols(); ++c) pairs.push_back({r, c});
  }
  return pairs;
}

int Game::OwnAction(Player player, ActionPair pair) const {
  return player == Player::kRow ? pair.row : pair.col;
}

const std::string& Game::ActionLabel(Player player, int action) const {
  return player == Player::kRow ? actions1_.at(action) : actions2_.at(action);
}

std::string Game::PairLabel(ActionPair pair) const {
  return "(" + actions1_.at(pair.row) + "," + actions2_.at(pair.col) + ")";
}

Payoff Game::PayoffSpread() const {
  auto [min1, max1] = std::minmax_element(payoff1_.values().begin(),
                                          payoff1_.values().end());
  auto [min2, max2] = std::minmax_element(payoff2_.values().begin(),
                                          payoff2_.values().end());
  return std::max(*max1, *max2) - std::min(*min1, *min2);
}

bool Game::IsSymmetric() const {
  return num_rows() == num_cols() && payoff2_ == payoff1_.Transposed();
}

GoalSequence::GoalSequence(std::vector<ActionPair> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) {
    throw std::invalid_argument("GoalSequence: goal must be nonempty");
  }
}

PerPlayer<Payoff> DeviationPayoffs(const Game& game, ActionPair pair) {
  game.CheckPair(pair);
  Payoff d1 = game.payoff1()(0, pair.col);
  for (int r = 1; r < game.num_rows(); ++r) {
    d1 = std::max(d1, game.payoff1()(r, pair.col));
  }
  Payoff d2 = game.payoff2()(pair.row, 0);
  for (int c = 1; c < game.num_cols(); ++c) {
    d2 = std::max(d2, game.payoff2()(pair.row, c));
  }
  return {d1, d2};
}

int BestDeviation(const Game& game, Player player, ActionPair pair) {
  game.CheckPair(pair);
  int best = 0;
  if (player == Player::kRow) {
    for (int r = 1; r < game.num_rows(); ++r) {
      if (game.payoff1()(r, pair.col) > game.payoff1()(best, pair.col)) best = r;
    }
  } else {
    for (int c = 1; c < game.num_cols(); ++c) {
      if (game.payoff2()(pair.row, c) > game.payoff2()(pair.row, best)) best = c;
    }
  }
  return best;
}

PerPlayer<ScaledRational> GoalValue(const Game& game, const GoalSequence& goal) {
  Payoff sum1 = 0;
  Payoff sum2 = 0;
  for (ActionPair pair : goal.pairs()) {
    game.CheckPair(pair);
    sum1 += game.payoff1()(pair.row, pair.col);
    sum2 += game.payoff2()(pair.row, pair.col);
  }
  return {ScaledRational(sum1, goal.length()),
          ScaledRational(sum2, goal.length())};
}

std::vector<ActionPair> MaxWelfarePairs(const Game& game) {
  std::vector<ActionPair> best;
  Payoff best_welfare = 0;
  for (ActionPair pair : game.Pairs()) {
    Payoff welfare = game.Welfare(pair);
    if (best.empty() || welfare > best_welfare) {
      best = {pair};
      best_welfare = welfare;
    } else if (welfare == best_welfare) {
      best.push_back(pair);
    }
  }
  return best;
}

std::vector<ActionPair> PureNashPairs(const Game& game) {
  std::vector<ActionPair> nash;
  for (ActionPair pair : game.Pairs()) {
    if (DeviationPayoffs(game, pair) == game.payoffs(pair)) nash.push_back(pair);
  }
  return nash;
}

bool IsMaxWelfareGoal(const Game& game, const GoalSequence& goal) {
  const Payoff best = game.Welfare(MaxWelfarePairs(game).front());
  return std::all_of(goal.pairs().begin(), goal.pairs().end(),
                     [&](ActionPair pair) {
                       game.CheckPair(pair);
                       return game.Welfare(pair) == best;
                     });
}

}  // namespace restarts
