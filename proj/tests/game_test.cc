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
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace restarts {
namespace {

using testing::CooperationGame;
using testing::GroupProject;
using testing::MatchingPennies;
using testing::NoseGoes;
using testing::Pair;

using Pairs = std::vector<ActionPair>;

TEST(ScaledRationalTest, ArithmeticAndOrdering) {
  ScaledRational a(17, 2);
  ScaledRational b(-15, 2);
  EXPECT_EQ(a + b, ScaledRational(1));
  EXPECT_EQ(a - b, ScaledRational(16));
  EXPECT_EQ(ScaledRational(14, 2), ScaledRational(7));
  EXPECT_FALSE(ScaledRational(14, 2).IdenticalTo(ScaledRational(7)));
  EXPECT_LT(ScaledRational(1, 3), ScaledRational(1, 2));
  EXPECT_EQ(ScaledRational(1, 2) + ScaledRational(1, 3), ScaledRational(5, 6));
  EXPECT_EQ((ScaledRational(1, 2) + ScaledRational(1, 3)).scale(), 6);
  EXPECT_EQ(a.ToString(), "17/2");
  EXPECT_EQ(ScaledRational(-6, 2).ToString(), "-3");
}

TEST(ScaledRationalTest, RescaleAndFloor) {
  EXPECT_TRUE(ScaledRational(3).Rescaled(2).IdenticalTo(ScaledRational(6, 2)));
  EXPECT_THROW(ScaledRational(1, 2).Rescaled(3), std::invalid_argument);
  EXPECT_EQ(ScaledRational(47, 2).FloorAt(1), 23);
  EXPECT_EQ(ScaledRational(-1, 2).FloorAt(1), -1);
  EXPECT_EQ(ScaledRational(-47, 2).FloorAt(2), -47);
  EXPECT_THROW(ScaledRational(1, 0), std::invalid_argument);
}

TEST(GameTest, RejectsInconsistentShapes) {
  EXPECT_THROW(Game({"a"}, {"x", "y"}, PayoffMatrix::FromRows({{1}}),
                    PayoffMatrix::FromRows({{1}})),
               std::invalid_argument);
  EXPECT_THROW(Game({}, {"x"}, PayoffMatrix(), PayoffMatrix()),
               std::invalid_argument);
  EXPECT_THROW(PayoffMatrix::FromRows({{1, 2}, {3}}), std::invalid_argument);
  EXPECT_THROW(GoalSequence({}), std::invalid_argument);
}

TEST(DeviationPayoffsTest, CooperationGame) {
  const Game game = CooperationGame();
  EXPECT_EQ(DeviationPayoffs(game, Pair(game, "C1", "C1")),
            (PerPlayer<Payoff>{17, 17}));
  EXPECT_EQ(DeviationPayoffs(game, Pair(game, "D", "D")),
            (PerPlayer<Payoff>{1, 1}));
  EXPECT_EQ(BestDeviation(game, Player::kRow, Pair(game, "C1", "C1")), 2);
  EXPECT_THROW(DeviationPayoffs(game, {3, 0}), std::out_of_range);
}

TEST(DeviationPayoffsTest, SingleActionGame) {
  const Game game = Game::FromMatrices({{5}}, {{5}});
  EXPECT_EQ(DeviationPayoffs(game, {0, 0}), (PerPlayer<Payoff>{5, 5}));
  EXPECT_EQ(MaxWelfarePairs(game), (Pairs{{0, 0}}));
}

TEST(GoalValueTest, PaperExamples) {
  const Game game = CooperationGame();
  const GoalSequence alternating(
      {Pair(game, "C1", "D"), Pair(game, "D", "C1")});
  const auto [v1, v2] = GoalValue(game, alternating);
  EXPECT_EQ(v1, ScaledRational(17, 2));
  EXPECT_EQ(v2, ScaledRational(17, 2));
  EXPECT_EQ(v1.scale(), 2);

  const Game nose = NoseGoes();
  const auto value = GoalValue(nose, GoalSequence({Pair(nose, "C", "C")}));
  EXPECT_EQ(value, (PerPlayer<ScaledRational>{ScaledRational(99), ScaledRational(99)}));

  const ActionPair dd = Pair(game, "D", "D");
  EXPECT_EQ(GoalValue(game, GoalSequence({dd, dd, dd})),
            (PerPlayer<ScaledRational>{ScaledRational(1), ScaledRational(1)}));
}

TEST(WelfareTest, MaxWelfareAndNash) {
  const Game game = CooperationGame();
  EXPECT_EQ(MaxWelfarePairs(game),
            (Pairs{Pair(game, "C1", "D"), Pair(game, "D", "C1")}));
  EXPECT_EQ(game.Welfare(Pair(game, "C1", "D")), 17);
  EXPECT_EQ(PureNashPairs(game), (Pairs{Pair(game, "D", "D")}));

  const Game nose = NoseGoes();
  EXPECT_EQ(MaxWelfarePairs(nose), (Pairs{Pair(nose, "C", "C")}));
  EXPECT_EQ(nose.Welfare(Pair(nose, "C", "C")), 198);

  const Game project = GroupProject();
  EXPECT_EQ(PureNashPairs(project),
            (Pairs{Pair(project, "T1", "T2"), Pair(project, "T2", "T1")}));
  EXPECT_TRUE(PureNashPairs(MatchingPennies()).empty());
}

TEST(GameTest, Symmetry) {
  EXPECT_TRUE(CooperationGame().IsSymmetric());
  EXPECT_TRUE(GroupProject().IsSymmetric());
  EXPECT_FALSE(MatchingPennies().IsSymmetric());
  EXPECT_FALSE(Game::FromMatrices({{1, 2}}, {{2, 1}}).IsSymmetric());
  EXPECT_EQ(CooperationGame().PayoffSpread(), 17);
}

class GamePropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{20261017};
  static constexpr int kIterations = 300;
};

TEST_F(GamePropertyTest, DeviationDominatesOwnPayoffEqualityIffNash) {
  for (int i = 0; i < kIterations; ++i) {
    const Game game = testing::RandomGame(rng_, 4, -5, 5);
    const Pairs nash = PureNashPairs(game);
    for (ActionPair pair : game.Pairs()) {
      const auto d = DeviationPayoffs(game, pair);
      const auto p = game.payoffs(pair);
      ASSERT_GE(d.first, p.first);
      ASSERT_GE(d.second, p.second);
      const bool is_nash =
          std::find(nash.begin(), nash.end(), pair) != nash.end();
      ASSERT_EQ(is_nash, d == p);
    }
  }
}

TEST_F(GamePropertyTest, GoalValueInvariantUnderRotation) {
  for (int i = 0; i < kIterations; ++i) {
    const Game game = testing::RandomGame(rng_, 3, -5, 5);
    const SequencePlan plan = testing::RandomPlan(rng_, game, 0, 4);
    std::vector<ActionPair> pairs = plan.goal().pairs();
    const auto value = GoalValue(game, plan.goal());
    std::rotate(pairs.begin(), pairs.begin() + 1, pairs.end());
    ASSERT_EQ(GoalValue(game, GoalSequence(pairs)), value);
  }
}

TEST_F(GamePropertyTest, ShiftingPayoffsShiftsDeviationAndGoalValue) {
  for (int i = 0; i < kIterations; ++i) {
    const Game game = testing::RandomGame(rng_, 3, -5, 5);
    const Payoff c = 1 + static_cast<Payoff>(rng_() % 7);
    std::vector<Payoff> shifted = game.payoff1().values();
    for (Payoff& v : shifted) v += c;
    const Game moved(game.actions1(), game.actions2(),
                     PayoffMatrix(game.num_rows(), game.num_cols(), shifted),
                     game.payoff2());
    const SequencePlan plan = testing::RandomPlan(rng_, game, 0, 3);
    ASSERT_EQ(GoalValue(moved, plan.goal()).first,
              GoalValue(game, plan.goal()).first + ScaledRational(c));
    ASSERT_EQ(GoalValue(moved, plan.goal()).second,
              GoalValue(game, plan.goal()).second);
    for (ActionPair pair : game.Pairs()) {
      ASSERT_EQ(DeviationPayoffs(moved, pair).first,
                DeviationPayoffs(game, pair).first + c);
    }
  }
}

TEST_F(GamePropertyTest, MaxWelfareEquivariantUnderRelabeling) {
  for (int i = 0; i < kIterations; ++i) {
    const Game game = testing::RandomGame(rng_, 3, -3, 3);
    std::vector<int> rows(game.num_rows()), cols(game.num_cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng_);
    std::shuffle(cols.begin(), cols.end(), rng_);
    // New action r is old action rows[r].
    std::vector<Payoff> p1, p2;
    for (int r = 0; r < game.num_rows(); ++r) {
      for (int c = 0; c < game.num_cols(); ++c) {
        p1.push_back(game.payoff1()(rows[r], cols[c]));
        p2.push_back(game.payoff2()(rows[r], cols[c]));
      }
    }
    const Game permuted(game.actions1(), game.actions2(),
                        PayoffMatrix(game.num_rows(), game.num_cols(), p1),
                        PayoffMatrix(game.num_rows(), game.num_cols(), p2));
    Pairs mapped;
    for (ActionPair pair : MaxWelfarePairs(permuted)) {
      mapped.push_back({rows[pair.row], cols[pair.col]});
    }
    std::sort(mapped.begin(), mapped.end());
    ASSERT_EQ(mapped, MaxWelfarePairs(game));
  }
}

}  // namespace
}  // namespace restarts
