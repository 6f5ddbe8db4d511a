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

#include "restarts/reductions.h"

#include <random>

#include "gtest/gtest.h"
#include "restarts/oracle.h"
#include "restarts/solver.h"

namespace restarts {
namespace {

// Solvable via the reduced game iff the oracle's minimum summed hazing is
// exactly 2B.
bool SolvableViaGame(const UsspInstance& ussp) {
  const ReducedInstance reduced = UsspToGame(ussp);
  const OracleResult result =
      BruteMinHazing(reduced.instance, static_cast<int>(ussp.target) + 2);
  return result.status == OracleStatus::kOptimal &&
         result.total_sum == ScaledRational(2 * ussp.target);
}

TEST(UsspBruteTest, Examples) {
  EXPECT_TRUE(UsspBrute({{3, 5}, 11}));
  EXPECT_FALSE(UsspBrute({{4, 6}, 9}));
  EXPECT_FALSE(UsspBrute({{5}, 7}));
  EXPECT_TRUE(UsspBrute({{5}, 0}));
  EXPECT_FALSE(UsspBrute({{5}, -1}));
  EXPECT_THROW(UsspBrute({{0, 2}, 4}), std::invalid_argument);
  EXPECT_THROW(UsspBrute({{2}, 100}, 10), std::invalid_argument);
}

TEST(UsspToGameTest, Construction) {
  const UsspInstance ussp{{3, 5}, 11};
  EXPECT_EQ(ReductionSentinel(ussp), -14);
  const ReducedInstance reduced = UsspToGame(ussp);
  const Game& game = reduced.game;
  EXPECT_EQ(game.num_rows(), 4);
  EXPECT_TRUE(game.IsSymmetric());
  EXPECT_EQ(game.actions1().front(), "a0");
  EXPECT_EQ(game.payoff1()(0, 0), 11);
  EXPECT_EQ(game.payoff1()(1, 1), 8);
  EXPECT_EQ(game.payoff1()(2, 2), 6);
  EXPECT_EQ(game.payoff1()(3, 0), 21);
  EXPECT_EQ(game.payoff1()(0, 3), -14);
  EXPECT_EQ(reduced.goal, GoalSequence({{0, 0}}));
  EXPECT_EQ(reduced.delta, ScaledRational(22));
  EXPECT_EQ(reduced.instance.bound(), ScaledRational(22));
  EXPECT_TRUE(reduced.instance.max_sw());
  EXPECT_EQ(reduced.instance.theta(),
            (PerPlayer<ScaledRational>{ScaledRational(10), ScaledRational(10)}));
}

TEST(UsspToGameTest, RejectsMalformedInstances) {
  EXPECT_THROW(UsspToGame({{}, 3}), std::invalid_argument);
  EXPECT_THROW(UsspToGame({{2, 0}, 3}), std::invalid_argument);
  EXPECT_THROW(UsspToGame({{2}, 0}), std::invalid_argument);
}

TEST(UsspToGameTest, YesAndNoInstances) {
  EXPECT_TRUE(SolvableViaGame({{3, 5}, 11}));
  EXPECT_FALSE(SolvableViaGame({{4, 6}, 9}));
  const ReducedInstance reduced = UsspToGame({{3, 5}, 11});
  const SolveResult result = SolveDp(reduced.instance);
  ASSERT_EQ(result.status, SolveStatus::kOptimal);
  EXPECT_EQ(result.total_sum, ScaledRational(22));
  EXPECT_EQ(result.totals.first, result.totals.second);
}

TEST(ReductionPropertyTest, IffOnRandomSmallInstances) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::int64_t> value(1, 9);
  std::uniform_int_distribution<std::int64_t> target(1, 15);
  for (int i = 0; i < 150; ++i) {
    UsspInstance ussp;
    ussp.values.resize(count(rng));
    for (auto& b : ussp.values) b = value(rng);
    ussp.target = target(rng);
    ASSERT_EQ(UsspBrute(ussp), SolvableViaGame(ussp))
        << "target " << ussp.target;
  }
}

}  // namespace
}  // namespace restarts
