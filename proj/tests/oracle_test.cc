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

#include "restarts/oracle.h"

#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace restarts {
namespace {

using testing::CooperationGame;
using testing::NoseGoes;
using testing::Pair;

GenhazeInstance AlternatingInstance(const Game& game) {
  return DeriveInstance(
      game, GoalSequence({Pair(game, "C1", "D"), Pair(game, "D", "C1")}));
}

TEST(BruteMinHazingTest, ConfirmsCooperationOptimum) {
  const Game game = CooperationGame();
  const OracleResult result = BruteMinHazing(AlternatingInstance(game), 4);
  ASSERT_EQ(result.status, OracleStatus::kOptimal);
  EXPECT_EQ(result.total_sum, ScaledRational(21));
  // Several prefixes reach 21; any of them must be valid.
  EXPECT_FALSE(FindConstraintViolation(AlternatingInstance(game), result.best_prefix));
  EXPECT_GT(result.nodes_visited, 1);
}

TEST(BruteMinHazingTest, DepthZeroAndOne) {
  const Game game = CooperationGame();
  EXPECT_EQ(BruteMinHazing(AlternatingInstance(game), 0).status,
            OracleStatus::kNoneWithinDepth);
  EXPECT_EQ(BruteMinHazing(AlternatingInstance(game), 1).status,
            OracleStatus::kNoneWithinDepth);
  const Game nose = NoseGoes();
  const OracleResult one =
      BruteMinHazing(DeriveInstance(nose, GoalSequence({Pair(nose, "C", "C")})), 1);
  ASSERT_EQ(one.status, OracleStatus::kOptimal);
  EXPECT_EQ(one.total_sum, ScaledRational(143));
  EXPECT_THROW(BruteMinHazing(AlternatingInstance(game), -1), std::invalid_argument);
}

TEST(BruteMinHazingTest, BudgetIsEnforced) {
  const Game game = CooperationGame();
  EXPECT_THROW(BruteMinHazing(AlternatingInstance(game), 6, 5), OracleBudgetExceeded);
}

TEST(BruteMinHazingTest, HandlesNonMaxWelfareGoals) {
  // The DP refuses these; the oracle still searches them.
  const Game game = CooperationGame();
  const GenhazeInstance instance = DeriveInstance(
      game, GoalSequence({Pair(game, "C1", "C1")}), ScaledRational(30));
  const OracleResult result = BruteMinHazing(instance, 3);
  ASSERT_EQ(result.status, OracleStatus::kOptimal);
  // (D,D), (D,C2), (C2,D): totals (7,7) -> (4,15) -> (12,12), beating
  // (D,D), (C2,C2) at 26.
  EXPECT_EQ(result.total_sum, ScaledRational(24));
  const std::vector<ActionPair> expected = {
      Pair(game, "D", "D"), Pair(game, "D", "C2"), Pair(game, "C2", "D")};
  EXPECT_FALSE(FindConstraintViolation(instance, expected));
  EXPECT_FALSE(FindConstraintViolation(instance, result.best_prefix));
}

TEST(FindConstraintViolationTest, ReportsEachKind) {
  const Game game = CooperationGame();
  const GenhazeInstance instance = AlternatingInstance(game);
  const ActionPair dd = Pair(game, "D", "D");
  const ActionPair dc2 = Pair(game, "D", "C2");
  EXPECT_FALSE(FindConstraintViolation(instance, {dd, dc2}));
  EXPECT_TRUE(FindConstraintViolation(instance, {dc2, dd}));
  EXPECT_TRUE(FindConstraintViolation(instance, {dd}));
  EXPECT_TRUE(FindConstraintViolation(instance, {{5, 5}}));
  EXPECT_TRUE(FindConstraintViolation(instance.WithBound(ScaledRational(20)),
                                      {dd, dc2}));
}

TEST(CrossCheckTest, AgreesOnPaperInstances) {
  const Game game = CooperationGame();
  const CrossCheckReport report = CrossCheck(AlternatingInstance(game), 4);
  EXPECT_TRUE(report.match) << report.message;
  EXPECT_TRUE(report.depth_sufficient);
  EXPECT_EQ(report.solver.total_sum, report.oracle.total_sum);

  const CrossCheckReport shallow = CrossCheck(AlternatingInstance(game), 1);
  EXPECT_TRUE(shallow.match) << shallow.message;
  EXPECT_FALSE(shallow.depth_sufficient);
}

TEST(OraclePropertyTest, SolverMatchesOracle) {
  std::mt19937_64 rng(31337);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    auto random = testing::RandomMaxSwInstance(rng, 3, -5, 5, 2, 30);
    if (!random) continue;
    const CrossCheckReport report = CrossCheck(random->instance, 4);
    ASSERT_TRUE(report.match) << report.message;
    if (report.depth_sufficient) ++compared;
  }
  EXPECT_GT(compared, 30);
}

}  // namespace
}  // namespace restarts
