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

#ifndef RESTARTS_EXISTENCE_H_
#define RESTARTS_EXISTENCE_H_

#include <optional>
#include <string>
#include <vector>

#include "restarts/game.h"
#include "restarts/stability.h"

// Whether a goal sequence can end some stable sequence, and explicit
// constructions of stable sequences when it can.

namespace restarts {

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

std::string FeasibilityName(Feasibility status);

// v_i - d_i(pair) for each player; positive means the pair undercuts the goal.
struct PairMargin {
  ActionPair pair;
  PerPlayer<ScaledRational> slack;
};

struct FeasibilityVerdict {
  Feasibility status = Feasibility::kUnknown;
  // Set for kFeasible: first pair (row, col order) with d < v for both.
  std::optional<ActionPair> witness;
  std::vector<PairMargin> detail;
};

// kFeasible if some pair has d1 < v1 and d2 < v2 (the goal can then follow a
// long enough run of that pair); kInfeasible if every pair has d1 > v1 or
// d2 > v2 (the first round of any candidate is always deviated from);
// kUnknown when equalities leave neither case applicable.
FeasibilityVerdict GoalFeasibility(const Game& game, const GoalSequence& goal);

// Repeats `pair` T times before the goal, with T the smallest integer such
// that T * delta > r * kappa, delta = min_i (v_i - d_i(pair)) and kappa the
// payoff spread. The result is stable in the limit. Throws
// std::invalid_argument if `pair` does not undercut both goal values.
SequencePlan ConstructWitnessPlan(const Game& game, const GoalSequence& goal,
                                  ActionPair pair);

// For a symmetric game with a maximum-welfare pair a* = (x, y) and some pair
// whose deviation payoffs are both below welfare(a*) / 2, returns the
// alternating goal ((x, y), (y, x)). Both players get the same goal value.
std::optional<GoalSequence> FairAlternatingGoal(const Game& game);

// Repeats the first pure Nash pair forever; stable at every beta.
std::optional<SequencePlan> NashPlan(const Game& game);

}  // namespace restarts

#endif  // RESTARTS_EXISTENCE_H_
