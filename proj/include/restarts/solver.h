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

#ifndef RESTARTS_SOLVER_H_
#define RESTARTS_SOLVER_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "restarts/game.h"
#include "restarts/genhaze.h"
#include "restarts/stability.h"

// Minimum-hazing prefixes for goals made of maximum-welfare pairs.
//
// With such a goal every pair has h1 + h2 >= 0, so the summed total hazing
// never decreases along a prefix. A minimum prefix can be taken to keep both
// totals in [0, B], to never revisit a pair of totals, and hence to live on
// the (rB + 1)^2 grid of scaled totals. The solver runs a breadth-first
// search over that grid from (0, 0).

namespace restarts {

enum class SolveStatus { kOptimal, kNoSolutionWithinBound };

std::string SolveStatusName(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kNoSolutionWithinBound;
  std::vector<ActionPair> prefix;
  PerPlayer<ScaledRational> totals;
  ScaledRational total_sum;
  std::int64_t states_explored = 0;
};

// Scaled totals (g1, g2) -> cost to minimize over terminal states.
using HazingObjective = std::function<std::int64_t(std::int64_t, std::int64_t)>;

// H1 + H2, the default objective.
std::int64_t SummedHazing(std::int64_t g1, std::int64_t g2);

// Throws std::invalid_argument if !instance.max_sw() or the bound is
// negative. `objective` must not decrease along any applicable move for the
// search to be exact; the summed objective satisfies this on max_sw
// instances.
SolveResult SolveDp(const GenhazeInstance& instance,
                    const HazingObjective& objective = SummedHazing);

class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Builds the plan (prefix, goal) for an optimal result and confirms it is
// stable in the limit. Throws VerificationFailure otherwise; that indicates a
// bug, not a property of the input.
SequencePlan AssembleAndVerify(const Game& game, const GoalSequence& goal,
                               const SolveResult& result);

}  // namespace restarts

#endif  // RESTARTS_SOLVER_H_
