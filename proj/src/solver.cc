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

#include "restarts/solver.h"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace restarts {
namespace {

constexpr std::int64_t kNone = -1;
// Grids larger than this many cells track visited states in a hash set.
constexpr std::int64_t kDenseGridLimit = std::int64_t{1} << 28;

struct GridState {
  std::int64_t g1;
  std::int64_t g2;
  std::int64_t parent;  // index into the BFS order, kNone for the origin
  int action;           // index into the cost table, -1 for the origin
};

class VisitedSet {
 public:
  explicit VisitedSet(std::int64_t side) : side_(side) {
    if (side > 0 && side <= kDenseGridLimit / side) {
      dense_.assign(static_cast<std::size_t>(side * side), false);
    }
  }

  // Returns false if already present.
  bool Insert(std::int64_t g1, std::int64_t g2) {
    const std::int64_t key = g1 * side_ + g2;
    if (!dense_.empty()) {
      if (dense_[key]) return false;
      dense_[key] = true;
      return true;
    }
    return sparse_.insert(key).second;
  }

 private:
  std::int64_t side_;
  std::vector<bool> dense_;
  std::unordered_set<std::int64_t> sparse_;
};

}  // namespace

std::string SolveStatusName(SolveStatus status) {
  return status == SolveStatus::kOptimal ? "optimal" : "no_solution_within_bound";
}

std::int64_t SummedHazing(std::int64_t g1, std::int64_t g2) { return g1 + g2; }

SolveResult SolveDp(const GenhazeInstance& instance,
                    const HazingObjective& objective) {
  if (!instance.max_sw()) {
    throw std::invalid_argument(
        "SolveDp requires a goal made of maximum-welfare pairs (max_sw)");
  }
  const std::int64_t budget = instance.bound().num();
  if (budget < 0) throw std::invalid_argument("SolveDp: negative bound");
  const std::int64_t scale = instance.scale();
  const std::int64_t theta1 = instance.theta().first.num();
  const std::int64_t theta2 = instance.theta().second.num();
  const std::vector<PairCost>& costs = instance.costs();

  std::vector<GridState> order;
  VisitedSet visited(budget + 1);
  visited.Insert(0, 0);
  order.push_back({0, 0, kNone, -1});

  std::int64_t best = kNone;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  for (std::size_t head = 0; head < order.size(); ++head) {
    const GridState state = order[head];
    if (state.g1 > theta1 && state.g2 > theta2) {
      // Terminal: successors cannot lower the objective, so never expand.
      const std::int64_t cost = objective(state.g1, state.g2);
      if (cost < best_cost) {
        best_cost = cost;
        best = static_cast<std::int64_t>(head);
      }
      continue;
    }
    for (std::size_t a = 0; a < costs.size(); ++a) {
      const PairCost& c = costs[a];
      if (!(state.g1 > c.threshold.first.num() &&
            state.g2 > c.threshold.second.num())) {
        continue;
      }
      const std::int64_t n1 = state.g1 + c.hazing.first.num();
      const std::int64_t n2 = state.g2 + c.hazing.second.num();
      if (n1 < 0 || n2 < 0 || n1 + n2 > budget) continue;
      if (!visited.Insert(n1, n2)) continue;
      order.push_back({n1, n2, static_cast<std::int64_t>(head),
                       static_cast<int>(a)});
    }
  }

  SolveResult result;
  result.states_explored = static_cast<std::int64_t>(order.size());
  if (best == kNone) {
    result.status = SolveStatus::kNoSolutionWithinBound;
    result.totals = {ScaledRational(0, scale), ScaledRational(0, scale)};
    result.total_sum = ScaledRational(0, scale);
    return result;
  }
  result.status = SolveStatus::kOptimal;
  for (std::int64_t i = best; order[i].parent != kNone; i = order[i].parent) {
    result.prefix.push_back(costs[order[i].action].pair);
  }
  std::reverse(result.prefix.begin(), result.prefix.end());
  const GridState& end = order[best];
  result.totals = {ScaledRational(end.g1, scale), ScaledRational(end.g2, scale)};
  result.total_sum = ScaledRational(end.g1 + end.g2, scale);
  return result;
}

SequencePlan AssembleAndVerify(const Game& game, const GoalSequence& goal,
                               const SolveResult& result) {
  if (result.status != SolveStatus::kOptimal) {
    throw std::invalid_argument("AssembleAndVerify needs an optimal result");
  }
  SequencePlan plan = SequencePlan::FromPairs(result.prefix, goal);
  StabilityVerdict verdict = CheckLimit(game, plan);
  if (verdict.status != StabilityStatus::kStable) {
    throw VerificationFailure("solver prefix is " + StatusName(verdict.status) +
                              " in the limit at step " +
                              std::to_string(verdict.witness->step));
  }
  return plan;
}

}  // namespace restarts
