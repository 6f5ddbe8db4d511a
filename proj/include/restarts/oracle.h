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

#ifndef RESTARTS_ORACLE_H_
#define RESTARTS_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "restarts/genhaze.h"
#include "restarts/solver.h"

// Exhaustive reference search for small minimum-hazing instances. Shares no
// code with the grid search in solver.h.

namespace restarts {

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OracleStatus { kOptimal, kNoneWithinDepth };

std::string OracleStatusName(OracleStatus status);

struct OracleResult {
  OracleStatus status = OracleStatus::kNoneWithinDepth;
  std::vector<ActionPair> best_prefix;
  ScaledRational total_sum;
  std::int64_t nodes_visited = 0;
};

// Depth-first enumeration of every prefix of length <= max_len. A branch is
// cut when a pair is played before its threshold is strictly exceeded or the
// summed hazing exceeds the bound; for max_sw instances also when a total
// goes negative or a pair of totals repeats along the branch. Returns the
// first prefix (in enumeration order) of minimum summed hazing whose totals
// strictly exceed theta. Throws OracleBudgetExceeded after `node_budget`
// nodes.
OracleResult BruteMinHazing(const GenhazeInstance& instance, int max_len,
                            std::int64_t node_budget = kDefaultNodeBudget);

// Checks a prefix against the problem constraints directly: totals before
// each round strictly exceed that round's thresholds, final totals strictly
// exceed theta, final summed hazing is within the bound. Returns a
// description of the first violated constraint, or nullopt.
std::optional<std::string> FindConstraintViolation(
    const GenhazeInstance& instance, const std::vector<ActionPair>& prefix);

struct CrossCheckReport {
  SolveResult solver;
  OracleResult oracle;
  int max_len = 0;
  // The oracle searched at least as deep as the solver's prefix.
  bool depth_sufficient = false;
  bool match = true;
  std::string message;
};

// Runs both searches. A mismatch is reported when both are optimal at
// sufficient depth with different sums, when the oracle finds a prefix the
// solver missed, or when either returns a prefix violating the constraints.
CrossCheckReport CrossCheck(const GenhazeInstance& instance, int max_len,
                            std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace restarts

#endif  // RESTARTS_ORACLE_H_
