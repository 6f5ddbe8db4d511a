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

#ifndef RESTARTS_REDUCTIONS_H_
#define RESTARTS_REDUCTIONS_H_

#include <cstdint>
#include <vector>

#include "restarts/game.h"
#include "restarts/genhaze.h"

// Unbounded subset-sum (USSP) -> minimum hazing. Given values b_1..b_n and a
// target B, the symmetric game on actions a_0..a_{n+1} has
//
//   p1(a_0, a_0) = B,  p1(a_i, a_i) = B - b_i,  p1(a_{n+1}, a_0) = 2B - 1,
//
// and every other entry set to the sentinel -(B + b_1). Repeating (a_0, a_0)
// as the goal gives theta = (B - 1, B - 1), each diagonal pair (a_i, a_i)
// hazes both players by b_i with a negative threshold, and any prefix whose
// totals reach exactly (B, B) spells out a USSP solution.

namespace restarts {

inline constexpr std::int64_t kDefaultUsspCap = 1'000'000;

struct UsspInstance {
  std::vector<std::int64_t> values;
  std::int64_t target = 1;

  // Throws std::invalid_argument unless values is nonempty, every value is
  // >= 1 and target >= 1.
  void Validate() const;

  friend bool operator==(const UsspInstance&, const UsspInstance&) = default;
};

struct ReducedInstance {
  Game game;
  GoalSequence goal;
  // Budget on the summed hazing H1 + H2: 2B, since the construction hazes
  // both players equally and a solution hazes each by exactly B.
  ScaledRational delta;
  GenhazeInstance instance;
};

// The sentinel standing in for an unreachable payoff: -(B + b_1).
std::int64_t ReductionSentinel(const UsspInstance& ussp);

ReducedInstance UsspToGame(const UsspInstance& ussp);

// Reachability of the target by a nonnegative integer combination of the
// values. Throws std::invalid_argument if the target exceeds `cap`.
bool UsspBrute(const UsspInstance& ussp, std::int64_t cap = kDefaultUsspCap);

}  // namespace restarts

#endif  // RESTARTS_REDUCTIONS_H_
