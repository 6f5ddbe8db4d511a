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

#include <stdexcept>
#include <string>

namespace restarts {

void UsspInstance::Validate() const {
  if (values.empty()) throw std::invalid_argument("USSP: no values");
  for (std::int64_t b : values) {
    if (b < 1) {
      throw std::invalid_argument("USSP: values must be >= 1, got " +
                                  std::to_string(b));
    }
  }
  if (target < 1) throw std::invalid_argument("USSP: target must be >= 1");
}

std::int64_t ReductionSentinel(const UsspInstance& ussp) {
  return -(ussp.target + ussp.values.front());
}

ReducedInstance UsspToGame(const UsspInstance& ussp) {
  ussp.Validate();
  const int n = static_cast<int>(ussp.values.size());
  const int size = n + 2;
  const std::int64_t B = ussp.target;
  const std::int64_t sentinel = ReductionSentinel(ussp);

  std::vector<std::vector<Payoff>> p1(size, std::vector<Payoff>(size, sentinel));
  p1[0][0] = B;
  for (int i = 1; i <= n; ++i) p1[i][i] = B - ussp.values[i - 1];
  p1[n + 1][0] = 2 * B - 1;

  std::vector<std::vector<Payoff>> p2(size, std::vector<Payoff>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) p2[i][j] = p1[j][i];
  }
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) labels.push_back("a" + std::to_string(i));

  Game game(labels, labels, PayoffMatrix::FromRows(p1),
            PayoffMatrix::FromRows(p2));
  GoalSequence goal({ActionPair{0, 0}});
  ScaledRational delta(2 * B);
  GenhazeInstance instance = DeriveInstance(game, goal, delta);
  return {std::move(game), std::move(goal), delta, std::move(instance)};
}

bool UsspBrute(const UsspInstance& ussp, std::int64_t cap) {
  for (std::int64_t b : ussp.values) {
    if (b < 1) throw std::invalid_argument("USSP: values must be >= 1");
  }
  if (ussp.target < 0) return false;
  if (ussp.target > cap) {
    throw std::invalid_argument("USSP target " + std::to_string(ussp.target) +
                                " exceeds cap " + std::to_string(cap));
  }
  std::vector<bool> reachable(ussp.target + 1, false);
  reachable[0] = true;
  for (std::int64_t s = 1; s <= ussp.target; ++s) {
    for (std::int64_t b : ussp.values) {
      if (b <= s && reachable[s - b]) {
        reachable[s] = true;
        break;
      }
    }
  }
  return reachable[ussp.target];
}

}  // namespace restarts
