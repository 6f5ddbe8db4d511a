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

#ifndef RESTARTS_STABILITY_H_
#define RESTARTS_STABILITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "restarts/game.h"
#include "restarts/rational.h"

// Stability of eventually periodic sequences in repeated games with
// restarts.
//
// A sequence is stable at discount factor beta when no player gains by
// deviating at some round k (or simply walking away after it) and restarting
// the sequence with a new partner. Writing U for the discounted value of the
// whole sequence and R_k for the value of its tail from round k, the
// condition at round k for player i reduces to
//
//   d_i(sigma_k) + beta * U_i  <=  R_k,i
//
// where d is the deviation payoff. Once the goal cycle is reached R_k only
// depends on the phase of k within the cycle, so T + r checks per player
// decide stability exactly.

namespace restarts {

struct PrefixRun {
  ActionPair pair;
  std::int64_t count = 1;

  friend bool operator==(const PrefixRun&, const PrefixRun&) = default;
};

// A finite description of an infinite sequence: a run-length encoded hazing
// prefix followed by the goal sequence repeated forever.
class SequencePlan {
 public:
  // Throws std::invalid_argument if a run has count < 1.
  SequencePlan(std::vector<PrefixRun> prefix, GoalSequence goal);

  // Run-length encodes an explicit prefix.
  static SequencePlan FromPairs(const std::vector<ActionPair>& prefix,
                                GoalSequence goal);

  const std::vector<PrefixRun>& prefix() const { return prefix_; }
  const GoalSequence& goal() const { return goal_; }

  // T, the number of hazing rounds. This is the cost driver of every check.
  std::int64_t prefix_length() const;
  std::vector<ActionPair> ExpandedPrefix() const;
  // Pair played at round k (0-indexed) of the infinite sequence.
  ActionPair At(std::int64_t k) const;

  friend bool operator==(const SequencePlan&, const SequencePlan&) = default;

 private:
  std::vector<PrefixRun> prefix_;
  GoalSequence goal_;
};

enum class Variant {
  kFixedRole,
  // After a restart the player takes each role with probability 1/2.
  kRandomReassignment,
};

enum class StabilityStatus { kStable, kUnstable, kBoundary };

std::string StatusName(StabilityStatus status);

struct Witness {
  std::int64_t step = 0;
  Player player = Player::kRow;
  // Own action achieving the deviation payoff. When it equals the action in
  // the sequence the witness is a restart without deviating.
  int deviation_action = 0;
  // Gain of the deviation over following the sequence; positive means
  // profitable, zero is an exact tie.
  Rational margin;
};

// Per-round, per-player quantities from a finite-beta check.
struct StepDiagnostic {
  std::int64_t step = 0;
  Player player = Player::kRow;
  Payoff deviation_payoff = 0;
  // Per-round average of a serial deviator who follows the sequence up to
  // round k, takes the deviation payoff there and restarts:
  //   (sum_{t<k} p_i(sigma_t) + d_i(sigma_k)) / (k + 1).
  Rational restart_cycle_average;
  Rational stay_value;      // R_k
  Rational deviate_value;   // d + beta * (restart value)
};

// One comparison of the limit check: accumulated hazing before `step`
// against the threshold required there.
struct LimitCheck {
  std::int64_t step = 0;
  Player player = Player::kRow;
  bool goal_entry = false;
  Rational accumulated;
  Rational required;
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::kStable;
  std::optional<Witness> witness;
  std::vector<StepDiagnostic> diagnostics;  // CheckFinite only
  std::vector<LimitCheck> limit_checks;     // CheckLimit only
};

// Exact check at a rational discount factor 0 < beta < 1. Never returns
// kBoundary: ties satisfy the weak inequality and are stable. Throws
// std::invalid_argument for beta outside (0, 1).
StabilityVerdict CheckFinite(const Game& game, const SequencePlan& plan,
                             const Rational& beta,
                             Variant variant = Variant::kFixedRole);

// Stability for all sufficiently large beta (fixed roles). Running hazing
// totals must strictly exceed the threshold of every prefix pair, and the
// total at goal entry must strictly exceed the goal threshold. A strict
// violation gives kUnstable; otherwise an exact tie gives kBoundary, since the
// strict limit condition fails there while the finite-beta inequality can
// still hold (e.g. when a pure Nash pair is repeated forever).
StabilityVerdict CheckLimit(const Game& game, const SequencePlan& plan);

struct BetaVerdict {
  Rational beta;
  StabilityVerdict verdict;
};

std::vector<BetaVerdict> SweepBeta(const Game& game, const SequencePlan& plan,
                                   const std::vector<Rational>& betas,
                                   Variant variant = Variant::kFixedRole);

// {1 - 2^-k : k = first..last}.
std::vector<Rational> DyadicTailGrid(int first, int last);

}  // namespace restarts

#endif  // RESTARTS_STABILITY_H_
